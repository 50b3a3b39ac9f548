// Copyright 2026 The corpkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "corpkit/error.hpp"
#include "corpkit/stats.hpp"
#include "doctest.h"
#include "oracle/oracles.hpp"

using namespace corpkit;

TEST_CASE("chi2_2x2: examples") {
  const auto r = chi2_2x2(30, 70, 10, 90);
  CHECK(r.statistic == 12.5);
  CHECK(r.degrees_of_freedom == 1);
  // erfc(2.5), 34 digits from an arbitrary-precision evaluation.
  CHECK(std::abs(r.p_value - 4.069520174449589395e-4) < 1e-15);
  CHECK(std::abs(r.p_value - oracle::chi2_df1_tail(12.5)) < 1e-6 * r.p_value);

  const auto same = chi2_2x2(30, 70, 30, 70);
  CHECK(same.statistic == 0.0);
  CHECK(same.p_value == 1.0);

  CHECK_THROWS_AS(chi2_2x2(0, 0, 3, 4), DomainError);
  CHECK_THROWS_AS(chi2_2x2(1, 0, 3, 0), DomainError);
}

TEST_CASE("chi2 survival function") {
  CHECK(chi2_survival_df1(0) == 1.0);
  CHECK(std::abs(chi2_survival_df1(3.84) - 0.05004352124870510) < 1e-15);
  CHECK(std::abs(chi2_survival_df1(50) - 1.537459794428035e-12) < 1e-24);
  double prev = 1.0;
  for (double x = 0.01; x <= 100.0; x += 0.37) {
    const double p = chi2_survival_df1(x);
    CHECK(p < prev);
    CHECK(p >= 0.0);
    CHECK(std::abs(p - oracle::chi2_df1_tail(x)) < 1e-10);
    prev = p;
  }
}

TEST_CASE("chi2_2x2 agrees with the expected-count form") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> cell(0, 5000);
  for (int i = 0; i < 3000; ++i) {
    std::uint64_t a = cell(rng), b = cell(rng), c = cell(rng), d = cell(rng);
    if (a + b == 0 || c + d == 0 || a + c == 0 || b + d == 0) continue;
    const auto r = chi2_2x2(a, b, c, d);
    const double o = oracle::chi2_by_expected(a, b, c, d);
    CHECK(r.statistic == doctest::Approx(o).epsilon(1e-9));
    // Transposition, row swap and column swap.
    CHECK(chi2_2x2(a, c, b, d).statistic == r.statistic);
    CHECK(chi2_2x2(c, d, a, b).statistic == r.statistic);
    CHECK(chi2_2x2(b, a, d, c).statistic == r.statistic);
    // Scaling every cell by k scales the statistic by k.
    CHECK(chi2_2x2(4 * a, 4 * b, 4 * c, 4 * d).statistic ==
          doctest::Approx(4 * r.statistic).epsilon(1e-12));
    CHECK(r.p_value >= 0.0);
    CHECK(r.p_value <= 1.0);
  }
}

TEST_CASE("proportion_test") {
  CHECK(proportion_test(30, 100, 10, 100).statistic == 12.5);
  CHECK(proportion_test(5, 50, 10, 100).statistic == 0.0);
  CHECK(proportion_test(10, 100, 30, 100).statistic == proportion_test(30, 100, 10, 100).statistic);
  CHECK_THROWS_AS(proportion_test(5, 4, 1, 10), DomainError);
  CHECK_THROWS_AS(proportion_test(1, 0, 1, 10), DomainError);
}

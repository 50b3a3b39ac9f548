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

#include "corpkit/stats.hpp"

#include <cmath>

#include "corpkit/error.hpp"

namespace corpkit {

double chi2_survival_df1(double statistic) {
  if (!(statistic > 0)) return 1.0;
  return std::erfc(std::sqrt(statistic / 2.0));
}

Chi2Result chi2_2x2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  using R = long double;
  const R row1 = R(a) + R(b), row2 = R(c) + R(d);
  const R col1 = R(a) + R(c), col2 = R(b) + R(d);
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
    throw DomainError("chi-squared table has a zero marginal total");
  }
  const R n = row1 + row2;
  const R diff = R(a) * R(d) - R(b) * R(c);
  // Products of marginal pairs commute exactly, so transposing the table or
  // swapping rows/columns yields a bit-identical statistic.
  const R stat = n * diff * diff / ((row1 * row2) * (col1 * col2));
  Chi2Result r;
  r.statistic = static_cast<double>(stat);
  r.degrees_of_freedom = 1;
  r.p_value = chi2_survival_df1(r.statistic);
  return r;
}

Chi2Result proportion_test(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2, std::uint64_t n2) {
  if (k1 > n1 || k2 > n2) throw DomainError("proportion test needs k <= n");
  if (n1 == 0 || n2 == 0) throw DomainError("proportion test needs non-empty groups");
  return chi2_2x2(k1, n1 - k1, k2, n2 - k2);
}

}  // namespace corpkit

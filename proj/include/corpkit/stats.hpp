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

#pragma once

#include <cstdint>

namespace corpkit {

struct Chi2Result {
  double statistic = 0;
  int degrees_of_freedom = 1;
  double p_value = 1;
};

// Upper tail of the chi-squared distribution with one degree of freedom:
// erfc(sqrt(x / 2)).
double chi2_survival_df1(double statistic);

// Pearson chi-squared on [[a, b], [c, d]], no continuity correction.
// Throws DomainError when a row or column total is zero.
Chi2Result chi2_2x2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

// k1 of n1 versus k2 of n2: chi2_2x2(k1, n1 - k1, k2, n2 - k2).
Chi2Result proportion_test(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2, std::uint64_t n2);

}  // namespace corpkit

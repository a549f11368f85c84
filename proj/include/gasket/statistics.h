// Copyright 2026 The Gasket Walk Authors
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

#ifndef GASKET_STATISTICS_H_
#define GASKET_STATISTICS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gasket {

// Two-sided tail probability of a standard normal beyond |z|.
double normal_two_sided_p(double z);

// Upper tail P(X >= stat) of a chi-square with dof degrees of freedom.
double chi_square_upper_p(double stat, double dof);

// Two-sided tail mass of a 4-standard-error bound.
double four_sigma_alpha();

// A comparison with raw two-sided p-value p passes among m simultaneous
// comparisons iff p >= four_sigma_alpha() / m. For m = 1 this is |z| <= 4.
bool bonferroni_pass(double p_value, std::size_t comparisons);

// Binomial standard error sqrt(p (1 - p) / n).
double binomial_se(double p, double n);

// Pearson statistic of observed counts against expected probabilities.
double chi_square_statistic(const std::vector<std::uint64_t>& counts,
                            const std::vector<double>& expected_probs);

}  // namespace gasket

#endif  // GASKET_STATISTICS_H_

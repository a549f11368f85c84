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

#include "gasket/statistics.h"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace gasket {

double normal_two_sided_p(double z) { return std::erfc(std::fabs(z) / std::sqrt(2.0)); }

double chi_square_upper_p(double stat, double dof) {
  if (dof <= 0) throw std::invalid_argument("chi-square needs positive degrees of freedom");
  if (stat <= 0) return 1.0;
  return boost::math::gamma_q(dof / 2, stat / 2);
}

double four_sigma_alpha() { return normal_two_sided_p(4.0); }

bool bonferroni_pass(double p_value, std::size_t comparisons) {
  if (comparisons == 0) return true;
  return p_value >= four_sigma_alpha() / static_cast<double>(comparisons);
}

double binomial_se(double p, double n) { return std::sqrt(p * (1 - p) / n); }

double chi_square_statistic(const std::vector<std::uint64_t>& counts,
                            const std::vector<double>& expected_probs) {
  if (counts.size() != expected_probs.size()) {
    throw std::invalid_argument("count and probability vectors differ in size");
  }
  double total = 0;
  for (std::uint64_t c : counts) total += static_cast<double>(c);
  double stat = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double e = total * expected_probs[k];
    if (e <= 0) {
      if (counts[k] != 0) return INFINITY;
      continue;
    }
    const double diff = static_cast<double>(counts[k]) - e;
    stat += diff * diff / e;
  }
  return stat;
}

}  // namespace gasket

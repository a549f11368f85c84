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

#include "gasket/linear_solver.h"

#include <algorithm>
#include <cmath>

namespace gasket {

double gauss_seidel(const std::vector<std::map<std::size_t, long double>>& rows,
                    const std::vector<long double>& rhs, std::vector<long double>& x,
                    double tolerance, std::size_t max_sweeps) {
  const std::size_t n = rows.size();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side size mismatch");
  x.resize(n, 0.0L);
  long double scale = 0;
  for (long double v : rhs) scale = std::max(scale, std::fabs(v));
  if (scale == 0) scale = 1;
  auto residual = [&] {
    long double worst = 0;
    for (std::size_t r = 0; r < n; ++r) {
      long double s = rhs[r];
      for (const auto& [c, v] : rows[r]) s -= v * x[c];
      worst = std::max(worst, std::fabs(s));
    }
    return static_cast<double>(worst / scale);
  };
  double res = residual();
  for (std::size_t sweep = 0; sweep < max_sweeps && res > tolerance; ++sweep) {
    for (std::size_t r = 0; r < n; ++r) {
      long double s = rhs[r];
      long double diag = 0;
      for (const auto& [c, v] : rows[r]) {
        if (c == r) {
          diag = v;
        } else {
          s -= v * x[c];
        }
      }
      if (diag == 0) throw SingularSystem("zero diagonal in Gauss-Seidel");
      x[r] = s / diag;
    }
    if (sweep % 8 == 7) res = residual();
  }
  return residual();
}

}  // namespace gasket

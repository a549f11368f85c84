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

#ifndef GASKET_LINEAR_SOLVER_H_
#define GASKET_LINEAR_SOLVER_H_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gasket {

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse LU factorization with diagonal pivoting in Markowitz order. Meant
// for nonsingular M-matrices such as I - Q of a killed Markov chain, where
// every Schur complement keeps a nonzero diagonal. Over an exact field
// (Rational) the factors and solutions are exact.
template <typename T>
class SparseLU {
 public:
  using Row = std::map<std::size_t, T>;

  explicit SparseLU(std::vector<Row> rows);

  std::size_t size() const { return upper_.size(); }
  // Stored off-diagonal entries of L and U after fill-in.
  std::size_t factor_entries() const;

  std::vector<T> solve(std::vector<T> rhs) const;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::pair<std::size_t, T>>> lower_;
  std::vector<std::vector<std::pair<std::size_t, T>>> upper_;
  std::vector<T> diagonal_;
};

template <typename T>
SparseLU<T>::SparseLU(std::vector<Row> rows)
    : lower_(rows.size()), upper_(rows.size()), diagonal_(rows.size()) {
  const std::size_t n = rows.size();
  std::vector<std::set<std::size_t>> col_rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto it = rows[r].begin(); it != rows[r].end();) {
      if (it->first >= n) throw std::invalid_argument("column index out of range");
      if (it->second == 0) {
        it = rows[r].erase(it);
        continue;
      }
      col_rows[it->first].insert(r);
      ++it;
    }
  }
  std::vector<bool> active(n, true);
  order_.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    std::size_t best = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (!active[p]) continue;
      auto diag = rows[p].find(p);
      if (diag == rows[p].end()) continue;
      const std::size_t cost = (rows[p].size() - 1) * (col_rows[p].size() - 1);
      if (pivot == n || cost < best) {
        pivot = p;
        best = cost;
        if (cost == 0) break;
      }
    }
    if (pivot == n) throw SingularSystem("no nonzero diagonal pivot available");
    const std::size_t p = pivot;
    const T a = rows[p].at(p);
    const std::vector<std::size_t> targets(col_rows[p].begin(), col_rows[p].end());
    for (std::size_t r : targets) {
      if (r == p) continue;
      const T f = rows[r].at(p) / a;
      lower_[p].emplace_back(r, f);
      rows[r].erase(p);
      for (const auto& [c, v] : rows[p]) {
        if (c == p) continue;
        T& entry = rows[r][c];
        entry -= f * v;
        if (entry == 0) {
          rows[r].erase(c);
          col_rows[c].erase(r);
        } else {
          col_rows[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : rows[p]) {
      col_rows[c].erase(p);
      if (c == p) {
        diagonal_[p] = v;
      } else {
        upper_[p].emplace_back(c, v);
      }
    }
    col_rows[p].clear();
    rows[p].clear();
    active[p] = false;
    order_.push_back(p);
  }
}

template <typename T>
std::size_t SparseLU<T>::factor_entries() const {
  std::size_t total = 0;
  for (const auto& l : lower_) total += l.size();
  for (const auto& u : upper_) total += u.size();
  return total;
}

template <typename T>
std::vector<T> SparseLU<T>::solve(std::vector<T> b) const {
  if (b.size() != size()) throw std::invalid_argument("right-hand side size mismatch");
  for (std::size_t p : order_) {
    if (b[p] == 0) continue;
    for (const auto& [r, f] : lower_[p]) b[r] -= f * b[p];
  }
  std::vector<T> x(size());
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const std::size_t p = *it;
    T s = b[p];
    for (const auto& [c, v] : upper_[p]) s -= v * x[c];
    x[p] = s / diagonal_[p];
  }
  return x;
}

// Gauss–Seidel for a symmetric positive definite sparse system. Iterates
// until the max-norm residual is below tolerance (relative to the max-norm
// of rhs) or max_sweeps is reached. Returns the final relative residual.
double gauss_seidel(const std::vector<std::map<std::size_t, long double>>& rows,
                    const std::vector<long double>& rhs, std::vector<long double>& x,
                    double tolerance, std::size_t max_sweeps);

}  // namespace gasket

#endif  // GASKET_LINEAR_SOLVER_H_

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

#include "gasket/exact.h"

#include <algorithm>
#include <string>

#include "gasket/graph.h"
#include "gasket/linear_solver.h"
#include "gasket/permutation.h"

namespace gasket {
namespace {

std::vector<Word> ball_states(std::size_t radius, const GasketConfig& cfg) {
  std::vector<Word> states;
  for (std::size_t level = 0; level < radius; ++level) {
    for (Word& w : words_of_length(level, cfg)) states.push_back(std::move(w));
  }
  return states;
}

void check_budget(std::size_t states, const SolverBudget& budget) {
  if (states > budget.max_exact_states) {
    throw BudgetExceeded("exact solve needs " + std::to_string(states) +
                         " states, budget is " +
                         std::to_string(budget.max_exact_states));
  }
}

void check_start(const Word& start, std::size_t level, const GasketConfig& cfg) {
  validate(start, cfg);
  if (start.size() >= level) {
    throw std::invalid_argument("start must be strictly shallower than the exit level");
  }
}

Rational inverse_degree(const Word& x, const GasketConfig& cfg) {
  return Rational(1, degree(x, cfg));
}

}  // namespace

Rational ExactDist::probability(const Word& w) const {
  auto it = std::lower_bound(support.begin(), support.end(), w);
  if (it == support.end() || *it != w) return 0;
  return probs[it - support.begin()];
}

Rational ExactDist::total() const {
  Rational sum = 0;
  for (const Rational& p : probs) sum += p;
  return sum;
}

ExactDist exit_distribution(const Word& start, std::size_t level, const GasketConfig& cfg,
                            const SolverBudget& budget) {
  check_start(start, level, cfg);
  const std::size_t n = ball_size(level, cfg);
  check_budget(n, budget);
  // Row y: g(y) - sum_{x ~ y, |x| < N} g(x) / deg(x) = [y == start].
  std::vector<SparseLU<Rational>::Row> rows(n);
  for (std::size_t y = 0; y < n; ++y) rows[y][y] = 1;
  for (const Word& x : ball_states(level, cfg)) {
    const std::size_t ix = shortlex_index(x, cfg);
    const Rational w = inverse_degree(x, cfg);
    for (const Word& y : neighbors(x, cfg).all()) {
      if (y.size() < level) rows[shortlex_index(y, cfg)][ix] -= w;
    }
  }
  std::vector<Rational> rhs(n, 0);
  rhs[shortlex_index(start, cfg)] = 1;
  const std::vector<Rational> visits = SparseLU<Rational>(std::move(rows)).solve(std::move(rhs));

  ExactDist dist;
  dist.level = level;
  dist.support = words_of_length(level, cfg);
  dist.probs.reserve(dist.support.size());
  for (const Word& b : dist.support) {
    const Word parent = ancestor(b);
    dist.probs.push_back(visits[shortlex_index(parent, cfg)] * inverse_degree(parent, cfg));
  }
  return dist;
}

ApproxDist exit_distribution_approx(const Word& start, std::size_t level,
                                    const GasketConfig& cfg, const SolverBudget& budget) {
  check_start(start, level, cfg);
  const std::size_t n = ball_size(level, cfg);
  std::vector<std::map<std::size_t, long double>> rows(n);
  for (const Word& x : ball_states(level, cfg)) {
    const std::size_t ix = shortlex_index(x, cfg);
    rows[ix][ix] = degree(x, cfg);
    for (const Word& y : neighbors(x, cfg).all()) {
      if (y.size() < level) rows[ix][shortlex_index(y, cfg)] -= 1.0L;
    }
  }
  std::vector<long double> rhs(n, 0.0L), u;
  rhs[shortlex_index(start, cfg)] = 1.0L;
  ApproxDist dist;
  dist.level = level;
  dist.residual = gauss_seidel(rows, rhs, u, budget.tolerance, budget.max_sweeps);
  dist.support = words_of_length(level, cfg);
  for (const Word& b : dist.support) {
    dist.probs.push_back(static_cast<double>(u[shortlex_index(ancestor(b), cfg)]));
  }
  return dist;
}

std::map<Word, Rational> exit_law_from_set(const Word& start, const std::vector<Word>& region,
                                           const GasketConfig& cfg) {
  std::vector<Word> states = region;
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  auto index_of = [&](const Word& w) -> std::ptrdiff_t {
    auto it = std::lower_bound(states.begin(), states.end(), w);
    return (it != states.end() && *it == w) ? it - states.begin() : -1;
  };
  const std::ptrdiff_t s = index_of(start);
  if (s < 0) throw std::invalid_argument("start is not in the region");
  const std::size_t n = states.size();
  std::vector<SparseLU<Rational>::Row> rows(n);
  for (std::size_t y = 0; y < n; ++y) rows[y][y] = 1;
  for (std::size_t ix = 0; ix < n; ++ix) {
    const Rational w = inverse_degree(states[ix], cfg);
    for (const Word& y : neighbors(states[ix], cfg).all()) {
      if (std::ptrdiff_t iy = index_of(y); iy >= 0) rows[iy][ix] -= w;
    }
  }
  std::vector<Rational> rhs(n, 0);
  rhs[s] = 1;
  const std::vector<Rational> visits = SparseLU<Rational>(std::move(rows)).solve(std::move(rhs));
  std::map<Word, Rational> out;
  for (std::size_t ix = 0; ix < n; ++ix) {
    if (visits[ix] == 0) continue;
    const Rational w = visits[ix] * inverse_degree(states[ix], cfg);
    for (const Word& y : neighbors(states[ix], cfg).all()) {
      if (index_of(y) < 0) out[y] += w;
    }
  }
  return out;
}

std::map<Word, std::vector<Rational>> timed_exit_law_from_set(
    const Word& start, const std::vector<Word>& region, std::size_t horizon,
    const GasketConfig& cfg) {
  std::vector<Word> states = region;
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  if (!std::binary_search(states.begin(), states.end(), start)) {
    throw std::invalid_argument("start is not in the region");
  }
  std::map<Word, std::vector<Rational>> out;
  std::map<Word, Rational> mass{{start, 1}};
  for (std::size_t t = 1; t <= horizon && !mass.empty(); ++t) {
    std::map<Word, Rational> next;
    for (const auto& [x, m] : mass) {
      const Rational w = m * inverse_degree(x, cfg);
      for (const Word& y : neighbors(x, cfg).all()) {
        if (std::binary_search(states.begin(), states.end(), y)) {
          next[y] += w;
        } else {
          auto& series = out[y];
          series.resize(horizon, 0);
          series[t - 1] += w;
        }
      }
    }
    mass = std::move(next);
  }
  return out;
}

std::vector<Rational> first_step_system(const GasketConfig& cfg, Symbol i, Symbol a) {
  if (i >= cfg.alphabet_size() || a >= cfg.alphabet_size()) {
    throw std::invalid_argument("symbol out of range");
  }
  std::vector<Word> targets;
  for (int j = 0; j < cfg.alphabet_size(); ++j) {
    targets.push_back(act_word(Permutation::reflection(i, static_cast<Symbol>(j), cfg),
                               Word{i, a}));
  }
  std::sort(targets.begin(), targets.end());
  // States: root (index 0) and the level-1 words j (index j + 1).
  const std::size_t n = cfg.alphabet_size() + 1;
  std::vector<SparseLU<Rational>::Row> rows(n);
  std::vector<Rational> rhs(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const Word z = s == 0 ? Word() : Word{static_cast<Symbol>(s - 1)};
    const Rational w = inverse_degree(z, cfg);
    rows[s][s] += 1;
    for (const Word& y : neighbors(z, cfg).all()) {
      if (y.size() == 2) {
        if (std::binary_search(targets.begin(), targets.end(), y)) rhs[s] += w;
      } else {
        rows[s][y.is_root() ? 0 : y.front() + 1] -= w;
      }
    }
  }
  return SparseLU<Rational>(std::move(rows)).solve(std::move(rhs));
}

TruncatedGreen::TruncatedGreen(std::size_t radius, const GasketConfig& cfg, bool exact,
                               std::vector<Word> states, std::vector<Rational> exact_values,
                               std::vector<long double> approx_values)
    : radius_(radius),
      cfg_(cfg),
      exact_(exact),
      states_(std::move(states)),
      exact_values_(std::move(exact_values)),
      approx_values_(std::move(approx_values)) {}

std::size_t TruncatedGreen::index(const Word& x) const {
  if (x.size() >= radius_) throw std::out_of_range("word outside the killing radius");
  return shortlex_index(x, cfg_);
}

const Rational& TruncatedGreen::at(const Word& x, const Word& y) const {
  if (!exact_) throw std::logic_error("Green function was computed approximately");
  return exact_values_[index(x) * states_.size() + index(y)];
}

long double TruncatedGreen::value(const Word& x, const Word& y) const {
  const std::size_t k = index(x) * states_.size() + index(y);
  return exact_ ? static_cast<long double>(exact_values_[k].get_d()) : approx_values_[k];
}

TruncatedGreen truncated_green(std::size_t radius, const GasketConfig& cfg,
                               const SolverBudget& budget) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  std::vector<Word> states = ball_states(radius, cfg);
  const std::size_t n = states.size();
  if (n <= budget.max_exact_states) {
    // (I - Q) G = I, one column per target.
    std::vector<SparseLU<Rational>::Row> rows(n);
    for (std::size_t ix = 0; ix < n; ++ix) {
      rows[ix][ix] = 1;
      const Rational w = inverse_degree(states[ix], cfg);
      for (const Word& y : neighbors(states[ix], cfg).all()) {
        if (y.size() < radius) rows[ix][shortlex_index(y, cfg)] -= w;
      }
    }
    const SparseLU<Rational> lu(std::move(rows));
    std::vector<Rational> values(n * n);
    for (std::size_t iy = 0; iy < n; ++iy) {
      std::vector<Rational> e(n, 0);
      e[iy] = 1;
      const std::vector<Rational> column = lu.solve(std::move(e));
      for (std::size_t ix = 0; ix < n; ++ix) values[ix * n + iy] = column[ix];
    }
    return TruncatedGreen(radius, cfg, true, std::move(states), std::move(values), {});
  }
  // Symmetric form: G(x, y) = deg(y) (D - A)^{-1}(x, y).
  std::vector<std::map<std::size_t, long double>> rows(n);
  for (std::size_t ix = 0; ix < n; ++ix) {
    rows[ix][ix] = degree(states[ix], cfg);
    for (const Word& y : neighbors(states[ix], cfg).all()) {
      if (y.size() < radius) rows[ix][shortlex_index(y, cfg)] -= 1.0L;
    }
  }
  std::vector<long double> values(n * n);
  for (std::size_t iy = 0; iy < n; ++iy) {
    std::vector<long double> e(n, 0.0L), u;
    e[iy] = 1.0L;
    const double res = gauss_seidel(rows, e, u, budget.tolerance, budget.max_sweeps);
    if (res > budget.tolerance) {
      throw BudgetExceeded("Green function iteration did not reach tolerance");
    }
    const long double dy = degree(states[iy], cfg);
    for (std::size_t ix = 0; ix < n; ++ix) values[ix * n + iy] = u[ix] * dy;
  }
  return TruncatedGreen(radius, cfg, false, std::move(states), {}, std::move(values));
}

Rational martin_kernel(const TruncatedGreen& green, const Word& x, const Word& y) {
  const Rational& denom = green.at(Word(), y);
  if (denom == 0) throw std::domain_error("G_R(root, y) vanished");
  Rational k = green.at(x, y) / denom;
  k.canonicalize();
  return k;
}

long double martin_kernel_value(const TruncatedGreen& green, const Word& x, const Word& y) {
  return green.value(x, y) / green.value(Word(), y);
}

}  // namespace gasket

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

#ifndef GASKET_EXACT_H_
#define GASKET_EXACT_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "gasket/config.h"
#include "gasket/rational.h"
#include "gasket/word.h"

namespace gasket {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverBudget {
  // Largest transient state count solved over the rationals.
  std::size_t max_exact_states = 20000;
  // Fallback iteration controls.
  double tolerance = 1e-12;
  std::size_t max_sweeps = 200000;
};

// Exact law of a walk's position at a hitting time, over words of one length.
struct ExactDist {
  std::size_t level = 0;
  std::vector<Word> support;  // lexicographic
  std::vector<Rational> probs;

  Rational probability(const Word& w) const;
  Rational total() const;
};

// Floating-point counterpart for systems beyond the exact budget.
struct ApproxDist {
  std::size_t level = 0;
  std::vector<Word> support;
  std::vector<double> probs;
  double residual = 0;  // relative max-norm residual of the solved system
};

// Law of Z_{τ_N} from `start`: the walk is killed on first reaching length N.
// Solves the occupation-measure system (I - Q)^T g = e_start over the
// |x| < N states; P(Z_{τ_N} = b) = g(b⁻) / deg(b⁻).
// Throws std::invalid_argument if |start| >= N and BudgetExceeded if the
// state count is over budget.max_exact_states.
ExactDist exit_distribution(const Word& start, std::size_t level, const GasketConfig& cfg,
                            const SolverBudget& budget = {});

// Same law by Gauss–Seidel on the symmetric form (D - A) u = e_start.
ApproxDist exit_distribution_approx(const Word& start, std::size_t level,
                                    const GasketConfig& cfg, const SolverBudget& budget = {});

// Exit law of the walk started at `start` and stopped on first leaving the
// finite vertex set `region` (start must be in region). Keys are exit
// vertices.
std::map<Word, Rational> exit_law_from_set(const Word& start, const std::vector<Word>& region,
                                           const GasketConfig& cfg);

// Time-resolved version: result[b][t-1] = P(first exit at step t, at b) for
// t = 1..horizon.
std::map<Word, std::vector<Rational>> timed_exit_law_from_set(
    const Word& start, const std::vector<Word>& region, std::size_t horizon,
    const GasketConfig& cfg);

// First-step system for q_z = P_z(Z_{τ_2} ∈ B), B = {R_ij(i·a) : j = 0..d},
// over the states root, 0, ..., d. Returns (q_root, q_0, ..., q_d).
std::vector<Rational> first_step_system(const GasketConfig& cfg, Symbol i = 0, Symbol a = 0);

// Green function of the walk killed on first reaching length `radius`:
// G_R(x, y) = expected visits to y from x, for |x|, |y| < radius.
class TruncatedGreen {
 public:
  TruncatedGreen(std::size_t radius, const GasketConfig& cfg, bool exact,
                 std::vector<Word> states, std::vector<Rational> exact_values,
                 std::vector<long double> approx_values);

  std::size_t radius() const { return radius_; }
  const GasketConfig& config() const { return cfg_; }
  bool exact() const { return exact_; }
  const std::vector<Word>& states() const { return states_; }

  // Exact entry; throws std::logic_error when !exact().
  const Rational& at(const Word& x, const Word& y) const;
  long double value(const Word& x, const Word& y) const;

 private:
  std::size_t index(const Word& x) const;

  std::size_t radius_;
  GasketConfig cfg_;
  bool exact_;
  std::vector<Word> states_;  // shortlex order
  std::vector<Rational> exact_values_;
  std::vector<long double> approx_values_;
};

TruncatedGreen truncated_green(std::size_t radius, const GasketConfig& cfg,
                               const SolverBudget& budget = {});

// K_R(x, y) = G_R(x, y) / G_R(root, y).
Rational martin_kernel(const TruncatedGreen& green, const Word& x, const Word& y);
long double martin_kernel_value(const TruncatedGreen& green, const Word& x, const Word& y);

}  // namespace gasket

#endif  // GASKET_EXACT_H_

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

#ifndef GASKET_MEASURES_H_
#define GASKET_MEASURES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gasket/cell_set.h"
#include "gasket/config.h"
#include "gasket/exact.h"
#include "gasket/histogram.h"
#include "gasket/permutation.h"
#include "gasket/random.h"
#include "gasket/walk.h"
#include "gasket/word.h"

namespace gasket {

// ½ Σ_w |p̂_1(w) - p̂_2(w)|. Throws std::invalid_argument on level mismatch.
double total_variation(const CellHistogram& a, const CellHistogram& b);
double total_variation(const CellHistogram& a, const ExactDist& b);

// Empirical mass of a cell set, measured on a histogram of the same or a
// finer level.
double empirical_mass(const CellHistogram& hist, const CellSet& set);

// One statistical comparison of two estimated masses.
struct Comparison {
  std::string lhs;
  std::string rhs;
  double estimate_lhs = 0;
  double estimate_rhs = 0;
  double se = 0;
  double z = 0;
  double p_value = 1;
  bool pass = true;
};

// Both sides measured on the same walks: se is that of the per-walk
// difference 1_A - 1_B.
Comparison compare_paired(const CellHistogram& hist, const CellSet& lhs, const CellSet& rhs);

// Sides measured on independent walks.
Comparison compare_two_sample(const CellHistogram& lhs_hist, const CellSet& lhs,
                              const CellHistogram& rhs_hist, const CellSet& rhs);

struct ExactCheck {
  std::string name;
  bool pass = true;
};

struct ChiSquare {
  double stat = 0;
  double dof = 0;
  double p_value = 1;
};

struct VerificationReport {
  std::string identity;
  int d = 1;
  std::size_t level = 0;
  std::size_t burn = 0;
  std::uint64_t walks = 0;
  std::uint64_t seed = 0;
  std::string start = "-";
  std::vector<ExactCheck> exact_checks;
  std::vector<Comparison> comparisons;
  // Goodness of fit of the level-N histogram against the uniform law;
  // reported, not gating.
  std::optional<ChiSquare> chi_square;

  // Applies the Bonferroni-corrected 4-SE rule across all comparisons.
  void finalize();
  bool pass() const;
};

struct VerifyOptions {
  std::size_t level = 2;
  std::uint64_t walks = 100000;
  std::uint64_t seed = 0;
  std::size_t burn = WalkOptions::kDefaultBurn;
  unsigned threads = 0;
  std::size_t sets = 20;
  WalkOptions walk;
  SolverBudget budget;
};

// True iff law_gx(g w) == law_x(w) for every cell w, where law_x and law_gx
// are exit laws from x and from g x.
bool exit_law_equivariant(const ExactDist& law_x, const ExactDist& law_gx,
                          const Permutation& g);

// Random nonempty level-n cell sets, each cell kept with probability 1/2.
std::vector<CellSet> sample_cell_sets(std::size_t level, std::size_t count,
                                      RandomStream& rng, const GasketConfig& cfg);

// Random nonempty unions of stabilizer orbits of level-n cells inside K_0.
std::vector<CellSet> sample_invariant_sets(std::size_t level, std::size_t count,
                                           RandomStream& rng, const GasketConfig& cfg);

// Invariance of the hitting distribution under the symmetry group.
// Exact: the level-N exit law from the root equals its pushforward under
// every g, and exit laws from level-1 starts are equivariant.
// Statistical: ν̂(B) vs ν̂(gB) for sampled B and every non-identity g.
VerificationReport verify_group_invariance(const VerifyOptions& options,
                                           const GasketConfig& cfg);

// The self-similar identity ν(F_0^{-1}B) = ν(⋃ R_{0i}B) for stabilizer
// invariant B ⊂ K_0, plus the folded-walk transfer
// P{Z̃_∞ ∈ B} = ν(F_0^{-1}B).
VerificationReport verify_selfsimilar(const VerifyOptions& options, const GasketConfig& cfg);

// ν_{σx}(F_0^{-1}B) vs ν_x(⋃ R_{0i}B) for x = 0·σx. Throws
// std::invalid_argument unless x starts with 0.
VerificationReport verify_shift_identity(const Word& x, const VerifyOptions& options,
                                         const GasketConfig& cfg);

// Exhaustive check, over every stabilizer-invariant B ⊂ K_0 at the level,
// that ⋃ R_{0i}B is invariant under the full group and meets the 0-cells
// exactly in B.
struct UnionLemmaResult {
  std::size_t sets_checked = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};
UnionLemmaResult check_union_lemma(std::size_t level, const GasketConfig& cfg);

// Runs the induction that pins cell masses: unknowns are masses of symmetry
// orbits of words of length <= max_level, constrained by total mass 1,
// additivity over children, and the self-similar identity on every
// stabilizer orbit. Reports whether the solution is unique and equal to
// (d+1)^{-|x|}.
struct MassDerivation {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool unique = false;
  bool matches_uniform = false;
  std::map<Word, Rational> masses;  // orbit representative -> mass
};
MassDerivation derive_cell_masses(std::size_t max_level, const GasketConfig& cfg);

// Representative of the symmetry orbit of x: symbols relabelled in order of
// first appearance.
Word orbit_representative(const Word& x);

}  // namespace gasket

#endif  // GASKET_MEASURES_H_

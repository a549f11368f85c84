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

#include "gasket/measures.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "gasket/coupling.h"
#include "gasket/statistics.h"

namespace gasket {
namespace {

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

void check_same_level(const CellHistogram& a, std::size_t level, const GasketConfig& cfg) {
  if (a.level() != level || !(a.config() == cfg)) {
    throw std::invalid_argument("total variation needs equal levels and dimensions");
  }
}

// Per-cell indicator of a coarser set, evaluated on histogram ranks.
std::vector<std::uint8_t> indicator(const CellHistogram& hist, const CellSet& set) {
  if (set.level() > hist.level() || !(set.config() == hist.config())) {
    throw std::invalid_argument("cell set is finer than the histogram");
  }
  const std::uint64_t scale =
      power(hist.config().alphabet_size(), hist.level() - set.level());
  std::vector<std::uint8_t> out(hist.num_cells());
  for (std::uint64_t r = 0; r < out.size(); ++r) out[r] = set.contains_rank(r / scale);
  return out;
}

void fill_test(Comparison& c, double diff) {
  if (c.se > 0) {
    c.z = diff / c.se;
  } else {
    c.z = diff == 0 ? 0 : std::numeric_limits<double>::infinity();
  }
  c.p_value = normal_two_sided_p(c.z);
  c.pass = bonferroni_pass(c.p_value, 1);
}

std::string set_label(const std::string& prefix, const CellSet& set) {
  return prefix + to_string(set);
}

// A'_d orbits of level-n cells inside K_0, as lists of ranks.
std::vector<std::vector<std::uint64_t>> zero_cell_orbits(std::size_t level,
                                                         const GasketConfig& cfg) {
  if (level == 0) throw std::invalid_argument("invariant sets need level >= 1");
  const std::vector<Permutation> stab = stabilizer_of_zero(cfg);
  const std::uint64_t block = level_size(level - 1, cfg);
  std::vector<bool> seen(block, false);
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::uint64_t r = 0; r < block; ++r) {
    if (seen[r]) continue;
    const Word w = unrank(r, level, cfg);
    std::set<std::uint64_t> orbit;
    for (const Permutation& g : stab) orbit.insert(rank(act_word(g, w), cfg));
    for (std::uint64_t s : orbit) seen[s] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

SimulationSpec make_spec(const Word& start, const VerifyOptions& o, std::uint64_t seed) {
  SimulationSpec spec;
  spec.start = start;
  spec.level = o.level;
  spec.burn = o.burn;
  spec.walks = o.walks;
  spec.master_seed = seed;
  spec.threads = o.threads;
  spec.options = o.walk;
  return spec;
}

VerificationReport make_report(const std::string& identity, const Word& start,
                               const VerifyOptions& o, const GasketConfig& cfg) {
  if (o.level < 1) throw std::invalid_argument("verification level must be >= 1");
  if (o.walks == 0) throw std::invalid_argument("verification needs at least one walk");
  VerificationReport report;
  report.identity = identity;
  report.d = cfg.d();
  report.level = o.level;
  report.burn = o.burn;
  report.walks = o.walks;
  report.seed = o.seed;
  report.start = to_string(start, cfg);
  return report;
}

ChiSquare uniform_fit(const CellHistogram& hist) {
  const std::vector<double> expected(hist.num_cells(), 1.0 / hist.num_cells());
  ChiSquare out;
  out.stat = chi_square_statistic(hist.counts(), expected);
  out.dof = static_cast<double>(hist.num_cells() - 1);
  out.p_value = out.dof > 0 ? chi_square_upper_p(out.stat, out.dof) : 1.0;
  return out;
}

// Sets used by the self-similar verifiers: {0^N} first, then samples.
std::vector<CellSet> selfsimilar_sets(const VerifyOptions& o, const GasketConfig& cfg) {
  std::vector<CellSet> sets;
  sets.push_back(CellSet::of(o.level, std::vector<Word>{Word::constant(0, o.level)}, cfg));
  if (o.sets > 1) {
    RandomStream rng(RngSpec{o.seed, 0xC311});
    for (CellSet& s : sample_invariant_sets(o.level, o.sets - 1, rng, cfg)) {
      sets.push_back(std::move(s));
    }
  }
  return sets;
}

}  // namespace

double total_variation(const CellHistogram& a, const CellHistogram& b) {
  check_same_level(b, a.level(), a.config());
  if (a.total() == 0 || b.total() == 0) {
    throw std::invalid_argument("total variation of an empty histogram");
  }
  double sum = 0;
  for (std::size_t r = 0; r < a.num_cells(); ++r) {
    sum += std::fabs(static_cast<double>(a.count_rank(r)) / a.total() -
                     static_cast<double>(b.count_rank(r)) / b.total());
  }
  return sum / 2;
}

double total_variation(const CellHistogram& a, const ExactDist& b) {
  check_same_level(a, b.level, a.config());
  if (a.total() == 0) throw std::invalid_argument("total variation of an empty histogram");
  std::vector<double> p(a.num_cells(), 0.0);
  for (std::size_t k = 0; k < b.support.size(); ++k) {
    p[rank(b.support[k], a.config())] = b.probs[k].get_d();
  }
  double sum = 0;
  for (std::size_t r = 0; r < a.num_cells(); ++r) {
    sum += std::fabs(static_cast<double>(a.count_rank(r)) / a.total() - p[r]);
  }
  return sum / 2;
}

double empirical_mass(const CellHistogram& hist, const CellSet& set) {
  if (hist.total() == 0) throw std::invalid_argument("empirical mass of an empty histogram");
  const std::vector<std::uint8_t> in = indicator(hist, set);
  std::uint64_t hits = 0;
  for (std::size_t r = 0; r < in.size(); ++r) {
    if (in[r]) hits += hist.count_rank(r);
  }
  return static_cast<double>(hits) / hist.total();
}

Comparison compare_paired(const CellHistogram& hist, const CellSet& lhs, const CellSet& rhs) {
  if (hist.total() == 0) throw std::invalid_argument("comparison on an empty histogram");
  const std::vector<std::uint8_t> a = indicator(hist, lhs);
  const std::vector<std::uint8_t> b = indicator(hist, rhs);
  double na = 0, nb = 0, nv2 = 0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    const double c = static_cast<double>(hist.count_rank(r));
    na += a[r] * c;
    nb += b[r] * c;
    nv2 += (a[r] != b[r]) * c;
  }
  const double w = static_cast<double>(hist.total());
  Comparison out;
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  out.estimate_lhs = na / w;
  out.estimate_rhs = nb / w;
  const double mean = out.estimate_lhs - out.estimate_rhs;
  out.se = std::sqrt(std::max(0.0, nv2 / w - mean * mean) / w);
  fill_test(out, mean);
  return out;
}

Comparison compare_two_sample(const CellHistogram& lhs_hist, const CellSet& lhs,
                              const CellHistogram& rhs_hist, const CellSet& rhs) {
  Comparison out;
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  out.estimate_lhs = empirical_mass(lhs_hist, lhs);
  out.estimate_rhs = empirical_mass(rhs_hist, rhs);
  const double p1 = out.estimate_lhs, p2 = out.estimate_rhs;
  out.se = std::sqrt(p1 * (1 - p1) / lhs_hist.total() + p2 * (1 - p2) / rhs_hist.total());
  fill_test(out, p1 - p2);
  return out;
}

void VerificationReport::finalize() {
  for (Comparison& c : comparisons) c.pass = bonferroni_pass(c.p_value, comparisons.size());
}

bool VerificationReport::pass() const {
  for (const ExactCheck& e : exact_checks) {
    if (!e.pass) return false;
  }
  for (const Comparison& c : comparisons) {
    if (!c.pass) return false;
  }
  return true;
}

bool exit_law_equivariant(const ExactDist& law_x, const ExactDist& law_gx,
                          const Permutation& g) {
  if (law_x.level != law_gx.level || law_x.support.size() != law_gx.support.size()) {
    return false;
  }
  for (std::size_t k = 0; k < law_x.support.size(); ++k) {
    if (law_gx.probability(act_word(g, law_x.support[k])) != law_x.probs[k]) return false;
  }
  return true;
}

std::vector<CellSet> sample_cell_sets(std::size_t level, std::size_t count, RandomStream& rng,
                                      const GasketConfig& cfg) {
  const std::uint64_t cells = level_size(level, cfg);
  std::vector<CellSet> out;
  while (out.size() < count) {
    CellSet set(level, cfg);
    for (std::uint64_t r = 0; r < cells; ++r) {
      if (rng.uniform(2)) set.insert_rank(r);
    }
    if (!set.empty()) out.push_back(std::move(set));
  }
  return out;
}

std::vector<CellSet> sample_invariant_sets(std::size_t level, std::size_t count,
                                           RandomStream& rng, const GasketConfig& cfg) {
  const auto orbits = zero_cell_orbits(level, cfg);
  std::vector<CellSet> out;
  while (out.size() < count) {
    CellSet set(level, cfg);
    for (const auto& orbit : orbits) {
      if (!rng.uniform(2)) continue;
      for (std::uint64_t r : orbit) set.insert_rank(r);
    }
    if (!set.empty()) out.push_back(std::move(set));
  }
  return out;
}

VerificationReport verify_group_invariance(const VerifyOptions& o, const GasketConfig& cfg) {
  VerificationReport report = make_report("group", Word::root(), o, cfg);
  const std::vector<Permutation> group = symmetry_group(cfg);

  try {
    const ExactDist from_root = exit_distribution(Word::root(), o.level, cfg, o.budget);
    for (const Permutation& g : group) {
      report.exact_checks.push_back({"exit law from - invariant under " + label(g),
                                     exit_law_equivariant(from_root, from_root, g)});
    }
    if (o.level >= 2) {
      std::vector<ExactDist> from_letter;
      for (int i = 0; i <= cfg.d(); ++i) {
        from_letter.push_back(
            exit_distribution(Word{static_cast<Symbol>(i)}, o.level, cfg, o.budget));
      }
      for (const Permutation& g : group) {
        bool ok = true;
        for (int i = 0; i <= cfg.d(); ++i) {
          ok = ok && exit_law_equivariant(from_letter[i], from_letter[g(static_cast<Symbol>(i))], g);
        }
        report.exact_checks.push_back({"exit laws from level 1 equivariant under " + label(g), ok});
      }
    }
  } catch (const BudgetExceeded&) {
    // Too large for exact solves; the statistical part still runs.
  }

  const CellHistogram hist = simulate_limit_cells(make_spec(Word::root(), o, o.seed), cfg);
  report.chi_square = uniform_fit(hist);

  std::vector<CellSet> sets;
  if (o.sets > 0) {
    std::vector<Word> fixed{Word::constant(0, o.level)};
    Word second = Word::constant(0, o.level);
    second.set(o.level - 1, 1);
    fixed.push_back(second);
    sets.push_back(CellSet::of(o.level, fixed, cfg));
    RandomStream rng(RngSpec{o.seed, 0xC310});
    for (CellSet& s : sample_cell_sets(o.level, o.sets - 1, rng, cfg)) sets.push_back(std::move(s));
  }
  for (const CellSet& b : sets) {
    for (const Permutation& g : group) {
      if (g.is_identity()) continue;
      report.comparisons.push_back(compare_paired(hist, b, apply_group(b, g)));
    }
  }
  report.finalize();
  return report;
}

VerificationReport verify_selfsimilar(const VerifyOptions& o, const GasketConfig& cfg) {
  VerificationReport report = make_report("selfsimilar", Word::root(), o, cfg);
  const std::vector<Permutation> group = symmetry_group(cfg);
  const std::vector<CellSet> sets = selfsimilar_sets(o, cfg);

  const CellHistogram hist = simulate_limit_cells(make_spec(Word::root(), o, o.seed), cfg);
  report.chi_square = uniform_fit(hist);

  // Folded-walk endpoints use their own seed so the transfer check is a
  // comparison of independent samples.
  const std::uint64_t folded_seed = mix64(o.seed ^ 0xF01DF01DULL);
  const CellHistogram folded = simulate_cells(
      o.level, o.walks, folded_seed, o.threads, cfg, [&](RandomStream& rng) {
        return folded_limit_cell_estimate(Word::root(), o.level, o.burn, rng, cfg, o.walk);
      });

  for (const CellSet& b : sets) {
    const SelfSimilarUnfolding u = unfold_selfsimilar(b);
    const std::string name = to_string(b);
    report.exact_checks.push_back({"union of reflections of " + name + " meets K_0 in the set",
                                   restrict_to_first(u.union_image, 0) == b});
    report.exact_checks.push_back(
        {"union of reflections of " + name + " is group invariant",
         is_invariant(u.union_image, group)});
    report.exact_checks.push_back({"mu(preimage) = mu(union) for " + name,
                                   mu_mass(u.preimage) == mu_mass(u.union_image)});

    report.comparisons.push_back(compare_paired(hist, u.preimage, u.union_image));

    Comparison transfer = compare_two_sample(folded, b, hist, u.preimage);
    transfer.lhs = set_label("folded:", b);
    report.comparisons.push_back(std::move(transfer));
  }
  report.finalize();
  return report;
}

VerificationReport verify_shift_identity(const Word& x, const VerifyOptions& o,
                                         const GasketConfig& cfg) {
  validate(x, cfg);
  if (x.is_root() || x.front() != 0) {
    throw std::invalid_argument("shift identity needs a start in the subtree 0X");
  }
  const Word sx = x.suffix_from(1);
  VerificationReport report = make_report("shift", x, o, cfg);
  const std::vector<CellSet> sets = selfsimilar_sets(o, cfg);

  const CellHistogram from_x = simulate_limit_cells(make_spec(x, o, o.seed), cfg);
  const CellHistogram from_sx =
      simulate_limit_cells(make_spec(sx, o, mix64(o.seed ^ 0x5A1F7ULL)), cfg);

  for (const CellSet& b : sets) {
    const SelfSimilarUnfolding u = unfold_selfsimilar(b);
    Comparison c = compare_two_sample(from_sx, u.preimage, from_x, u.union_image);
    c.lhs = set_label(to_string(sx, cfg) + ":", u.preimage);
    c.rhs = set_label(to_string(x, cfg) + ":", u.union_image);
    report.comparisons.push_back(std::move(c));
  }
  report.finalize();
  return report;
}

UnionLemmaResult check_union_lemma(std::size_t level, const GasketConfig& cfg) {
  const auto orbits = zero_cell_orbits(level, cfg);
  if (orbits.size() >= 63) throw std::invalid_argument("too many orbits for exhaustive check");
  const std::vector<Permutation> group = symmetry_group(cfg);

  // Full-group orbit id of every level-n cell; a set is invariant iff it
  // contains all or none of each orbit.
  const std::uint64_t cells = level_size(level, cfg);
  std::vector<std::uint64_t> orbit_id(cells, cells);
  std::vector<std::uint64_t> orbit_size;
  for (std::uint64_t r = 0; r < cells; ++r) {
    if (orbit_id[r] != cells) continue;
    const Word w = unrank(r, level, cfg);
    std::set<std::uint64_t> members;
    for (const Permutation& g : group) members.insert(rank(act_word(g, w), cfg));
    for (std::uint64_t s : members) orbit_id[s] = orbit_size.size();
    orbit_size.push_back(members.size());
  }

  UnionLemmaResult result;
  const std::uint64_t subsets = std::uint64_t{1} << orbits.size();
  std::vector<std::uint64_t> hits(orbit_size.size());
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    CellSet b(level, cfg);
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if (!((mask >> k) & 1U)) continue;
      for (std::uint64_t r : orbits[k]) b.insert_rank(r);
    }
    const SelfSimilarUnfolding u = unfold_selfsimilar(b);
    std::fill(hits.begin(), hits.end(), 0);
    for (std::uint64_t r = 0; r < cells; ++r) {
      if (u.union_image.contains_rank(r)) ++hits[orbit_id[r]];
    }
    bool invariant = true;
    for (std::size_t k = 0; k < hits.size(); ++k) {
      invariant = invariant && (hits[k] == 0 || hits[k] == orbit_size[k]);
    }
    ++result.sets_checked;
    if (!invariant || !(restrict_to_first(u.union_image, 0) == b)) ++result.failures;
  }
  return result;
}

Word orbit_representative(const Word& x) {
  std::array<int, 256> relabel;
  relabel.fill(-1);
  int next = 0;
  Word out;
  out.reserve(x.size());
  for (Symbol s : x.symbols()) {
    if (relabel[s] < 0) relabel[s] = next++;
    out.push_back(static_cast<Symbol>(relabel[s]));
  }
  return out;
}

namespace {

// Gauss-Jordan on an augmented rational system; returns the rank of the
// coefficient part and leaves the reduced rows in place.
std::size_t row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t unknowns,
                       bool& consistent) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (Rational& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  consistent = true;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][unknowns] != 0) consistent = false;
  }
  return rank;
}

}  // namespace

MassDerivation derive_cell_masses(std::size_t max_level, const GasketConfig& cfg) {
  std::map<Word, std::size_t> index;
  std::vector<Word> reps;
  for (std::size_t n = 0; n <= max_level; ++n) {
    for (const Word& w : words_of_length(n, cfg)) {
      const Word r = orbit_representative(w);
      if (index.emplace(r, reps.size()).second) reps.push_back(r);
    }
  }
  const std::size_t u = reps.size();
  std::vector<std::vector<Rational>> rows;
  auto new_row = [&]() -> std::vector<Rational>& {
    rows.emplace_back(u + 1, Rational(0));
    return rows.back();
  };
  auto add_cells = [&](std::vector<Rational>& row, const CellSet& set, int sign) {
    for (const Word& w : set.members()) row[index.at(orbit_representative(w))] += sign;
  };

  new_row()[index.at(Word::root())] = 1;
  rows.back()[u] = 1;

  for (const Word& x : reps) {
    if (x.size() >= max_level) continue;
    std::vector<Rational>& row = new_row();
    row[index.at(x)] += 1;
    for (int i = 0; i <= cfg.d(); ++i) {
      row[index.at(orbit_representative(x.child(static_cast<Symbol>(i))))] -= 1;
    }
  }

  for (std::size_t n = 1; n <= max_level; ++n) {
    for (const auto& orbit : zero_cell_orbits(n, cfg)) {
      CellSet b(n, cfg);
      for (std::uint64_t r : orbit) b.insert_rank(r);
      const SelfSimilarUnfolding s = unfold_selfsimilar(b);
      std::vector<Rational>& row = new_row();
      add_cells(row, s.preimage, 1);
      add_cells(row, s.union_image, -1);
    }
  }

  MassDerivation out;
  out.unknowns = u;
  out.equations = rows.size();
  bool consistent = false;
  out.rank = row_reduce(rows, u, consistent);
  out.unique = consistent && out.rank == u;
  if (!out.unique) return out;
  out.matches_uniform = true;
  for (std::size_t r = 0; r < u; ++r) {
    // After full reduction row r has its pivot in column r.
    const Rational& m = rows[r][u];
    out.masses.emplace(reps[r], m);
    if (m != mu_cell_mass(reps[r], cfg)) out.matches_uniform = false;
  }
  return out;
}

}  // namespace gasket

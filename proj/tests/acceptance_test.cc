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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gasket/cli.h"
#include "gasket/coupling.h"
#include "gasket/exact.h"
#include "gasket/graph.h"
#include "gasket/measures.h"
#include "gasket/walk.h"

namespace gasket {
namespace {

using FoldedPath = std::vector<Word>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Rational power_inverse(int base, std::size_t exp) {
  Rational q = 1;
  for (std::size_t k = 0; k < exp; ++k) q /= base;
  return q;
}

// ---- 1 --------------------------------------------------------------------

Outcome uniform_exit_law() {
  std::size_t cases = 0;
  for (int d = 1; d <= 3; ++d) {
    const GasketConfig cfg(d);
    for (std::size_t n = 1; n <= 5; ++n) {
      const ExactDist dist = exit_distribution(Word::root(), n, cfg);
      const Rational expected = power_inverse(d + 1, n);
      if (dist.support.size() != level_size(n, cfg)) {
        return {false, "support size wrong at d=" + std::to_string(d)};
      }
      for (const Rational& p : dist.probs) {
        if (p != expected) {
          return {false, "d=" + std::to_string(d) + " N=" + std::to_string(n) + " p=" +
                             p.get_str()};
        }
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " (d, N) cases exactly uniform"};
}

// ---- 2 --------------------------------------------------------------------

Outcome first_step() {
  for (int d = 1; d <= 5; ++d) {
    const GasketConfig cfg(d);
    for (int i = 0; i <= d; ++i) {
      for (int a = 0; a <= d; ++a) {
        for (const Rational& q :
             first_step_system(cfg, static_cast<Symbol>(i), static_cast<Symbol>(a))) {
          if (q != Rational(1, d + 1)) {
            return {false, "d=" + std::to_string(d) + " entry " + q.get_str()};
          }
        }
      }
    }
  }
  return {true, "all entries 1/(d+1) for d=1..5, every (i, a)"};
}

// ---- 3 --------------------------------------------------------------------

// Degree in the induced subgraph on 0X, from the full neighbor lists.
int degree_in_zero_subtree(const Word& x, const GasketConfig& cfg) {
  int n = 0;
  for (const Word& y : neighbors(x, cfg).all()) n += !y.is_root() && y.front() == 0;
  return n;
}

Rational srw_path_law(const FoldedPath& z, const GasketConfig& cfg) {
  Rational p = 1;
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const auto nb = neighbors(z[k], cfg).all();
    if (std::find(nb.begin(), nb.end(), z[k + 1]) == nb.end() || z[k + 1].front() != 0) {
      return 0;
    }
    p /= degree_in_zero_subtree(z[k], cfg);
  }
  return p;
}

std::vector<Word> skip_region(const Word& y, const GasketConfig& cfg) {
  std::vector<Word> region{y, Word::root()};
  for (const Word& w : neighbor_set(y, cfg)) region.push_back(w);
  return region;
}

// A path from y (excluded) to target (included) whose interior stays in the
// region.
std::vector<Word> witness_path(const Word& y, const Word& target,
                               const std::vector<Word>& region, const GasketConfig& cfg) {
  std::map<Word, Word> parent{{y, y}};
  std::deque<Word> queue{y};
  auto in_region = [&](const Word& w) {
    return std::find(region.begin(), region.end(), w) != region.end();
  };
  while (!queue.empty()) {
    const Word x = queue.front();
    queue.pop_front();
    for (const Word& n : neighbors(x, cfg).all()) {
      if (n == target) {
        std::vector<Word> path{target};
        for (Word w = x; w != y; w = parent.at(w)) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (in_region(n) && parent.emplace(n, x).second) queue.push_back(n);
    }
  }
  throw std::logic_error("exit point unreachable from the region");
}

struct MacroState {
  ReflectionCoupler coupler;
  Word y;
};

// Feeds the witness path for the step y -> b and returns the event at b.
ReflectionCoupler::Event advance_macro(ReflectionCoupler& c, const Word& y, const Word& b,
                                       const GasketConfig& cfg) {
  const std::vector<Word> region = skip_region(y, cfg);
  const std::vector<Word> path = witness_path(y, b, region, cfg);
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    if (c.observe(path[s])) throw std::logic_error("stopping time inside the skip set");
  }
  auto e = c.observe(path.back());
  if (!e || e->y != b) throw std::logic_error("exit point is not a stopping time");
  return *e;
}

// Exact law of (Z̃_0, ..., Z̃_H): the Y chain moves by exact exit laws of the
// skip sets, each transition is realized by a witness path, and the coupler
// folds it.
std::map<FoldedPath, Rational> macro_folded_law(std::size_t horizon, const GasketConfig& cfg) {
  std::map<Word, std::map<Word, Rational>> exit_cache;
  // Merge histories that agree on the folded path and the reflection product;
  // those determine Y and every later fold.
  std::map<std::pair<FoldedPath, Permutation>, std::pair<MacroState, Rational>> layer;
  for (int i = 0; i <= cfg.d(); ++i) {
    ReflectionCoupler c(cfg);
    c.observe(Word::root());
    const Word y{static_cast<Symbol>(i)};
    auto e = c.observe(y);
    layer.emplace(std::make_pair(FoldedPath{e->z_tilde}, e->g),
                  std::make_pair(MacroState{c, y}, Rational(1, cfg.alphabet_size())));
  }
  for (std::size_t k = 0; k < horizon; ++k) {
    decltype(layer) next;
    for (const auto& [key, entry] : layer) {
      const auto& [state, p] = entry;
      auto it = exit_cache.find(state.y);
      if (it == exit_cache.end()) {
        it = exit_cache.emplace(state.y, exit_law_from_set(state.y, skip_region(state.y, cfg), cfg))
                 .first;
      }
      for (const auto& [b, q] : it->second) {
        ReflectionCoupler c = state.coupler;
        const auto e = advance_macro(c, state.y, b, cfg);
        FoldedPath z = key.first;
        z.push_back(e.z_tilde);
        auto [slot, fresh] = next.try_emplace(std::make_pair(std::move(z), e.g),
                                              MacroState{std::move(c), b}, Rational(0));
        slot->second.second += p * q;
      }
    }
    layer = std::move(next);
  }
  std::map<FoldedPath, Rational> law;
  for (const auto& [key, entry] : layer) law[key.first] += entry.second;
  return law;
}

// P{Z̃_0..m = z, T_m <= H} for every realized folded prefix, by enumerating
// every walk path of H steps from the root.
void literal_enumeration(const ReflectionCoupler& coupler, const Word& z, std::size_t t,
                         std::size_t horizon, const Rational& p, FoldedPath& folded,
                         std::map<FoldedPath, Rational>& out, const GasketConfig& cfg) {
  if (t == horizon) return;
  const auto nb = neighbors(z, cfg).all();
  const Rational q = p / static_cast<long>(nb.size());
  for (const Word& n : nb) {
    ReflectionCoupler c = coupler;
    const auto e = c.observe(n);
    if (e) {
      folded.push_back(e->z_tilde);
      out[folded] += q;
    }
    literal_enumeration(c, n, t + 1, horizon, q, folded, out, cfg);
    if (e) folded.pop_back();
  }
}

// The same quantity from time-resolved exit laws of the skip sets.
void timed_macro(const ReflectionCoupler& coupler, const Word& y, std::size_t t,
                 std::size_t horizon, const Rational& p, FoldedPath& folded,
                 std::map<FoldedPath, Rational>& out, const GasketConfig& cfg) {
  out[folded] += p;
  if (t >= horizon) return;
  const auto law = timed_exit_law_from_set(y, skip_region(y, cfg), horizon - t, cfg);
  for (const auto& [b, series] : law) {
    ReflectionCoupler c = coupler;
    const auto e = advance_macro(c, y, b, cfg);
    folded.push_back(e.z_tilde);
    for (std::size_t s = 1; s <= series.size(); ++s) {
      if (series[s - 1] != 0) timed_macro(c, b, t + s, horizon, p * series[s - 1], folded, out, cfg);
    }
    folded.pop_back();
  }
}

Outcome coupling_exactness() {
  std::ostringstream detail;
  for (auto [d, macro_h, literal_h] : {std::tuple{1, 8, 8}, std::tuple{2, 6, 6}}) {
    const GasketConfig cfg(d);

    const auto law = macro_folded_law(macro_h, cfg);
    Rational total = 0;
    for (const auto& [z, p] : law) {
      total += p;
      if (p != srw_path_law(z, cfg)) {
        return {false, "d=" + std::to_string(d) + ": folded path law differs from SRW on 0X"};
      }
    }
    if (total != 1) return {false, "d=" + std::to_string(d) + ": folded law has mass " + total.get_str()};

    ReflectionCoupler start(cfg);
    start.observe(Word::root());
    FoldedPath folded;
    std::map<FoldedPath, Rational> literal, macro;
    literal_enumeration(start, Word::root(), 0, literal_h, 1, folded, literal, cfg);
    for (int i = 0; i <= cfg.d(); ++i) {
      ReflectionCoupler c = start;
      const Word y{static_cast<Symbol>(i)};
      folded = {c.observe(y)->z_tilde};
      timed_macro(c, y, 1, literal_h, Rational(1, d + 1), folded, macro, cfg);
    }
    if (literal != macro) {
      return {false, "d=" + std::to_string(d) + ": literal enumeration disagrees with timed exit laws"};
    }
    for (const auto& [z, p] : literal) {
      if (p > srw_path_law(z, cfg)) {
        return {false, "d=" + std::to_string(d) + ": censored law exceeds the SRW law"};
      }
    }
    detail << "d=" << d << ": " << law.size() << " folded paths of " << macro_h
           << " macro steps exact, " << literal.size() << " prefixes from " << literal_h
           << "-step paths; ";
  }
  return {true, detail.str()};
}

// ---- 4 --------------------------------------------------------------------

Outcome golden_trace() {
  const GasketConfig cfg(1);
  const WalkPath path = parse_path("-,0,-,1,10,100,011,01,00", cfg);
  const CouplingTrace trace = fold(path, cfg);
  const std::vector<std::size_t> times{1, 4, 5, 7, 8};
  const std::vector<std::string> ys{"0", "10", "100", "01", "00"};
  const std::vector<std::size_t> ls{0, 1, 1, 2, 2};
  const std::vector<std::string> gs{"id", "R_01", "R_01", "id", "id"};
  const std::vector<std::string> zs{"0", "01", "011", "01", "00"};
  std::size_t k = 0;
  for (const TraceRow& row : trace.rows) {
    if (!row.k) continue;
    if (k >= times.size() || row.n != times[k] || *row.k != k ||
        to_string(*row.y, cfg) != ys[k] || *row.l != ls[k] || label(*row.g) != gs[k] ||
        to_string(*row.z_tilde, cfg) != zs[k]) {
      return {false, "row n=" + std::to_string(row.n) + " differs"};
    }
    ++k;
  }
  if (k != times.size()) return {false, "wrong number of stopping times"};

  std::ostringstream out, err;
  const char* argv[] = {"gasket-walk", "coupling", "--d", "1", "--path",
                        "-,0,-,1,10,100,011,01,00"};
  if (run_cli(6, argv, out, err) != 0) return {false, "CLI failed: " + err.str()};
  if (out.str().find("\"z_tilde\": \"011\"") == std::string::npos) {
    return {false, "CLI trace lacks Z̃_2 = 011"};
  }
  return {true, "5 stopping times match (k, Y, L, G, Z̃)"};
}

// ---- 5 --------------------------------------------------------------------

Outcome uniform_limit_cells() {
  std::ostringstream detail;
  bool pass = true;
  for (int d = 1; d <= 2; ++d) {
    const GasketConfig cfg(d);
    SimulationSpec spec;
    spec.start = Word::root();
    spec.level = 3;
    spec.burn = 15;
    spec.walks = 1'000'000;
    spec.master_seed = 20260101 + d;
    const CellHistogram hist = simulate_limit_cells(spec, cfg);
    const ExactDist uniform = exit_distribution(Word::root(), 3, cfg);
    const double tv = total_variation(hist, uniform);
    const double p = 1.0 / hist.num_cells();
    const double se = std::sqrt(p * (1 - p) / spec.walks);
    double worst = 0;
    for (std::uint64_t c : hist.counts()) {
      worst = std::max(worst, std::fabs(static_cast<double>(c) / spec.walks - p) / se);
    }
    pass = pass && tv < 0.01 && worst <= 4.0;
    detail << "d=" << d << ": TV=" << tv << " max|z|=" << worst << "; ";
  }
  return {pass, detail.str()};
}

// ---- 6 --------------------------------------------------------------------

Outcome group_invariance() {
  std::size_t checks = 0;
  for (int d = 1; d <= 3; ++d) {
    const GasketConfig cfg(d);
    const auto group = symmetry_group(cfg);
    for (std::size_t n = 1; n <= 4; ++n) {
      std::map<Word, ExactDist> laws;
      for (std::size_t m = 0; m < n; ++m) {
        for (const Word& x : words_of_length(m, cfg)) laws.emplace(x, exit_distribution(x, n, cfg));
      }
      for (const auto& [x, law] : laws) {
        for (const Permutation& g : group) {
          if (!exit_law_equivariant(law, laws.at(act_word(g, x)), g)) {
            return {false, "d=" + std::to_string(d) + " x=" + to_string(x, cfg) + " g=" + label(g)};
          }
          ++checks;
        }
      }
    }
  }
  const GasketConfig cfg(2);
  VerifyOptions o;
  o.level = 3;
  o.walks = 1'000'000;
  o.seed = 44;
  o.sets = 20;
  const VerificationReport report = verify_group_invariance(o, cfg);
  std::size_t failed = 0;
  for (const Comparison& c : report.comparisons) failed += !c.pass;
  std::ostringstream detail;
  detail << checks << " exact (x, g) equivariance checks; " << report.comparisons.size()
         << " paired comparisons at d=2 N=3, " << failed << " outside the corrected 4-SE band";
  return {report.pass(), detail.str()};
}

// ---- 7 --------------------------------------------------------------------

Outcome selfsimilar_identity() {
  std::size_t sets = 0;
  for (int d = 1; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const UnionLemmaResult r = check_union_lemma(n, GasketConfig(d));
      if (!r.pass()) return {false, "union lemma fails at d=" + std::to_string(d)};
      sets += r.sets_checked;
    }
  }
  bool pass = true;
  std::ostringstream detail;
  detail << sets << " invariant sets checked exactly; ";
  for (int d = 1; d <= 2; ++d) {
    VerifyOptions o;
    o.level = 3;
    o.walks = 1'000'000;
    o.seed = 70 + d;
    o.sets = 10;
    const VerificationReport report = verify_selfsimilar(o, GasketConfig(d));
    std::size_t failed = 0;
    for (const Comparison& c : report.comparisons) failed += !c.pass;
    pass = pass && report.pass();
    detail << "d=" << d << ": " << report.comparisons.size() << " comparisons, " << failed
           << " failed; ";
  }
  return {pass, detail.str()};
}

// ---- 8 --------------------------------------------------------------------

Outcome adjacency_oracles() {
  std::uint64_t pairs = 0, edges = 0;
  for (int d = 1; d <= 3; ++d) {
    const GasketConfig cfg(d);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto words = words_of_length(n, cfg);
      for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
          const bool comb = adjacent_combinatorial(words[a], words[b]);
          if (comb != adjacent_geometric(words[a], words[b], cfg)) {
            return {false, to_string(words[a], cfg) + " vs " + to_string(words[b], cfg)};
          }
          edges += comb;
          ++pairs;
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs agree, " + std::to_string(edges) + " adjacent"};
}

// ---- 9 --------------------------------------------------------------------

Outcome green_invariants() {
  std::size_t entries = 0;
  for (int d = 1; d <= 2; ++d) {
    const GasketConfig cfg(d);
    for (std::size_t r = 1; r <= 6; ++r) {
      const TruncatedGreen green = truncated_green(r, cfg);
      if (!green.exact()) return {false, "Green function not exact at d=" + std::to_string(d)};
      for (const Word& x : green.states()) {
        for (const Word& y : green.states()) {
          if (degree(x, cfg) * green.at(x, y) != degree(y, cfg) * green.at(y, x)) {
            return {false, "reversibility fails at d=" + std::to_string(d)};
          }
          ++entries;
        }
        if (martin_kernel(green, Word::root(), x) != 1) {
          return {false, "K(-, y) != 1 at d=" + std::to_string(d)};
        }
      }
    }
  }
  return {true, std::to_string(entries) + " entries reversible; K_R(-, y) = 1"};
}

// ---- 10 -------------------------------------------------------------------

Outcome deterministic_simulate() {
  std::string reference;
  for (const char* threads : {"1", "2", "3", "8", "1"}) {
    std::ostringstream out, err;
    const char* argv[] = {"gasket-walk", "simulate", "--d",      "2",     "--level",
                          "3",           "--burn",   "10",       "--walks", "20000",
                          "--seed",      "99",       "--threads", threads};
    if (run_cli(14, argv, out, err) != 0) return {false, "simulate failed: " + err.str()};
    if (reference.empty()) {
      reference = out.str();
    } else if (out.str() != reference) {
      return {false, std::string("output differs with --threads ") + threads};
    }
  }
  return {true, "identical bytes for 1, 2, 3 and 8 workers and on rerun"};
}

}  // namespace
}  // namespace gasket

int main() {
  using namespace gasket;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"uniform exit law", uniform_exit_law},
      {"first-step system", first_step},
      {"coupling exactness", coupling_exactness},
      {"golden coupling trace", golden_trace},
      {"limit cells uniform", uniform_limit_cells},
      {"group invariance", group_invariance},
      {"self-similar identity", selfsimilar_identity},
      {"adjacency oracles agree", adjacency_oracles},
      {"Green and Martin invariants", green_invariants},
      {"simulate determinism", deterministic_simulate},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}

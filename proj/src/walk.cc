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

#include "gasket/walk.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "gasket/graph.h"

namespace gasket {

bool is_valid_path(const WalkPath& path, const GasketConfig& cfg) {
  if (path.steps.empty() || path.steps.front() != path.start) return false;
  for (const Word& w : path.steps) {
    for (Symbol s : w.symbols()) {
      if (s >= cfg.alphabet_size()) return false;
    }
  }
  for (std::size_t n = 0; n + 1 < path.steps.size(); ++n) {
    if (!adjacent_combinatorial(path.steps[n], path.steps[n + 1])) return false;
  }
  return true;
}

WalkPath parse_path(std::string_view text, const GasketConfig& cfg) {
  const char sep = cfg.d() > 9 ? ';' : ',';
  WalkPath path;
  path.d = cfg.d();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view field = text.substr(pos, next - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    path.steps.push_back(parse_word(field, cfg));
    pos = next + 1;
  }
  if (path.steps.empty()) throw std::invalid_argument("empty path");
  path.start = path.steps.front();
  return path;
}

void step_in_place(Word& x, RandomStream& rng, const GasketConfig& cfg) {
  move_to_neighbor(x, rng.uniform(static_cast<std::uint64_t>(degree(x, cfg))), cfg);
}

Word step(const Word& x, RandomStream& rng, const GasketConfig& cfg) {
  Word y = x;
  step_in_place(y, rng, cfg);
  return y;
}

WalkPath run_to_level(const Word& start, std::size_t level, RandomStream& rng,
                      const GasketConfig& cfg, const WalkOptions& options) {
  validate(start, cfg);
  if (start.size() > level) throw std::invalid_argument("start is deeper than the target level");
  WalkPath path{start, {start}, 0, cfg.d()};
  Word z = start;
  std::uint64_t n = 0;
  while (z.size() != level) {
    if (++n > options.step_cap) {
      throw StepCapExceeded("walk exceeded " + std::to_string(options.step_cap) +
                            " steps before reaching level " + std::to_string(level));
    }
    step_in_place(z, rng, cfg);
    path.steps.push_back(z);
  }
  return path;
}

Word hit_level(const Word& start, std::size_t level, RandomStream& rng,
               const GasketConfig& cfg, const WalkOptions& options) {
  validate(start, cfg);
  if (start.size() > level) throw std::invalid_argument("start is deeper than the target level");
  Word z = start;
  z.reserve(level + 8);
  std::uint64_t n = 0;
  while (z.size() != level) {
    if (++n > options.step_cap) {
      throw StepCapExceeded("walk exceeded " + std::to_string(options.step_cap) +
                            " steps before reaching level " + std::to_string(level));
    }
    step_in_place(z, rng, cfg);
  }
  return z;
}

Word limit_cell_estimate(const Word& start, std::size_t level, std::size_t burn,
                         RandomStream& rng, const GasketConfig& cfg,
                         const WalkOptions& options) {
  return hit_level(start, level + burn, rng, cfg, options).prefix(level);
}

CellHistogram simulate_cells(std::size_t level, std::uint64_t walks,
                             std::uint64_t master_seed, unsigned threads,
                             const GasketConfig& cfg, const CellSampler& sampler) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(walks, 1)));
  std::vector<CellHistogram> partial(threads, CellHistogram(level, cfg));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      const std::uint64_t begin = walks * t / threads;
      const std::uint64_t end = walks * (t + 1) / threads;
      for (std::uint64_t i = begin; i < end; ++i) {
        RandomStream rng(RngSpec{master_seed, i});
        partial[t].add(sampler(rng));
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CellHistogram merged(level, cfg);
  for (const CellHistogram& h : partial) merged.merge(h);
  return merged;
}

CellHistogram simulate_limit_cells(const SimulationSpec& spec, const GasketConfig& cfg) {
  validate(spec.start, cfg);
  return simulate_cells(spec.level, spec.walks, spec.master_seed, spec.threads, cfg,
                        [&](RandomStream& rng) {
                          return limit_cell_estimate(spec.start, spec.level, spec.burn,
                                                     rng, cfg, spec.options);
                        });
}

double burn_stability(const SimulationSpec& spec, std::size_t extra_burn,
                      const GasketConfig& cfg) {
  SimulationSpec deeper = spec;
  deeper.burn += extra_burn;
  const CellHistogram a = simulate_limit_cells(spec, cfg);
  const CellHistogram b = simulate_limit_cells(deeper, cfg);
  double tv = 0;
  for (std::size_t r = 0; r < a.num_cells(); ++r) {
    tv += std::abs(static_cast<double>(a.count_rank(r)) / a.total() -
                   static_cast<double>(b.count_rank(r)) / b.total());
  }
  return tv / 2;
}

}  // namespace gasket

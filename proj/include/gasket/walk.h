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

#ifndef GASKET_WALK_H_
#define GASKET_WALK_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gasket/config.h"
#include "gasket/histogram.h"
#include "gasket/random.h"
#include "gasket/word.h"

namespace gasket {

// A realized trajectory Z_0 = start, Z_1, ..., of the simple random walk.
struct WalkPath {
  Word start;
  std::vector<Word> steps;  // steps.front() == start
  std::uint64_t seed = 0;
  int d = 1;
};

// Checks that the path starts at start and consecutive entries are adjacent.
bool is_valid_path(const WalkPath& path, const GasketConfig& cfg);

// Parses a comma (or, when d > 9, semicolon) separated vertex list.
WalkPath parse_path(std::string_view text, const GasketConfig& cfg);

class StepCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WalkOptions {
  std::uint64_t step_cap = 100'000'000;
  // Default burn for limit-cell estimates.
  static constexpr std::size_t kDefaultBurn = 15;
};

// One transition: a uniformly chosen neighbour of x.
Word step(const Word& x, RandomStream& rng, const GasketConfig& cfg);
void step_in_place(Word& x, RandomStream& rng, const GasketConfig& cfg);

// Runs until the first time τ_N the walk has length N. The returned path ends
// at Z_{τ_N}. Throws StepCapExceeded if the cap is hit first.
WalkPath run_to_level(const Word& start, std::size_t level, RandomStream& rng,
                      const GasketConfig& cfg, const WalkOptions& options = {});

// Same law as run_to_level(...).steps.back() without storing the path.
Word hit_level(const Word& start, std::size_t level, RandomStream& rng,
               const GasketConfig& cfg, const WalkOptions& options = {});

// Length-N prefix of Z_{τ_{N+burn}}, the estimator for the level-N cell of
// the limit point Z_∞.
Word limit_cell_estimate(const Word& start, std::size_t level, std::size_t burn,
                         RandomStream& rng, const GasketConfig& cfg,
                         const WalkOptions& options = {});

// Runs `walks` independent samples, stream i keyed by (master_seed, i), and
// histograms the level-`level` words they return. Workers take contiguous
// blocks of stream indices; the merged result does not depend on `threads`.
// threads == 0 means hardware concurrency.
using CellSampler = std::function<Word(RandomStream&)>;
CellHistogram simulate_cells(std::size_t level, std::uint64_t walks,
                             std::uint64_t master_seed, unsigned threads,
                             const GasketConfig& cfg, const CellSampler& sampler);

struct SimulationSpec {
  Word start;
  std::size_t level = 1;
  std::size_t burn = WalkOptions::kDefaultBurn;
  std::uint64_t walks = 0;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;
  WalkOptions options;
};

// Histogram of limit_cell_estimate over spec.walks streams.
CellHistogram simulate_limit_cells(const SimulationSpec& spec, const GasketConfig& cfg);

// Total variation between the burn and burn+extra histograms, same seeds.
// Quantifies the residual bias of the prefix estimator.
double burn_stability(const SimulationSpec& spec, std::size_t extra_burn,
                      const GasketConfig& cfg);

}  // namespace gasket

#endif  // GASKET_WALK_H_

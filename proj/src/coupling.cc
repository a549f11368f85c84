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

#include "gasket/coupling.h"

#include <algorithm>
#include <stdexcept>

#include "gasket/graph.h"

namespace gasket {

ReflectionCoupler::ReflectionCoupler(const GasketConfig& cfg)
    : cfg_(cfg), g_(Permutation::identity(cfg)) {}

std::optional<ReflectionCoupler::Event> ReflectionCoupler::observe(const Word& z) {
  return advance(z, std::nullopt);
}

std::optional<ReflectionCoupler::Event> ReflectionCoupler::observe_lazy(
    const Word& z, std::size_t want_length) {
  return advance(z, want_length);
}

std::optional<ReflectionCoupler::Event> ReflectionCoupler::advance(
    const Word& z, std::optional<std::size_t> want_length) {
  if (z.is_root()) return std::nullopt;
  if (!started_) {
    started_ = true;
    k_ = 0;
    l_ = 0;
    g_ = Permutation::reflection(0, parity(z), cfg_);
  } else {
    if (z == anchor_ || std::find(skip_.begin(), skip_.end(), z) != skip_.end()) {
      return std::nullopt;
    }
    const Symbol from = parity(anchor_);
    const Symbol to = parity(z);
    if (from != to) {
      const Permutation r = Permutation::reflection(from, to, cfg_);
      if (act_word(r, z) == anchor_) {
        throw std::logic_error("reflected process stayed put at a parity change");
      }
      g_ = g_ * r;
      ++l_;
    }
    ++k_;
  }
  anchor_ = z;
  skip_ = neighbor_set(z, cfg_);
  Event event{k_, z, l_, g_, Word()};
  if (!want_length || *want_length == z.size()) event.z_tilde = act_word(g_, z);
  return event;
}

std::vector<Word> CouplingTrace::folded() const {
  std::vector<Word> out;
  for (const TraceRow& row : rows) {
    if (row.z_tilde) out.push_back(*row.z_tilde);
  }
  return out;
}

std::vector<StopPoint> extract_y_chain(const WalkPath& path, const GasketConfig& cfg) {
  if (!is_valid_path(path, cfg)) throw std::invalid_argument("not a walk path");
  ReflectionCoupler coupler(cfg);
  std::vector<StopPoint> out;
  for (std::size_t n = 0; n < path.steps.size(); ++n) {
    if (auto e = coupler.observe(path.steps[n])) out.push_back({n, e->y});
  }
  return out;
}

CouplingTrace fold(const WalkPath& path, const GasketConfig& cfg) {
  if (!is_valid_path(path, cfg)) throw std::invalid_argument("not a walk path");
  ReflectionCoupler coupler(cfg);
  CouplingTrace trace;
  trace.d = cfg.d();
  trace.rows.reserve(path.steps.size());
  for (std::size_t n = 0; n < path.steps.size(); ++n) {
    TraceRow row{n, path.steps[n], {}, {}, {}, {}, {}};
    if (auto e = coupler.observe(path.steps[n])) {
      row.k = e->k;
      row.y = e->y;
      row.l = e->l;
      row.g = e->g;
      row.z_tilde = e->z_tilde;
    }
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

Word folded_walk_endpoint(const Word& start, std::size_t level, RandomStream& rng,
                          const GasketConfig& cfg, const WalkOptions& options) {
  validate(start, cfg);
  if (level < 1) throw std::invalid_argument("folded walk level must be >= 1");
  if (start.size() > level) throw std::invalid_argument("start is deeper than the target level");
  ReflectionCoupler coupler(cfg);
  Word z = start;
  z.reserve(level + 8);
  std::uint64_t n = 0;
  for (;;) {
    if (auto e = coupler.observe_lazy(z, level); e && e->y.size() == level) {
      return e->z_tilde;
    }
    if (++n > options.step_cap) {
      throw StepCapExceeded("folded walk exceeded " + std::to_string(options.step_cap) +
                            " steps");
    }
    step_in_place(z, rng, cfg);
  }
}

Word folded_limit_cell_estimate(const Word& start, std::size_t level, std::size_t burn,
                                RandomStream& rng, const GasketConfig& cfg,
                                const WalkOptions& options) {
  return folded_walk_endpoint(start, level + burn, rng, cfg, options).prefix(level);
}

}  // namespace gasket

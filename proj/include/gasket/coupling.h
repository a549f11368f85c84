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

#ifndef GASKET_COUPLING_H_
#define GASKET_COUPLING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "gasket/config.h"
#include "gasket/permutation.h"
#include "gasket/random.h"
#include "gasket/walk.h"
#include "gasket/word.h"

namespace gasket {

// The reflection coupling, evaluated online along a walk Z_0, Z_1, ...
//
// Stopping times: T_0 is the first time Z leaves the root; T_{k+1} is the
// first later time Z is outside {Y_k, root} ∪ N_{Y_k}, and Y_k = Z_{T_k}.
// Each parity change of Y composes the running reflection product with
// R_{old,new}, starting from R_{0,[Y_0]}; the folded walk is Z̃_k = G Y_k and
// always lies in the subtree 0X.
class ReflectionCoupler {
 public:
  struct Event {
    std::size_t k;          // index of the stopping time
    Word y;                 // Y_k
    std::size_t l;          // L_k, number of parity changes so far
    Permutation g;          // G_{L_k}
    Word z_tilde;           // Z̃_k
  };

  explicit ReflectionCoupler(const GasketConfig& cfg);

  // Feeds the next walk position. Returns the event when this position is a
  // stopping time T_k. Throws std::logic_error if the skip-set guarantee
  // R_ij Y_{k+1} != Y_k fails on a parity change.
  std::optional<Event> observe(const Word& z);

  // Same as observe, but skips computing Z̃ (left empty) unless
  // |Y_k| == want_length. For long simulations.
  std::optional<Event> observe_lazy(const Word& z, std::size_t want_length);

  bool started() const { return started_; }

 private:
  std::optional<Event> advance(const Word& z, std::optional<std::size_t> want_length);

  GasketConfig cfg_;
  bool started_ = false;
  Word anchor_;
  std::vector<Word> skip_;
  Permutation g_;
  std::size_t k_ = 0;
  std::size_t l_ = 0;
};

struct StopPoint {
  std::size_t time;  // T_k
  Word y;            // Y_k
};

// All (T_k, Y_k) realized within the path.
std::vector<StopPoint> extract_y_chain(const WalkPath& path, const GasketConfig& cfg);

// One row per walk step, mirroring the layout
//   n | Z_n | k | Y_k | L_k | G_{L_k} | Z̃_k
// with the last five present only at stopping times.
struct TraceRow {
  std::size_t n;
  Word z;
  std::optional<std::size_t> k;
  std::optional<Word> y;
  std::optional<std::size_t> l;
  std::optional<Permutation> g;
  std::optional<Word> z_tilde;
};

struct CouplingTrace {
  int d = 1;
  std::vector<TraceRow> rows;

  // The defined Z̃_k in order.
  std::vector<Word> folded() const;
};

// Throws std::invalid_argument if the path is not a walk path.
CouplingTrace fold(const WalkPath& path, const GasketConfig& cfg);

// Runs the base walk until the folded walk first has length `level` and
// returns that folded vertex. Its law is the exit law of the simple random
// walk on 0X started at 0.
Word folded_walk_endpoint(const Word& start, std::size_t level, RandomStream& rng,
                          const GasketConfig& cfg, const WalkOptions& options = {});

// Length-N prefix of the folded walk at its first visit to length N + burn.
Word folded_limit_cell_estimate(const Word& start, std::size_t level, std::size_t burn,
                                RandomStream& rng, const GasketConfig& cfg,
                                const WalkOptions& options = {});

}  // namespace gasket

#endif  // GASKET_COUPLING_H_

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

#ifndef GASKET_RANDOM_H_
#define GASKET_RANDOM_H_

#include <cstdint>
#include <limits>

namespace gasket {

// Identifies one independent random stream.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// Counter-based generator: the n-th output of a stream is a fixed function of
// (master_seed, stream_index, n). There is no shared state, so results do not
// depend on how streams are scheduled across threads.
//
// Output n is mix(key + mix(n)), where mix is the SplitMix64 finalizer and key
// is derived from the spec by the same finalizer.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(const RngSpec& spec);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  // Double in [0, 1).
  double uniform_real();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace gasket

#endif  // GASKET_RANDOM_H_

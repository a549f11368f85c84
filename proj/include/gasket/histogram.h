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

#ifndef GASKET_HISTOGRAM_H_
#define GASKET_HISTOGRAM_H_

#include <cstdint>
#include <vector>

#include "gasket/config.h"
#include "gasket/word.h"

namespace gasket {

// Counts of walks per level-n cell; the empirical version of the hitting
// distribution restricted to cells of one level. Dense over all (d+1)^n
// cells, indexed by rank.
class CellHistogram {
 public:
  CellHistogram(std::size_t level, const GasketConfig& cfg);

  std::size_t level() const { return level_; }
  const GasketConfig& config() const { return cfg_; }
  std::uint64_t total() const { return total_; }
  std::size_t num_cells() const { return counts_.size(); }

  void add(const Word& cell, std::uint64_t count = 1);
  void add_rank(std::uint64_t r, std::uint64_t count = 1);
  // Associative and commutative.
  void merge(const CellHistogram& other);

  std::uint64_t count(const Word& cell) const;
  std::uint64_t count_rank(std::uint64_t r) const { return counts_.at(r); }
  double fraction(const Word& cell) const;
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  // Pushes counts forward to the length-`level` prefixes.
  CellHistogram coarsen(std::size_t level) const;

  bool operator==(const CellHistogram& other) const {
    return level_ == other.level_ && cfg_ == other.cfg_ && counts_ == other.counts_;
  }

 private:
  std::size_t level_;
  GasketConfig cfg_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace gasket

#endif  // GASKET_HISTOGRAM_H_

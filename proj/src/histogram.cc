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

#include "gasket/histogram.h"

#include <stdexcept>

namespace gasket {

CellHistogram::CellHistogram(std::size_t level, const GasketConfig& cfg)
    : level_(level), cfg_(cfg), counts_(level_size(level, cfg), 0) {}

void CellHistogram::add(const Word& cell, std::uint64_t count) {
  if (cell.size() != level_) throw std::invalid_argument("cell length differs from histogram level");
  add_rank(rank(cell, cfg_), count);
}

void CellHistogram::add_rank(std::uint64_t r, std::uint64_t count) {
  counts_.at(r) += count;
  total_ += count;
}

void CellHistogram::merge(const CellHistogram& other) {
  if (other.level_ != level_ || !(other.cfg_ == cfg_)) {
    throw std::invalid_argument("cannot merge histograms of different shape");
  }
  for (std::size_t r = 0; r < counts_.size(); ++r) counts_[r] += other.counts_[r];
  total_ += other.total_;
}

std::uint64_t CellHistogram::count(const Word& cell) const {
  if (cell.size() != level_) throw std::invalid_argument("cell length differs from histogram level");
  return counts_[rank(cell, cfg_)];
}

double CellHistogram::fraction(const Word& cell) const {
  return total_ == 0 ? 0.0
                     : static_cast<double>(count(cell)) / static_cast<double>(total_);
}

CellHistogram CellHistogram::coarsen(std::size_t level) const {
  if (level > level_) throw std::invalid_argument("cannot refine a histogram");
  CellHistogram out(level, cfg_);
  const std::uint64_t block = level_size(level_ - level, cfg_);
  for (std::uint64_t r = 0; r < counts_.size(); ++r) {
    if (counts_[r] != 0) out.add_rank(r / block, counts_[r]);
  }
  return out;
}

}  // namespace gasket

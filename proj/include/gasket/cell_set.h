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

#ifndef GASKET_CELL_SET_H_
#define GASKET_CELL_SET_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasket/config.h"
#include "gasket/permutation.h"
#include "gasket/rational.h"
#include "gasket/word.h"

namespace gasket {

// A union of level-n cells K_w, stored as a bitmask over word ranks.
// Distinct cells overlap only in dyadic points, which carry no mass.
class CellSet {
 public:
  CellSet(std::size_t level, const GasketConfig& cfg);
  static CellSet of(std::size_t level, std::span<const Word> members,
                    const GasketConfig& cfg);

  std::size_t level() const { return level_; }
  const GasketConfig& config() const { return cfg_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(const Word& w) const;
  bool contains_rank(std::uint64_t r) const {
    return (bits_[r / 64] >> (r % 64)) & 1U;
  }
  void insert(const Word& w);
  void insert_rank(std::uint64_t r) { bits_[r / 64] |= std::uint64_t{1} << (r % 64); }

  // Members in lexicographic order.
  std::vector<Word> members() const;

  CellSet operator|(const CellSet& other) const;
  CellSet operator&(const CellSet& other) const;
  bool operator==(const CellSet& other) const;

 private:
  void check_compatible(const CellSet& other) const;

  std::size_t level_;
  GasketConfig cfg_;
  std::uint64_t cells_;
  std::vector<std::uint64_t> bits_;
};

// "{00,01}".
std::string to_string(const CellSet& set);

// μ(K_x) = (d+1)^{-|x|}.
Rational mu_cell_mass(const Word& x, const GasketConfig& cfg);
Rational mu_mass(const CellSet& set);

// Letterwise image of every member.
CellSet apply_group(const CellSet& set, const Permutation& g);

bool is_invariant(const CellSet& set, std::span<const Permutation> group);
// Smallest invariant superset: the union of all images.
CellSet symmetrize(const CellSet& set, std::span<const Permutation> group);

// Members with first symbol s.
CellSet restrict_to_first(const CellSet& set, Symbol s);

class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// For B ⊂ K_0 invariant under the stabilizer of 0:
//   preimage    = F_0^{-1}(B), the members with the leading 0 removed,
//   union_image = ⋃_{i=0..d} R_{0i} B.
struct SelfSimilarUnfolding {
  CellSet preimage;
  CellSet union_image;
};

// Throws std::invalid_argument if a member does not start with 0 and
// NotInvariant if B is not stabilizer-invariant.
SelfSimilarUnfolding unfold_selfsimilar(const CellSet& set);

}  // namespace gasket

#endif  // GASKET_CELL_SET_H_

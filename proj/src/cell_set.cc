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

#include "gasket/cell_set.h"

#include <bit>

namespace gasket {

CellSet::CellSet(std::size_t level, const GasketConfig& cfg)
    : level_(level), cfg_(cfg), cells_(level_size(level, cfg)), bits_((cells_ + 63) / 64, 0) {}

CellSet CellSet::of(std::size_t level, std::span<const Word> members,
                    const GasketConfig& cfg) {
  CellSet set(level, cfg);
  for (const Word& w : members) set.insert(w);
  return set;
}

std::size_t CellSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t b : bits_) n += std::popcount(b);
  return n;
}

bool CellSet::contains(const Word& w) const {
  return w.size() == level_ && contains_rank(rank(w, cfg_));
}

void CellSet::insert(const Word& w) {
  if (w.size() != level_) {
    throw std::invalid_argument("cell length differs from set level");
  }
  validate(w, cfg_);
  insert_rank(rank(w, cfg_));
}

std::vector<Word> CellSet::members() const {
  std::vector<Word> out;
  for (std::uint64_t r = 0; r < cells_; ++r) {
    if (contains_rank(r)) out.push_back(unrank(r, level_, cfg_));
  }
  return out;
}

void CellSet::check_compatible(const CellSet& other) const {
  if (other.level_ != level_ || !(other.cfg_ == cfg_)) {
    throw std::invalid_argument("cell sets of different level or dimension");
  }
}

CellSet CellSet::operator|(const CellSet& other) const {
  check_compatible(other);
  CellSet out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= other.bits_[k];
  return out;
}

CellSet CellSet::operator&(const CellSet& other) const {
  check_compatible(other);
  CellSet out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] &= other.bits_[k];
  return out;
}

bool CellSet::operator==(const CellSet& other) const {
  return level_ == other.level_ && cfg_ == other.cfg_ && bits_ == other.bits_;
}

std::string to_string(const CellSet& set) {
  std::string out = "{";
  bool first = true;
  for (const Word& w : set.members()) {
    if (!first) out += ',';
    out += to_string(w, set.config());
    first = false;
  }
  return out + "}";
}

Rational mu_cell_mass(const Word& x, const GasketConfig& cfg) {
  validate(x, cfg);
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), cfg.alphabet_size(), x.size());
  return Rational(mpz_class(1), denom);
}

Rational mu_mass(const CellSet& set) {
  Rational m = mu_cell_mass(Word::constant(0, set.level()), set.config());
  m *= static_cast<unsigned long>(set.size());
  return m;
}

CellSet apply_group(const CellSet& set, const Permutation& g) {
  const GasketConfig& cfg = set.config();
  if (g.size() != static_cast<std::size_t>(cfg.alphabet_size())) {
    throw std::invalid_argument("permutation dimension differs from set");
  }
  const std::uint64_t a = cfg.alphabet_size();
  const std::uint64_t cells = level_size(set.level(), cfg);
  CellSet out(set.level(), cfg);
  for (std::uint64_t r = 0; r < cells; ++r) {
    if (!set.contains_rank(r)) continue;
    // Map digits of r through g, most significant first.
    std::uint64_t image = 0, place = 1, rest = r;
    for (std::size_t k = 0; k < set.level(); ++k) {
      image += place * g(static_cast<Symbol>(rest % a));
      rest /= a;
      place *= a;
    }
    out.insert_rank(image);
  }
  return out;
}

bool is_invariant(const CellSet& set, std::span<const Permutation> group) {
  for (const Permutation& g : group) {
    if (!(apply_group(set, g) == set)) return false;
  }
  return true;
}

CellSet symmetrize(const CellSet& set, std::span<const Permutation> group) {
  CellSet out = set;
  for (const Permutation& g : group) out = out | apply_group(set, g);
  return out;
}

CellSet restrict_to_first(const CellSet& set, Symbol s) {
  CellSet out(set.level(), set.config());
  if (set.level() == 0) return out;
  const std::uint64_t block = level_size(set.level() - 1, set.config());
  for (std::uint64_t r = s * block; r < (s + 1) * block; ++r) {
    if (set.contains_rank(r)) out.insert_rank(r);
  }
  return out;
}

SelfSimilarUnfolding unfold_selfsimilar(const CellSet& set) {
  const GasketConfig& cfg = set.config();
  if (set.level() == 0) throw std::invalid_argument("self-similar unfolding needs level >= 1");
  if (!(restrict_to_first(set, 0) == set)) {
    throw std::invalid_argument("set is not contained in the 0-cell");
  }
  const std::vector<Permutation> stabilizer = stabilizer_of_zero(cfg);
  if (!is_invariant(set, stabilizer)) {
    throw NotInvariant("set is not invariant under the stabilizer of 0: " + to_string(set));
  }
  SelfSimilarUnfolding out{CellSet(set.level() - 1, cfg), CellSet(set.level(), cfg)};
  // Members with leading 0 are exactly the ranks below block.
  const std::uint64_t block = level_size(set.level() - 1, cfg);
  for (std::uint64_t r = 0; r < block; ++r) {
    if (set.contains_rank(r)) out.preimage.insert_rank(r);
  }
  for (int i = 0; i < cfg.alphabet_size(); ++i) {
    out.union_image =
        out.union_image | apply_group(set, Permutation::reflection(0, static_cast<Symbol>(i), cfg));
  }
  return out;
}

}  // namespace gasket

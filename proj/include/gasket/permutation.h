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

#ifndef GASKET_PERMUTATION_H_
#define GASKET_PERMUTATION_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gasket/bary_point.h"
#include "gasket/config.h"
#include "gasket/word.h"

namespace gasket {

// An element of the symmetry group of K^d, represented through its action
// on vertex labels: images()[i] = g(i). Composition follows
// (g * h)(i) = g(h(i)).
class Permutation {
 public:
  // Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Symbol> images);

  static Permutation identity(const GasketConfig& cfg);
  // R_ij; R_ii is the identity.
  static Permutation reflection(Symbol i, Symbol j, const GasketConfig& cfg);

  Symbol operator()(Symbol i) const { return images_[i]; }
  std::size_t size() const { return images_.size(); }
  const std::vector<Symbol>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Symbol> images_;
};

Permutation operator*(const Permutation& g, const Permutation& h);

// All (d+1)! elements in lexicographic order of their image strings.
std::vector<Permutation> symmetry_group(const GasketConfig& cfg);

// The d! elements fixing the symbol 0, i.e. mapping the cell K_0 to itself.
std::vector<Permutation> stabilizer_of_zero(const GasketConfig& cfg);

// Letterwise action: g(i_1 ... i_n) = g(i_1) ... g(i_n).
Word act_word(const Permutation& g, const Word& x);

// Sends p_i to p_{g(i)}: coordinate i moves to position g(i).
BaryPoint act_point(const Permutation& g, const BaryPoint& b);

// R_{0,s_0} ∘ R_{s_0,s_1} ∘ ... ∘ R_{s_{p-1},s_p} for the parity sequence
// s_0, ..., s_p. Consecutive entries after the first must differ.
Permutation random_reflection_product(std::span<const Symbol> parities,
                                      const GasketConfig& cfg);

// One-line image notation, e.g. "021" for R_12 at d = 2. Comma separated
// when d > 9.
std::string to_string(const Permutation& g);
Permutation parse_permutation(std::string_view text, const GasketConfig& cfg);

// "id", "R_ij" for a transposition, otherwise the image string.
std::string label(const Permutation& g);

}  // namespace gasket

#endif  // GASKET_PERMUTATION_H_

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

#ifndef GASKET_WORD_H_
#define GASKET_WORD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gasket/config.h"

namespace gasket {

// A vertex of the Sierpinski graph: a finite address over {0, ..., d}. The
// empty word is the root. Words compare lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  static Word root() { return Word(); }
  // i^n.
  static Word constant(Symbol i, std::size_t n) {
    return Word(std::vector<Symbol>(n, i));
  }

  bool is_root() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }
  std::span<const Symbol> symbols() const { return symbols_; }

  Word child(Symbol i) const;
  Word prefix(std::size_t n) const;
  // Drops the first n symbols.
  Word suffix_from(std::size_t n) const;
  // s·this.
  Word prepend(Symbol s) const;

  // In-place edits used by the walk.
  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }
  void set(std::size_t i, Symbol s) { symbols_[i] = s; }
  void reserve(std::size_t n) { symbols_.reserve(n); }

  bool starts_with(const Word& prefix) const;
  // Length of the maximal constant suffix; 0 for the root.
  std::size_t trailing_run() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

// Throws std::invalid_argument unless every symbol is < d + 1.
void validate(const Word& x, const GasketConfig& cfg);

// x⁻. Throws std::invalid_argument for the root.
Word ancestor(const Word& x);

// First symbol; 0 for the root by convention.
Symbol parity(const Word& x);

// The parity-changing horizontal neighbours N_x:
//   {j : j != i}      if x = i,
//   {j i^(m-1)}       if x = i j^(m-1), i != j, m >= 2,
//   {}                otherwise.
// Returned sorted. Throws for the root.
std::vector<Word> neighbor_set(const Word& x, const GasketConfig& cfg);

// Text encoding. The root prints as "-"; "-" and "ϑ" both parse as the root.
// Letters are digits for d <= 9 and comma-separated integers above that.
std::string to_string(const Word& x, const GasketConfig& cfg);
Word parse_word(std::string_view text, const GasketConfig& cfg);

// Words of a fixed length are ranked as base-(d+1) numbers, which matches
// lexicographic order.
std::uint64_t level_size(std::size_t level, const GasketConfig& cfg);
std::uint64_t rank(const Word& x, const GasketConfig& cfg);
Word unrank(std::uint64_t r, std::size_t level, const GasketConfig& cfg);

// All words of the given length in lexicographic order.
std::vector<Word> words_of_length(std::size_t level, const GasketConfig& cfg);

// Shortlex position among all words of length < max: level-ordered, then
// lexicographic. Used to index states of the exact solvers.
std::uint64_t shortlex_index(const Word& x, const GasketConfig& cfg);
// Number of words of length < n.
std::uint64_t ball_size(std::size_t n, const GasketConfig& cfg);

}  // namespace gasket

#endif  // GASKET_WORD_H_

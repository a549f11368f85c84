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

#include "gasket/permutation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gasket {

Permutation::Permutation(std::vector<Symbol> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Symbol s : images_) {
    if (s >= images_.size() || seen[s]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[s] = true;
  }
}

Permutation Permutation::identity(const GasketConfig& cfg) {
  std::vector<Symbol> images(cfg.alphabet_size());
  std::iota(images.begin(), images.end(), Symbol{0});
  return Permutation(std::move(images));
}

Permutation Permutation::reflection(Symbol i, Symbol j, const GasketConfig& cfg) {
  if (i >= cfg.alphabet_size() || j >= cfg.alphabet_size()) {
    throw std::invalid_argument("reflection symbol out of range");
  }
  Permutation g = identity(cfg);
  std::swap(g.images_[i], g.images_[j]);
  return g;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Symbol> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Symbol>(i);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Symbol> images(g.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = g(h(static_cast<Symbol>(i)));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> symmetry_group(const GasketConfig& cfg) {
  std::vector<Symbol> images = Permutation::identity(cfg).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> stabilizer_of_zero(const GasketConfig& cfg) {
  std::vector<Symbol> images = Permutation::identity(cfg).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return out;
}

Word act_word(const Permutation& g, const Word& x) {
  std::vector<Symbol> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] >= g.size()) throw std::invalid_argument("symbol outside permutation domain");
    out[k] = g(x[k]);
  }
  return Word(std::move(out));
}

BaryPoint act_point(const Permutation& g, const BaryPoint& b) {
  if (b.numerators().size() != g.size()) {
    throw std::invalid_argument("point and permutation dimensions differ");
  }
  std::vector<std::int64_t> num(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    num[g(static_cast<Symbol>(i))] = b.numerators()[i];
  }
  return BaryPoint(std::move(num), b.level());
}

Permutation random_reflection_product(std::span<const Symbol> parities,
                                      const GasketConfig& cfg) {
  if (parities.empty()) throw std::invalid_argument("empty parity sequence");
  Permutation g = Permutation::reflection(0, parities[0], cfg);
  for (std::size_t p = 1; p < parities.size(); ++p) {
    if (parities[p] == parities[p - 1]) {
      throw std::invalid_argument("consecutive parities must differ");
    }
    g = g * Permutation::reflection(parities[p - 1], parities[p], cfg);
  }
  return g;
}

std::string to_string(const Permutation& g) {
  std::string out;
  const bool wide = g.size() > 10;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (wide) {
      if (i > 0) out += ',';
      out += std::to_string(g(static_cast<Symbol>(i)));
    } else {
      out += static_cast<char>('0' + g(static_cast<Symbol>(i)));
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text, const GasketConfig& cfg) {
  // Same lexical form as a word of length d + 1.
  Word w = text == "-" ? Word() : parse_word(text, cfg);
  if (w.size() != static_cast<std::size_t>(cfg.alphabet_size())) {
    throw std::invalid_argument("permutation must list d + 1 images");
  }
  return Permutation(std::vector<Symbol>(w.symbols().begin(), w.symbols().end()));
}

std::string label(const Permutation& g) {
  std::vector<std::size_t> moved;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g(static_cast<Symbol>(i)) != i) moved.push_back(i);
  }
  if (moved.empty()) return "id";
  if (moved.size() == 2 && g(static_cast<Symbol>(moved[0])) == moved[1]) {
    const bool wide = g.size() > 10;
    return "R_" + std::to_string(moved[0]) + (wide ? "," : "") +
           std::to_string(moved[1]);
  }
  return to_string(g);
}

}  // namespace gasket

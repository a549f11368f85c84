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

#include "gasket/graph.h"

#include <algorithm>
#include <stdexcept>

#include "gasket/bary_point.h"

namespace gasket {
namespace {

bool vertical(const Word& x, const Word& y) {
  if (x.size() == y.size() + 1) return x.starts_with(y);
  if (y.size() == x.size() + 1) return y.starts_with(x);
  return false;
}

// The extra horizontal neighbour u·c·e^r of x = u·e·c^r, if x is not constant.
std::optional<Word> exchange_neighbor(const Word& x) {
  const std::size_t n = x.size();
  const std::size_t r = x.trailing_run();
  if (n == 0 || r == n) return std::nullopt;
  const std::size_t pos = n - r - 1;
  Word y = x;
  const Symbol c = x.back();
  const Symbol e = x[pos];
  y.set(pos, c);
  for (std::size_t k = pos + 1; k < n; ++k) y.set(k, e);
  return y;
}

}  // namespace

std::vector<Word> NeighborList::all() const {
  std::vector<Word> out;
  out.reserve(degree());
  if (parent) out.push_back(*parent);
  out.insert(out.end(), children.begin(), children.end());
  out.insert(out.end(), horizontal.begin(), horizontal.end());
  return out;
}

bool adjacent_combinatorial(const Word& x, const Word& y) {
  if (x.size() != y.size()) return vertical(x, y);
  const std::size_t n = x.size();
  std::size_t p = 0;
  while (p < n && x[p] == y[p]) ++p;
  if (p == n) return false;
  const Symbol i = x[p];
  const Symbol j = y[p];
  for (std::size_t k = p + 1; k < n; ++k) {
    if (x[k] != j || y[k] != i) return false;
  }
  return true;
}

bool adjacent_geometric(const Word& x, const Word& y, const GasketConfig& cfg) {
  if (x.size() != y.size()) return vertical(x, y);
  if (x == y) return false;
  const std::vector<BaryPoint> vx = cell_vertices(x, cfg);
  const std::vector<BaryPoint> vy = cell_vertices(y, cfg);
  for (const BaryPoint& a : vx) {
    if (std::find(vy.begin(), vy.end(), a) != vy.end()) return true;
  }
  return false;
}

std::vector<Word> horizontal_neighbors(const Word& x, const GasketConfig& cfg) {
  std::vector<Word> out;
  if (x.is_root()) return out;
  Word sibling = x;
  for (int b = 0; b < cfg.alphabet_size(); ++b) {
    if (b == x.back()) continue;
    sibling.set(x.size() - 1, static_cast<Symbol>(b));
    out.push_back(sibling);
  }
  if (auto extra = exchange_neighbor(x)) out.push_back(std::move(*extra));
  std::sort(out.begin(), out.end());
  return out;
}

NeighborList neighbors(const Word& x, const GasketConfig& cfg) {
  validate(x, cfg);
  NeighborList list;
  list.vertex = x;
  if (!x.is_root()) list.parent = ancestor(x);
  list.children.reserve(cfg.alphabet_size());
  for (int i = 0; i < cfg.alphabet_size(); ++i) {
    list.children.push_back(x.child(static_cast<Symbol>(i)));
  }
  list.horizontal = horizontal_neighbors(x, cfg);
  return list;
}

int degree(const Word& x, const GasketConfig& cfg) {
  if (x.is_root()) return cfg.alphabet_size();
  return 2 * cfg.alphabet_size() + (x.trailing_run() < x.size() ? 1 : 0);
}

void move_to_neighbor(Word& x, std::uint64_t index, const GasketConfig& cfg) {
  const std::uint64_t a = cfg.alphabet_size();
  if (x.is_root()) {
    if (index >= a) throw std::out_of_range("neighbor index out of range");
    x.push_back(static_cast<Symbol>(index));
    return;
  }
  if (index == 0) {
    x.pop_back();
    return;
  }
  index -= 1;
  if (index < a) {
    x.push_back(static_cast<Symbol>(index));
    return;
  }
  index -= a;
  // Horizontal block: siblings in symbol order, with the exchange neighbour
  // placed first if it sorts before them.
  const std::size_t n = x.size();
  const std::size_t r = x.trailing_run();
  const Symbol c = x.back();
  const bool has_extra = r < n;
  const bool extra_first = has_extra && c < x[n - r - 1];
  const std::uint64_t siblings = a - 1;
  auto take_extra = [&] {
    const std::size_t pos = n - r - 1;
    const Symbol e = x[pos];
    x.set(pos, c);
    for (std::size_t k = pos + 1; k < n; ++k) x.set(k, e);
  };
  if (extra_first) {
    if (index == 0) {
      take_extra();
      return;
    }
    index -= 1;
  }
  if (index < siblings) {
    // Skip the current last symbol.
    Symbol b = static_cast<Symbol>(index);
    if (b >= c) ++b;
    x.set(n - 1, b);
    return;
  }
  if (has_extra && !extra_first && index == siblings) {
    take_extra();
    return;
  }
  throw std::out_of_range("neighbor index out of range");
}

int subtree_degree(const Word& x, Symbol prefix, const GasketConfig& cfg) {
  if (x.is_root() || x.front() != prefix) {
    throw std::invalid_argument("word is not in the subtree");
  }
  int count = 0;
  for (const Word& y : neighbors(x, cfg).all()) {
    if (!y.is_root() && y.front() == prefix) ++count;
  }
  return count;
}

bool adjacent_in_subtree(const Word& x, const Word& y, Symbol prefix) {
  return !x.is_root() && !y.is_root() && x.front() == prefix &&
         y.front() == prefix && adjacent_combinatorial(x, y);
}

void for_each_edge(std::size_t max_level, const GasketConfig& cfg,
                   const std::function<void(const Word&, const Word&, EdgeKind)>& visit) {
  for (std::size_t level = 0; level <= max_level; ++level) {
    for (const Word& x : words_of_length(level, cfg)) {
      if (level < max_level) {
        for (int i = 0; i < cfg.alphabet_size(); ++i) {
          visit(x, x.child(static_cast<Symbol>(i)), EdgeKind::kVertical);
        }
      }
      for (const Word& y : horizontal_neighbors(x, cfg)) {
        if (x < y) visit(x, y, EdgeKind::kHorizontal);
      }
    }
  }
}

}  // namespace gasket

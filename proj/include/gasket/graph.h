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

#ifndef GASKET_GRAPH_H_
#define GASKET_GRAPH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gasket/config.h"
#include "gasket/word.h"

namespace gasket {

// Adjacency of a vertex in the augmented rooted tree (X, E). The graph is
// never materialized; this is computed on demand in O(|x| d).
struct NeighborList {
  Word vertex;
  std::optional<Word> parent;
  std::vector<Word> children;    // vertex·0, ..., vertex·d
  std::vector<Word> horizontal;  // same length, lexicographically sorted

  int degree() const {
    return (parent ? 1 : 0) + static_cast<int>(children.size() + horizontal.size());
  }
  // Concatenation parent, children, horizontal. The walk indexes into this
  // order.
  std::vector<Word> all() const;
};

// Horizontal rule: x = w·i·j^k and y = w·j·i^k for some prefix w, i != j,
// k >= 0. Vertical rule: one is the ancestor of the other.
bool adjacent_combinatorial(const Word& x, const Word& y);

// Horizontal rule evaluated on exact cell geometry: equal length, x != y and
// the cells share a vertex. Same vertical rule.
bool adjacent_geometric(const Word& x, const Word& y, const GasketConfig& cfg);

// Sorted horizontal neighbours by the suffix-exchange rule: the d siblings
// plus, when x is not constant, the single word u·c·e^r obtained from
// x = u·e·c^r with c^r the maximal constant suffix.
std::vector<Word> horizontal_neighbors(const Word& x, const GasketConfig& cfg);

NeighborList neighbors(const Word& x, const GasketConfig& cfg);

// d + 1 at the root; otherwise 2d + 2, plus one when x is not constant.
int degree(const Word& x, const GasketConfig& cfg);

// Replaces x by its index-th neighbour in NeighborList::all() order without
// materializing the list. Requires index < degree(x).
void move_to_neighbor(Word& x, std::uint64_t index, const GasketConfig& cfg);

// Degree inside the subgraph prefix·X (edges with both ends starting with
// prefix). x must start with prefix.
int subtree_degree(const Word& x, Symbol prefix, const GasketConfig& cfg);
bool adjacent_in_subtree(const Word& x, const Word& y, Symbol prefix);

enum class EdgeKind { kVertical, kHorizontal };

// Calls visit(src, dst, kind) once per undirected edge with both ends of
// length <= max_level. Vertical edges are emitted parent -> child, horizontal
// edges with src < dst; order is shortlex by src.
void for_each_edge(std::size_t max_level, const GasketConfig& cfg,
                   const std::function<void(const Word&, const Word&, EdgeKind)>& visit);

}  // namespace gasket

#endif  // GASKET_GRAPH_H_

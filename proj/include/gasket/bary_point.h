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

#ifndef GASKET_BARY_POINT_H_
#define GASKET_BARY_POINT_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gasket/config.h"
#include "gasket/rational.h"
#include "gasket/word.h"

namespace gasket {

// A dyadic point of the simplex in barycentric coordinates with respect to
// p_0, ..., p_d: numerators / 2^level. Always stored in canonical form, so
// two points are equal iff their representations are equal.
class BaryPoint {
 public:
  // Largest level whose denominator fits the integer representation.
  static constexpr int kMaxLevel = 62;

  // Throws std::invalid_argument if numerators are negative or do not sum to
  // 2^level.
  BaryPoint(std::vector<std::int64_t> numerators, int level);

  // The simplex vertex p_i.
  static BaryPoint vertex(int i, const GasketConfig& cfg);

  const std::vector<std::int64_t>& numerators() const { return numerators_; }
  int level() const { return level_; }
  std::size_t dimension() const { return numerators_.size() - 1; }

  // Image under F_i: b -> (b + e_i) / 2.
  BaryPoint contract_toward(int i) const;

  auto operator<=>(const BaryPoint&) const = default;
  bool operator==(const BaryPoint&) const = default;

 private:
  void canonicalize();

  std::vector<std::int64_t> numerators_;
  int level_;
};

// Halves while all numerators are even. Exposed for property tests.
BaryPoint canonical(std::vector<std::int64_t> numerators, int level);

// Cross-multiplied equality of the represented points, independent of form.
bool same_point(const std::vector<std::int64_t>& a, int level_a,
                const std::vector<std::int64_t>& b, int level_b);

// F_x(b) = F_{x_1} ∘ ... ∘ F_{x_n}(b).
BaryPoint apply_word_map(const Word& x, const BaryPoint& b);

// p_x = F_{x_1 ... x_{n-1}}(p_{x_n}). Throws for the root.
BaryPoint dyadic_point(const Word& x, const GasketConfig& cfg);

// F_x(p_0), ..., F_x(p_d) in that order.
std::vector<BaryPoint> cell_vertices(const Word& x, const GasketConfig& cfg);

// The projection ι(x): barycenter of the vertices of K_x, exact.
std::vector<Rational> projection(const Word& x, const GasketConfig& cfg);

std::string to_string(const BaryPoint& b);

}  // namespace gasket

#endif  // GASKET_BARY_POINT_H_

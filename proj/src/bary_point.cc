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

#include "gasket/bary_point.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gasket {

BaryPoint::BaryPoint(std::vector<std::int64_t> numerators, int level)
    : numerators_(std::move(numerators)), level_(level) {
  if (level_ < 0 || level_ > kMaxLevel) {
    throw std::invalid_argument("barycentric level out of range");
  }
  if (numerators_.size() < 2) {
    throw std::invalid_argument("barycentric point needs at least 2 coordinates");
  }
  std::int64_t sum = 0;
  for (std::int64_t v : numerators_) {
    if (v < 0) throw std::invalid_argument("negative barycentric numerator");
    sum += v;
  }
  if (sum != (std::int64_t{1} << level_)) {
    throw std::invalid_argument("barycentric numerators must sum to 2^level");
  }
  canonicalize();
}

void BaryPoint::canonicalize() {
  while (level_ > 0 &&
         std::all_of(numerators_.begin(), numerators_.end(),
                     [](std::int64_t v) { return v % 2 == 0; })) {
    for (std::int64_t& v : numerators_) v /= 2;
    --level_;
  }
}

BaryPoint BaryPoint::vertex(int i, const GasketConfig& cfg) {
  std::vector<std::int64_t> num(cfg.alphabet_size(), 0);
  num.at(i) = 1;
  return BaryPoint(std::move(num), 0);
}

BaryPoint BaryPoint::contract_toward(int i) const {
  if (level_ + 1 > kMaxLevel) {
    throw std::overflow_error("dyadic level exceeds exact integer range");
  }
  std::vector<std::int64_t> num = numerators_;
  num.at(i) += std::int64_t{1} << level_;
  return BaryPoint(std::move(num), level_ + 1);
}

BaryPoint canonical(std::vector<std::int64_t> numerators, int level) {
  return BaryPoint(std::move(numerators), level);
}

bool same_point(const std::vector<std::int64_t>& a, int level_a,
                const std::vector<std::int64_t>& b, int level_b) {
  if (a.size() != b.size()) return false;
  // a / 2^la == b / 2^lb  <=>  a * 2^lb == b * 2^la.
  for (std::size_t k = 0; k < a.size(); ++k) {
    mpz_class lhs = a[k], rhs = b[k];
    lhs <<= level_b;
    rhs <<= level_a;
    if (lhs != rhs) return false;
  }
  return true;
}

BaryPoint apply_word_map(const Word& x, const BaryPoint& b) {
  BaryPoint out = b;
  for (std::size_t k = x.size(); k-- > 0;) out = out.contract_toward(x[k]);
  return out;
}

BaryPoint dyadic_point(const Word& x, const GasketConfig& cfg) {
  if (x.is_root()) throw std::invalid_argument("p_x is undefined at the root");
  validate(x, cfg);
  return apply_word_map(ancestor(x), BaryPoint::vertex(x.back(), cfg));
}

std::vector<BaryPoint> cell_vertices(const Word& x, const GasketConfig& cfg) {
  validate(x, cfg);
  std::vector<BaryPoint> out;
  out.reserve(cfg.alphabet_size());
  for (int i = 0; i < cfg.alphabet_size(); ++i) {
    out.push_back(apply_word_map(x, BaryPoint::vertex(i, cfg)));
  }
  return out;
}

std::vector<Rational> projection(const Word& x, const GasketConfig& cfg) {
  std::vector<Rational> center(cfg.alphabet_size(), 0);
  for (const BaryPoint& v : cell_vertices(x, cfg)) {
    mpz_class denom = 1;
    denom <<= v.level();
    for (std::size_t k = 0; k < center.size(); ++k) {
      center[k] += Rational(mpz_class(v.numerators()[k]), denom);
    }
  }
  for (Rational& c : center) {
    c /= cfg.alphabet_size();
    c.canonicalize();
  }
  return center;
}

std::string to_string(const BaryPoint& b) {
  std::string out = "(";
  for (std::size_t k = 0; k < b.numerators().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(b.numerators()[k]);
  }
  out += ")/" + std::to_string(std::int64_t{1} << b.level());
  return out;
}

}  // namespace gasket

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

#include <gtest/gtest.h>

#include <stdexcept>

#include "gasket/bary_point.h"
#include "gasket/config.h"
#include "gasket/graph.h"
#include "gasket/word.h"

namespace gasket {
namespace {

const GasketConfig kD1(1), kD2(2), kD3(3);

Word w(std::string_view s, const GasketConfig& cfg = kD3) { return parse_word(s, cfg); }

TEST(Config, DerivedFields) {
  EXPECT_EQ(kD2.alphabet_size(), 3);
  EXPECT_NEAR(kD1.hausdorff_dim(), 1.0, 1e-15);
  EXPECT_NEAR(kD2.hausdorff_dim(), std::log2(3.0), 1e-15);
  EXPECT_THROW(GasketConfig(0), std::invalid_argument);
}

TEST(Word, Ancestor) {
  EXPECT_EQ(ancestor(w("001")), w("00"));
  EXPECT_EQ(ancestor(w("0")), Word::root());
  EXPECT_EQ(ancestor(w("120")), w("12"));
  EXPECT_THROW(ancestor(Word::root()), std::invalid_argument);
}

TEST(Word, Parity) {
  EXPECT_EQ(parity(w("120")), 1);
  EXPECT_EQ(parity(Word::root()), 0);
  EXPECT_EQ(parity(w("0111")), 0);
}

TEST(Word, NeighborSetCases) {
  EXPECT_EQ(neighbor_set(w("0", kD1), kD1), std::vector<Word>{w("1", kD1)});
  EXPECT_EQ(neighbor_set(w("10", kD1), kD1), std::vector<Word>{w("01", kD1)});
  EXPECT_TRUE(neighbor_set(w("012", kD2), kD2).empty());
  EXPECT_EQ(neighbor_set(w("1", kD2), kD2), (std::vector<Word>{w("0"), w("2")}));
  EXPECT_EQ(neighbor_set(w("2111"), kD3), std::vector<Word>{w("1222")});
  EXPECT_TRUE(neighbor_set(w("000"), kD3).empty());
  EXPECT_THROW(neighbor_set(Word::root(), kD1), std::invalid_argument);
}

TEST(Word, NeighborSetChangesParityAndIsAdjacent) {
  for (const GasketConfig& cfg : {kD1, kD2, kD3}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const Word& x : words_of_length(n, cfg)) {
        for (const Word& y : neighbor_set(x, cfg)) {
          EXPECT_NE(parity(y), parity(x));
          EXPECT_EQ(y.size(), x.size());
          EXPECT_TRUE(adjacent_geometric(x, y, cfg));
          const auto h = horizontal_neighbors(x, cfg);
          EXPECT_NE(std::find(h.begin(), h.end(), y), h.end());
        }
      }
    }
  }
}

TEST(Word, TextEncoding) {
  EXPECT_EQ(to_string(Word::root(), kD1), "-");
  EXPECT_EQ(parse_word("ϑ", kD1), Word::root());
  EXPECT_EQ(parse_word("-", kD1), Word::root());
  EXPECT_EQ(to_string(w("0121"), kD2), "0121");
  EXPECT_THROW(parse_word("3", kD2), std::invalid_argument);
  EXPECT_THROW(parse_word("0x", kD2), std::invalid_argument);
  const GasketConfig big(11);
  const Word x{10, 0, 11};
  EXPECT_EQ(to_string(x, big), "10,0,11");
  EXPECT_EQ(parse_word("10,0,11", big), x);
}

TEST(Word, RankRoundTrip) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto words = words_of_length(n, kD2);
    ASSERT_EQ(words.size(), level_size(n, kD2));
    for (std::size_t r = 0; r < words.size(); ++r) {
      EXPECT_EQ(rank(words[r], kD2), r);
      EXPECT_EQ(unrank(r, n, kD2), words[r]);
      if (r > 0) EXPECT_LT(words[r - 1], words[r]);
    }
  }
  EXPECT_EQ(ball_size(3, kD2), 1u + 3 + 9);
  EXPECT_EQ(shortlex_index(Word::root(), kD2), 0u);
  EXPECT_EQ(shortlex_index(w("2", kD2), kD2), 3u);
  EXPECT_EQ(shortlex_index(w("00", kD2), kD2), 4u);
}

TEST(Bary, CanonicalForm) {
  const BaryPoint b({2, 2}, 2);
  EXPECT_EQ(b.level(), 1);
  EXPECT_EQ(b.numerators(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(canonical({4, 0}, 2), BaryPoint::vertex(0, kD1));
  EXPECT_THROW(BaryPoint({1, 1}, 2), std::invalid_argument);
  EXPECT_THROW(BaryPoint({-1, 3}, 1), std::invalid_argument);
  // Idempotent and point-preserving.
  for (std::int64_t a = 0; a <= 16; ++a) {
    const BaryPoint c = canonical({a, 16 - a}, 4);
    EXPECT_EQ(canonical(c.numerators(), c.level()), c);
    EXPECT_TRUE(same_point(c.numerators(), c.level(), {a, 16 - a}, 4));
  }
}

TEST(Bary, DyadicPoints) {
  EXPECT_EQ(dyadic_point(w("01", kD1), kD1), BaryPoint({1, 1}, 1));
  EXPECT_EQ(dyadic_point(w("0", kD1), kD1), BaryPoint::vertex(0, kD1));
  EXPECT_EQ(dyadic_point(w("001", kD1), kD1), BaryPoint({3, 1}, 2));
  EXPECT_THROW(dyadic_point(Word::root(), kD1), std::invalid_argument);
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      if (i == j) continue;
      const Word ij{static_cast<Symbol>(i), static_cast<Symbol>(j)};
      const Word ji{static_cast<Symbol>(j), static_cast<Symbol>(i)};
      EXPECT_EQ(dyadic_point(ij, kD3), dyadic_point(ji, kD3));
    }
  }
}

TEST(Bary, CellVertices) {
  EXPECT_EQ(cell_vertices(Word::root(), kD2),
            (std::vector<BaryPoint>{BaryPoint::vertex(0, kD2), BaryPoint::vertex(1, kD2),
                                    BaryPoint::vertex(2, kD2)}));
  EXPECT_EQ(cell_vertices(w("0", kD1), kD1),
            (std::vector<BaryPoint>{BaryPoint({1, 0}, 0), BaryPoint({1, 1}, 1)}));
  // K_10 = F_1 F_0 [0, 1] = [1/2, 3/4] on the unit interval with p_1 = 1.
  EXPECT_EQ(cell_vertices(w("10", kD1), kD1),
            (std::vector<BaryPoint>{BaryPoint({1, 1}, 1), BaryPoint({1, 3}, 2)}));
}

TEST(Bary, ChildVerticesAreVerticesOrMidpoints) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const Word& x : words_of_length(n, kD3)) {
      const auto parent = cell_vertices(x, kD3);
      for (int i = 0; i <= 3; ++i) {
        for (const BaryPoint& v : cell_vertices(x.child(static_cast<Symbol>(i)), kD3)) {
          bool found = false;
          for (const BaryPoint& a : parent) {
            for (const BaryPoint& b : parent) {
              // 2v = a + b in a common denominator.
              const int level = std::max(a.level(), b.level()) + 1;
              std::vector<std::int64_t> sum(4);
              for (int k = 0; k < 4; ++k) {
                sum[k] = (a.numerators()[k] << (level - 1 - a.level())) +
                         (b.numerators()[k] << (level - 1 - b.level()));
              }
              found = found || same_point(sum, level, v.numerators(), v.level());
            }
          }
          EXPECT_TRUE(found) << to_string(x, kD3) << " child " << i;
        }
      }
    }
  }
}

TEST(Bary, ProjectionIsBarycenter) {
  const auto p = projection(w("10", kD1), kD1);
  EXPECT_EQ(p, (std::vector<Rational>{Rational(3, 8), Rational(5, 8)}));
  const auto q = projection(Word::root(), kD2);
  for (const Rational& c : q) EXPECT_EQ(c, Rational(1, 3));
}

TEST(Bary, LevelCap) {
  EXPECT_NO_THROW(cell_vertices(Word::constant(1, 62), kD1));
  EXPECT_THROW(cell_vertices(Word::constant(1, 63), kD1), std::overflow_error);
}

}  // namespace
}  // namespace gasket

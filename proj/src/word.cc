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

#include "gasket/word.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace gasket {

Word Word::child(Symbol i) const {
  Word result = *this;
  result.symbols_.push_back(i);
  return result;
}

Word Word::prefix(std::size_t n) const {
  if (n > symbols_.size()) throw std::out_of_range("prefix longer than word");
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + n));
}

Word Word::suffix_from(std::size_t n) const {
  if (n > symbols_.size()) throw std::out_of_range("suffix start past end");
  return Word(std::vector<Symbol>(symbols_.begin() + n, symbols_.end()));
}

Word Word::prepend(Symbol s) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + 1);
  out.push_back(s);
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.symbols_.begin(), prefix.symbols_.end(),
                    symbols_.begin());
}

std::size_t Word::trailing_run() const {
  if (symbols_.empty()) return 0;
  const Symbol last = symbols_.back();
  std::size_t r = 0;
  for (auto it = symbols_.rbegin(); it != symbols_.rend() && *it == last; ++it) {
    ++r;
  }
  return r;
}

void validate(const Word& x, const GasketConfig& cfg) {
  for (Symbol s : x.symbols()) {
    if (s >= cfg.alphabet_size()) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " out of range for d = " +
                                  std::to_string(cfg.d()));
    }
  }
}

Word ancestor(const Word& x) {
  if (x.is_root()) throw std::invalid_argument("the root has no ancestor");
  return x.prefix(x.size() - 1);
}

Symbol parity(const Word& x) { return x.is_root() ? 0 : x.front(); }

std::vector<Word> neighbor_set(const Word& x, const GasketConfig& cfg) {
  if (x.is_root()) throw std::invalid_argument("N_x is undefined at the root");
  std::vector<Word> out;
  const Symbol i = x.front();
  if (x.size() == 1) {
    for (int j = 0; j < cfg.alphabet_size(); ++j) {
      if (j != i) out.push_back(Word{static_cast<Symbol>(j)});
    }
    return out;
  }
  // x = i j^(m-1) with j != i.
  const Symbol j = x[1];
  if (j == i || x.trailing_run() != x.size() - 1) return out;
  out.push_back(Word::constant(i, x.size() - 1).prepend(j));
  return out;
}

std::string to_string(const Word& x, const GasketConfig& cfg) {
  if (x.is_root()) return "-";
  std::string out;
  const bool wide = cfg.d() > 9;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (wide) {
      if (k > 0) out += ',';
      out += std::to_string(x[k]);
    } else {
      out += static_cast<char>('0' + x[k]);
    }
  }
  return out;
}

Word parse_word(std::string_view text, const GasketConfig& cfg) {
  if (text == "-" || text == "ϑ") return Word::root();
  if (text.empty()) throw std::invalid_argument("empty word text");
  std::vector<Symbol> symbols;
  auto push = [&](int v) {
    if (v < 0 || v >= cfg.alphabet_size()) {
      throw std::invalid_argument("symbol out of range in word '" +
                                  std::string(text) + "'");
    }
    symbols.push_back(static_cast<Symbol>(v));
  };
  if (cfg.d() > 9) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view field = text.substr(pos, comma - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw std::invalid_argument("malformed word '" + std::string(text) + "'");
      }
      push(v);
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed word '" + std::string(text) + "'");
      }
      push(c - '0');
    }
  }
  return Word(std::move(symbols));
}

std::uint64_t level_size(std::size_t level, const GasketConfig& cfg) {
  std::uint64_t n = 1;
  const std::uint64_t a = cfg.alphabet_size();
  for (std::size_t k = 0; k < level; ++k) {
    if (n > std::numeric_limits<std::uint64_t>::max() / a) {
      throw std::overflow_error("level too large to enumerate");
    }
    n *= a;
  }
  return n;
}

std::uint64_t rank(const Word& x, const GasketConfig& cfg) {
  level_size(x.size(), cfg);  // overflow check
  std::uint64_t r = 0;
  for (Symbol s : x.symbols()) r = r * cfg.alphabet_size() + s;
  return r;
}

Word unrank(std::uint64_t r, std::size_t level, const GasketConfig& cfg) {
  std::vector<Symbol> symbols(level);
  const std::uint64_t a = cfg.alphabet_size();
  for (std::size_t k = level; k-- > 0;) {
    symbols[k] = static_cast<Symbol>(r % a);
    r /= a;
  }
  if (r != 0) throw std::out_of_range("rank exceeds level size");
  return Word(std::move(symbols));
}

std::vector<Word> words_of_length(std::size_t level, const GasketConfig& cfg) {
  const std::uint64_t n = level_size(level, cfg);
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(unrank(r, level, cfg));
  return out;
}

std::uint64_t ball_size(std::size_t n, const GasketConfig& cfg) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) total += level_size(k, cfg);
  return total;
}

std::uint64_t shortlex_index(const Word& x, const GasketConfig& cfg) {
  return ball_size(x.size(), cfg) + rank(x, cfg);
}

}  // namespace gasket

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

#ifndef GASKET_CONFIG_H_
#define GASKET_CONFIG_H_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gasket {

// A letter of the address alphabet {0, ..., d}.
using Symbol = std::uint8_t;

// Dimension of the gasket K^d. The address alphabet has d + 1 letters.
class GasketConfig {
 public:
  static constexpr int kMaxDimension = 254;

  explicit GasketConfig(int d) : d_(d) {
    if (d < 1 || d > kMaxDimension) {
      throw std::invalid_argument("gasket dimension must be in [1, " +
                                  std::to_string(kMaxDimension) +
                                  "], got " + std::to_string(d));
    }
  }

  int d() const { return d_; }
  int alphabet_size() const { return d_ + 1; }

  // log(d+1) / log 2; informational only.
  double hausdorff_dim() const {
    return std::log(static_cast<double>(d_ + 1)) / std::log(2.0);
  }

  bool operator==(const GasketConfig&) const = default;

 private:
  int d_;
};

}  // namespace gasket

#endif  // GASKET_CONFIG_H_

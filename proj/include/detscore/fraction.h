// Copyright 2026 The detscore Authors.
//
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

#ifndef DETSCORE_FRACTION_H_
#define DETSCORE_FRACTION_H_

#include <compare>
#include <cstdint>

namespace detscore {

__extension__ typedef unsigned __int128 Uint128;

// Non-negative rational with a positive denominator. Comparisons are exact
// (cross-multiplied in 128 bits); not normalized, so 1/2 == 2/4.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const auto lhs = static_cast<Uint128>(a.num) * b.den;
    const auto rhs = static_cast<Uint128>(b.num) * a.den;
    return lhs <=> rhs;
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

}  // namespace detscore

#endif  // DETSCORE_FRACTION_H_

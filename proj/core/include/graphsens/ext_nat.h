// Copyright 2026 The graphsens Authors
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

#ifndef GRAPHSENS_EXT_NAT_H_
#define GRAPHSENS_EXT_NAT_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace graphsens {

// A non-negative integer or infinity. Sensitivities of edgeless graphs are
// infinite, and minima over them must keep that case distinct from any
// finite value, so infinity is its own kind rather than a large sentinel.
class ExtNat {
 public:
  enum class Kind : std::uint8_t { kFinite, kInfinite };

  constexpr ExtNat() = default;
  constexpr ExtNat(int value) : value_(value) {  // NOLINT: implicit by design
    if (value < 0) throw std::invalid_argument("ExtNat must be non-negative");
  }

  static constexpr ExtNat Infinity() {
    ExtNat result;
    result.kind_ = Kind::kInfinite;
    return result;
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_infinite() const { return kind_ == Kind::kInfinite; }

  // Throws std::logic_error on infinity.
  constexpr int value() const {
    if (!is_finite()) throw std::logic_error("ExtNat::value() on infinity");
    return value_;
  }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.kind_ != b.kind_) return false;
    return a.is_infinite() || a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a,
                                                    const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return a.value_ <=> b.value_;
  }

  // Saturating: anything plus infinity is infinity.
  friend constexpr ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) return Infinity();
    return ExtNat(a.value_ + b.value_);
  }

 private:
  Kind kind_ = Kind::kFinite;
  int value_ = 0;
};

inline constexpr ExtNat Min(ExtNat a, ExtNat b) { return b < a ? b : a; }
inline constexpr ExtNat Max(ExtNat a, ExtNat b) { return a < b ? b : a; }

// Decimal digits, or the literal "inf".
inline std::string ToString(ExtNat x) {
  return x.is_finite() ? std::to_string(x.value()) : std::string("inf");
}

inline std::ostream& operator<<(std::ostream& os, ExtNat x) {
  return os << ToString(x);
}

}  // namespace graphsens

#endif  // GRAPHSENS_EXT_NAT_H_

// Copyright 2026 The espwalk Authors
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

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include "espwalk/errors.hpp"

namespace espwalk {

/// A time of the form numerator * pi / 2^exponent.
///
/// Every time the closed-form criteria produce has this shape, so times are
/// carried exactly and converted to radians only when a matrix is built.
struct DyadicTime {
  std::int64_t numerator = 0;
  int exponent = 0;

  /// Reduce to lowest terms (odd numerator or exponent 0).
  constexpr DyadicTime normalized() const noexcept {
    DyadicTime t = *this;
    if (t.numerator == 0) return {0, 0};
    while (t.exponent > 0 && t.numerator % 2 == 0) {
      t.numerator /= 2;
      --t.exponent;
    }
    return t;
  }

  constexpr DyadicTime times(std::int64_t k) const noexcept {
    return DyadicTime{numerator * k, exponent}.normalized();
  }

  double radians() const noexcept {
    return static_cast<double>(numerator) * std::numbers::pi / std::ldexp(1.0, exponent);
  }

  /// Phase angle theta * t reduced into [0, 2pi) using integer arithmetic.
  double phase_angle(std::int64_t theta) const noexcept {
    // theta*numerator*pi/2^e mod 2pi  <=>  (theta*numerator mod 2^(e+1)) * pi/2^e
    const std::int64_t period = std::int64_t{1} << (exponent + 1);
    std::int64_t k = (theta * numerator) % period;
    if (k < 0) k += period;
    return static_cast<double>(k) * std::numbers::pi / std::ldexp(1.0, exponent);
  }

  /// True iff this time equals an odd multiple of `base`.
  constexpr bool is_odd_multiple_of(DyadicTime base) const noexcept {
    const DyadicTime a = normalized();
    const DyadicTime b = base.normalized();
    if (a.numerator == 0 || b.numerator == 0) return false;
    // a/b = (a.num * 2^b.exp) / (b.num * 2^a.exp)
    if (a.exponent != b.exponent) return false;
    return a.numerator % b.numerator == 0 && (a.numerator / b.numerator) % 2 != 0;
  }

  /// "p/2^m" (meaning p*pi/2^m); "p" alone means p*pi.
  std::string to_string() const {
    if (exponent == 0) return std::to_string(numerator);
    return std::to_string(numerator) + "/2^" + std::to_string(exponent);
  }

  static DyadicTime parse(std::string_view text) {
    auto fail = [&] { return ParseError("time '" + std::string(text) + "'", "expected p/2^m"); };
    DyadicTime t;
    const auto slash = text.find('/');
    const auto head = text.substr(0, slash);
    auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), t.numerator);
    if (ec != std::errc{} || p != head.data() + head.size()) throw fail();
    if (slash == std::string_view::npos) return t;
    auto tail = text.substr(slash + 1);
    if (!tail.starts_with("2^")) throw fail();
    tail.remove_prefix(2);
    auto [q, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), t.exponent);
    if (ec2 != std::errc{} || q != tail.data() + tail.size() || t.exponent < 0 || t.exponent > 60)
      throw fail();
    return t;
  }

  friend constexpr bool operator==(DyadicTime a, DyadicTime b) noexcept {
    a = a.normalized();
    b = b.normalized();
    return a.numerator == b.numerator && a.exponent == b.exponent;
  }
};

}  // namespace espwalk

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

/**
 * @file gf2.hpp
 * @brief Linear algebra over F_2, GF(2^n) arithmetic and partial spreads.
 *
 * Vectors are bit-strings of fixed length m. Coordinate 1 is the leftmost
 * character of the textual form and the most significant bit of `value()`,
 * so "1100" has value 12. Ordering of vectors everywhere in the library is by
 * this integer value.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "espwalk/errors.hpp"

namespace espwalk {

class GF2Vector {
 public:
  static constexpr std::size_t kMaxLength = 62;

  GF2Vector() = default;

  GF2Vector(std::size_t length, std::uint64_t value) : length_(length), value_(value) {
    if (length > kMaxLength) throw DimensionError("GF2Vector length exceeds 62");
    if (length < 64 && (value >> length) != 0)
      throw DimensionError("GF2Vector value does not fit in " + std::to_string(length) + " bits");
  }

  static GF2Vector zero(std::size_t length) { return GF2Vector(length, 0); }

  static GF2Vector parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxLength)
      throw ParseError("bit-string '" + std::string(text) + "'", "length must be 1..62");
    std::uint64_t v = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw ParseError("bit-string '" + std::string(text) + "'", "only '0' and '1' allowed");
      v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return GF2Vector(text.size(), v);
  }

  std::size_t size() const noexcept { return length_; }
  std::uint64_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  int weight() const noexcept { return std::popcount(value_); }

  /// Coordinate `pos + 1` (0-based from the left).
  bool test(std::size_t pos) const {
    if (pos >= length_) throw DimensionError("coordinate out of range");
    return ((value_ >> (length_ - 1 - pos)) & 1U) != 0;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  GF2Vector& operator^=(const GF2Vector& other) {
    require_same(other);
    value_ ^= other.value_;
    return *this;
  }
  friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend std::strong_ordering operator<=>(const GF2Vector& a, const GF2Vector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GF2Vector& v) { return os << v.to_string(); }

  void require_same(const GF2Vector& other) const {
    if (other.length_ != length_)
      throw DimensionError("length mismatch: " + std::to_string(length_) + " vs " +
                           std::to_string(other.length_));
  }

 private:
  std::size_t length_ = 0;
  std::uint64_t value_ = 0;
};

/// Standard bilinear form: parity of the coordinatewise AND.
inline bool dot(const GF2Vector& y, const GF2Vector& x) {
  y.require_same(x);
  return (std::popcount(y.value() & x.value()) & 1) != 0;
}

/// Rank of the span, by elimination on leading bits. An empty list has rank 0.
inline std::size_t rank(std::span<const GF2Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t m = vectors.front().size();
  std::array<std::uint64_t, 64> pivot{};
  std::size_t r = 0;
  for (const auto& v : vectors) {
    if (v.size() != m) throw DimensionError("rank: mixed vector lengths");
    std::uint64_t x = v.value();
    while (x != 0) {
      const int lead = std::bit_width(x) - 1;
      if (pivot[lead] == 0) {
        pivot[lead] = x;
        ++r;
        break;
      }
      x ^= pivot[lead];
    }
  }
  return r;
}

inline bool spans_full(std::span<const GF2Vector> vectors, std::size_t m) {
  return !vectors.empty() && vectors.front().size() == m && rank(vectors) == m;
}

/// 2-adic valuation with a distinguished infinity (the valuation of 0) that
/// compares above every finite value.
class Valuation {
 public:
  constexpr explicit Valuation(int v) noexcept : v_(v) {}
  static constexpr Valuation infinity() noexcept { return Valuation(kInf); }

  constexpr bool is_infinite() const noexcept { return v_ == kInf; }
  int value() const {
    if (is_infinite()) throw DomainError("valuation is infinite");
    return v_;
  }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

  friend constexpr auto operator<=>(Valuation, Valuation) = default;

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int v_;
};

/// Largest e with 2^e | x; infinity for x = 0. Sign is ignored.
constexpr Valuation nu2(std::int64_t x) noexcept {
  if (x == 0) return Valuation::infinity();
  const auto mag = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
  return Valuation(std::countr_zero(mag));
}

// --- GF(2^n) ------------------------------------------------------------------

/// Irreducible modulus per degree, bit i = coefficient of x^i.
/// n=1 is F_2 itself; the degree-1 modulus never triggers a reduction.
inline constexpr std::array<std::uint32_t, 5> kIrreducible = {0, 0b11, 0b111, 0b1011, 0b10011};

inline bool gf2n_supported(int n) noexcept { return n >= 1 && n < static_cast<int>(kIrreducible.size()); }

/// Product in GF(2^n) = F_2[x]/(p_n). Elements are n-bit integers with bit i
/// the coefficient of x^i.
inline std::uint32_t gf2n_mul(std::uint32_t a, std::uint32_t b, int n) {
  if (!gf2n_supported(n))
    throw ConfigurationError("no irreducible polynomial stored for GF(2^" + std::to_string(n) + ")");
  if ((a >> n) != 0 || (b >> n) != 0) throw DomainError("gf2n_mul: operand has more than n bits");
  std::uint32_t prod = 0;
  for (int i = 0; i < n; ++i)
    if ((b >> i) & 1U) prod ^= a << i;
  const std::uint32_t mod = kIrreducible[n];
  for (int deg = 2 * n - 2; deg >= n; --deg)
    if ((prod >> deg) & 1U) prod ^= mod << (deg - n);
  return prod;
}

// --- Subspaces and spreads ------------------------------------------------------

class GF2Subspace {
 public:
  GF2Subspace() = default;

  /// Basis vectors must be nonempty, of one length, and independent.
  explicit GF2Subspace(std::vector<GF2Vector> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw ValidationError("subspace basis is empty");
    if (rank(basis_) != basis_.size()) throw ValidationError("subspace basis is linearly dependent");
  }

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return basis_.empty() ? 0 : basis_.front().size(); }
  const std::vector<GF2Vector>& basis() const noexcept { return basis_; }

  bool contains(const GF2Vector& v) const {
    if (v.is_zero()) return true;
    std::vector<GF2Vector> ext = basis_;
    ext.push_back(v);
    return rank(ext) == basis_.size();
  }

  /// Nonzero vectors of the span, ascending.
  std::vector<GF2Vector> points() const {
    std::vector<GF2Vector> out;
    const std::size_t k = basis_.size();
    out.reserve((std::size_t{1} << k) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      GF2Vector acc = GF2Vector::zero(ambient());
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) acc ^= basis_[i];
      out.push_back(acc);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool meets_trivially(const GF2Subspace& other) const {
    std::vector<GF2Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return rank(all) == dim() + other.dim();
  }

 private:
  std::vector<GF2Vector> basis_;
};

struct PartialSpread {
  std::size_t ambient = 0;
  std::vector<GF2Subspace> members;

  std::size_t size() const noexcept { return members.size(); }

  /// First `count` members, in order.
  PartialSpread take(std::size_t count) const {
    PartialSpread out{ambient, {}};
    for (std::size_t i = 0; i < std::min(count, members.size()); ++i) out.members.push_back(members[i]);
    return out;
  }
};

/// True iff every member has dimension k, lives in the ambient space, and any
/// two members meet only in zero.
inline bool validate_spread(const PartialSpread& spread, std::size_t k) {
  for (const auto& h : spread.members)
    if (h.dim() != k || h.ambient() != spread.ambient) return false;
  for (std::size_t i = 0; i < spread.members.size(); ++i)
    for (std::size_t j = i + 1; j < spread.members.size(); ++j)
      if (!spread.members[i].meets_trivially(spread.members[j])) return false;
  return true;
}

/// Union of the nonzero points of all members, ascending and deduplicated.
inline std::vector<GF2Vector> spread_points(const PartialSpread& spread) {
  std::set<GF2Vector> pts;
  for (const auto& h : spread.members) {
    auto p = h.points();
    pts.insert(p.begin(), p.end());
  }
  return {pts.begin(), pts.end()};
}

/// Vector of F_2^(2n) for the pair (a, b) of GF(2^n): coordinates 1..n carry
/// the coefficients of 1, x, ..., x^(n-1) of a; coordinates n+1..2n those of b.
inline GF2Vector pair_to_vector(std::uint32_t a, std::uint32_t b, int n) {
  std::uint64_t v = 0;
  const int m = 2 * n;
  for (int i = 0; i < n; ++i) {
    if ((a >> i) & 1U) v |= std::uint64_t{1} << (m - 1 - i);
    if ((b >> i) & 1U) v |= std::uint64_t{1} << (n - 1 - i);
  }
  return GF2Vector(static_cast<std::size_t>(m), v);
}

/// The 2^n + 1 one-dimensional GF(2^n)-subspaces of GF(2^n)^2, seen as
/// n-dimensional subspaces of F_2^(2n). Order: <(1,0)>, <(0,1)>, then
/// <(1,b)> for b = 1, 2, ..., 2^n - 1.
inline PartialSpread regular_spread(int n) {
  if (n < 1) throw DomainError("regular_spread: n must be >= 1");
  if (!gf2n_supported(n))
    throw ConfigurationError("no irreducible polynomial stored for GF(2^" + std::to_string(n) + ")");
  auto line = [n](std::uint32_t a, std::uint32_t b) {
    // F_2-basis of the GF(2^n)-line through (a, b): (x^i a, x^i b).
    std::vector<GF2Vector> basis;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t xi = 1U << i;
      basis.push_back(pair_to_vector(gf2n_mul(xi, a, n), gf2n_mul(xi, b, n), n));
    }
    return GF2Subspace(std::move(basis));
  };
  PartialSpread spread{static_cast<std::size_t>(2 * n), {}};
  spread.members.push_back(line(1, 0));
  spread.members.push_back(line(0, 1));
  for (std::uint32_t b = 1; b < (1U << n); ++b) spread.members.push_back(line(1, b));
  return spread;
}

// --- Spread file format ---------------------------------------------------------
// One subspace per line, basis vectors as bit-strings joined by commas.
// Lines starting with '#' and blank lines are ignored.

inline PartialSpread parse_spread(std::istream& in, const std::string& source = "spread") {
  PartialSpread spread;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno);
    std::vector<GF2Vector> basis;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      try {
        basis.push_back(GF2Vector::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError(where, e.what());
      }
    }
    if (basis.empty()) throw ParseError(where, "empty subspace");
    const std::size_t m = basis.front().size();
    if (spread.ambient == 0) spread.ambient = m;
    for (const auto& b : basis)
      if (b.size() != spread.ambient) throw ParseError(where, "vector length differs from ambient dimension");
    try {
      spread.members.emplace_back(std::move(basis));
    } catch (const ValidationError& e) {
      throw ParseError(where, e.what());
    }
  }
  return spread;
}

inline std::string format_spread(const PartialSpread& spread) {
  std::string out;
  for (const auto& h : spread.members) {
    for (std::size_t i = 0; i < h.basis().size(); ++i) {
      if (i) out += ',';
      out += h.basis()[i].to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace espwalk

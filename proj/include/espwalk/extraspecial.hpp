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
 * @file extraspecial.hpp
 * @brief Extraspecial 2-groups of order 2^(2n+1) in cocycle normal form.
 *
 * An element is a pair (v, eps) with v in F_2^(2n) the image in G/Z and eps
 * the central bit. The product is
 *
 *     (v, eps)(w, del) = (v + w, eps + del + B(v, w))
 *
 * for a bilinear cocycle B whose symmetrisation is the standard symplectic
 * form. Two cocycles give the two isomorphism types:
 *
 *   - Plus:  B(v, w) = sum_i v_{2i-1} w_{2i}              (D8 * ... * D8)
 *   - Minus: B(v, w) + v_1 w_1 + v_2 w_2                  (Q8 * D8 * ... * D8)
 *
 * Element index 2 * int(v) + eps fixes the row/column order of every matrix
 * built downstream.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "espwalk/gf2.hpp"

namespace espwalk {

enum class IsoType { Plus, Minus };

inline std::string to_string(IsoType t) { return t == IsoType::Plus ? "plus" : "minus"; }

inline IsoType parse_iso_type(std::string_view s) {
  if (s == "plus" || s == "+") return IsoType::Plus;
  if (s == "minus" || s == "-") return IsoType::Minus;
  throw ParseError("iso-type '" + std::string(s) + "'", "expected plus or minus");
}

struct GroupElement {
  GF2Vector v;
  bool eps = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class ExtraspecialGroup {
 public:
  static constexpr int kMaxN = 30;

  ExtraspecialGroup(int n, IsoType type) : n_(n), type_(type) {
    if (n < 1) throw DomainError("extraspecial group needs n >= 1");
    if (n > kMaxN) throw DomainError("extraspecial group: n too large");
    const std::size_t m = dimension();
    for (std::size_t i = 0; i < m; i += 2) {
      odd_mask_ |= std::uint64_t{1} << (m - 1 - i);   // coordinates 1, 3, 5, ...
      even_mask_ |= std::uint64_t{1} << (m - 2 - i);  // coordinates 2, 4, 6, ...
    }
    top_pair_mask_ = std::uint64_t{3} << (m - 2);
  }

  int n() const noexcept { return n_; }
  IsoType iso_type() const noexcept { return type_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(2 * n_); }
  std::uint64_t order() const noexcept { return std::uint64_t{1} << (2 * n_ + 1); }

  GroupElement identity() const { return {GF2Vector::zero(dimension()), false}; }
  GroupElement central_involution() const { return {GF2Vector::zero(dimension()), true}; }

  /// The 2-cocycle B(v, w).
  bool cocycle(const GF2Vector& v, const GF2Vector& w) const {
    check(v);
    check(w);
    const std::uint64_t a = v.value(), b = w.value();
    int parity = std::popcount(a & odd_mask_ & ((b & even_mask_) << 1));
    if (type_ == IsoType::Minus) parity += std::popcount(a & b & top_pair_mask_);
    return (parity & 1) != 0;
  }

  /// Q(v) = B(v, v); (v, eps)^2 = (0, Q(v)).
  bool quadratic(const GF2Vector& v) const { return cocycle(v, v); }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const {
    return {a.v ^ b.v, static_cast<bool>(a.eps ^ b.eps ^ cocycle(a.v, b.v))};
  }

  GroupElement inv(const GroupElement& a) const {
    return {a.v, static_cast<bool>(a.eps ^ quadratic(a.v))};
  }

  std::uint64_t index(const GroupElement& g) const {
    check(g.v);
    return 2 * g.v.value() + static_cast<std::uint64_t>(g.eps);
  }

  GroupElement element(std::uint64_t idx) const {
    if (idx >= order()) throw DomainError("element index out of range");
    return {GF2Vector(dimension(), idx >> 1), (idx & 1U) != 0};
  }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::uint64_t i = 0; i < order(); ++i) out.push_back(element(i));
    return out;
  }

  /// Order of g: 1, 2 or 4.
  int element_order(const GroupElement& g) const {
    if (g == identity()) return 1;
    return quadratic(g.v) ? 4 : 2;
  }

  bool is_central(const GroupElement& g) const { return g.v.is_zero(); }

  /// Classes {1}, {z}, then {(v,0),(v,1)} for each nonzero v ascending.
  std::vector<std::vector<GroupElement>> conjugacy_classes() const {
    std::vector<std::vector<GroupElement>> out;
    const std::size_t m = dimension();
    out.push_back({identity()});
    out.push_back({central_involution()});
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << m); ++v)
      out.push_back({{GF2Vector(m, v), false}, {GF2Vector(m, v), true}});
    return out;
  }

  std::vector<GroupElement> class_of(const GroupElement& g) const {
    check(g.v);
    if (g.v.is_zero()) return {g};
    return {{g.v, false}, {g.v, true}};
  }

 private:
  void check(const GF2Vector& v) const {
    if (v.size() != dimension())
      throw DimensionError("element of F_2^" + std::to_string(v.size()) + " used in group with 2n = " +
                           std::to_string(dimension()));
  }

  int n_;
  IsoType type_;
  std::uint64_t odd_mask_ = 0;
  std::uint64_t even_mask_ = 0;
  std::uint64_t top_pair_mask_ = 0;
};

// --- Abstract data for extraspecial p-groups, any prime -------------------------

struct ClassStructure {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t order = 0;                  // p^(2n+1)
  std::uint64_t class_count = 0;            // p^(2n) + p - 1
  std::uint64_t central_classes = 0;        // p, each of size 1
  std::uint64_t noncentral_classes = 0;     // p^(2n) - 1, each of size p
  std::uint64_t noncentral_class_size = 0;  // p
  std::uint64_t linear_characters = 0;      // p^(2n)
  std::uint64_t nonlinear_characters = 0;   // p - 1
  std::uint64_t nonlinear_degree = 0;       // p^n
  std::uint64_t nonlinear_support = 0;      // |Z| = p
};

inline bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw DomainError("p^k overflows 64 bits");
  return r;
}

/// Class and character counts of an extraspecial group of order p^(2n+1),
/// read off the known character table without building the group.
inline ClassStructure class_structure_p(std::uint64_t p, int n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("class_structure_p needs n >= 1");
  ClassStructure s;
  s.p = p;
  s.n = n;
  s.order = checked_pow(p, 2 * n + 1);
  const std::uint64_t quotient = checked_pow(p, 2 * n);
  s.central_classes = p;
  s.noncentral_classes = quotient - 1;
  s.noncentral_class_size = p;
  s.class_count = s.central_classes + s.noncentral_classes;
  s.linear_characters = quotient;
  s.nonlinear_characters = p - 1;
  s.nonlinear_degree = checked_pow(p, n);
  s.nonlinear_support = p;
  return s;
}

}  // namespace espwalk

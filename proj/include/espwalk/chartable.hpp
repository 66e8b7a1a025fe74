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
 * @file chartable.hpp
 * @brief Irreducible characters of extraspecial 2-groups and their central
 *        idempotents.
 *
 * Linear characters chi_y(v, eps) = (-1)^(y.v), one per y in F_2^(2n).
 * The single nonlinear character has degree 2^n, value 2^n at 1, -2^n at z
 * and 0 off the center.
 *
 * The idempotent of chi is
 *
 *     E_chi = chi(1)/|G| * sum_g chi(g^-1) L(g),
 *
 * with L the left-regular representation, so E_chi[x][y] = chi(1) chi(y x^-1) / |G|.
 * Numerators are integers; they are accumulated exactly and divided by |G|
 * once per projection.
 */
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <vector>

#include "espwalk/cayley.hpp"
#include "espwalk/extraspecial.hpp"

namespace espwalk {

struct Character {
  enum class Kind { Linear, Nonlinear };

  Kind kind = Kind::Linear;
  /// Defining vector for linear characters; the zero vector of F_2^(2n) for
  /// the nonlinear one (it still carries the dimension).
  GF2Vector y;

  static Character linear(GF2Vector y) { return {Kind::Linear, std::move(y)}; }
  static Character nonlinear(std::size_t dimension) { return {Kind::Nonlinear, GF2Vector::zero(dimension)}; }

  bool is_linear() const noexcept { return kind == Kind::Linear; }
  std::int64_t degree() const noexcept {
    return is_linear() ? 1 : std::int64_t{1} << (y.size() / 2);
  }

  std::string label() const { return is_linear() ? "linear(" + y.to_string() + ")" : "nonlinear"; }

  friend bool operator==(const Character&, const Character&) = default;
};

inline std::int64_t char_value(const Character& chi, const GroupElement& g) {
  chi.y.require_same(g.v);
  if (chi.is_linear()) return dot(chi.y, g.v) ? -1 : 1;
  if (!g.v.is_zero()) return 0;
  return g.eps ? -chi.degree() : chi.degree();
}

/// All irreducible characters: linear(y) by int(y) ascending, then nonlinear.
inline std::vector<Character> characters(const ExtraspecialGroup& G) {
  std::vector<Character> out;
  const std::size_t m = G.dimension();
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << m); ++y) out.push_back(Character::linear(GF2Vector(m, y)));
  out.push_back(Character::nonlinear(m));
  return out;
}

namespace detail {

/// q[x][y] = index of y x^-1, the only group element entering E[x][y].
inline std::vector<std::uint64_t> quotient_table(const ExtraspecialGroup& G) {
  const auto N = G.order();
  std::vector<std::uint64_t> q(N * N);
  std::vector<GroupElement> inverse(N);
  for (std::uint64_t x = 0; x < N; ++x) inverse[x] = G.inv(G.element(x));
  for (std::uint64_t x = 0; x < N; ++x)
    for (std::uint64_t y = 0; y < N; ++y) q[x * N + y] = G.index(G.mul(G.element(y), inverse[x]));
  return q;
}

/// Sum of chi(1) chi(g) over the given characters, for every g (by index).
inline std::vector<std::int64_t> weighted_class_function(const ExtraspecialGroup& G,
                                                         const std::vector<Character>& chars) {
  std::vector<std::int64_t> f(G.order(), 0);
  for (std::uint64_t g = 0; g < G.order(); ++g) {
    const auto el = G.element(g);
    for (const auto& chi : chars) f[g] += chi.degree() * char_value(chi, el);
  }
  return f;
}

inline Eigen::MatrixXd projection_from(const ExtraspecialGroup& G, const std::vector<std::uint64_t>& q,
                                       const std::vector<std::int64_t>& numerators) {
  const auto N = static_cast<Eigen::Index>(G.order());
  const double denom = static_cast<double>(G.order());
  Eigen::MatrixXd E(N, N);
  for (Eigen::Index x = 0; x < N; ++x)
    for (Eigen::Index y = 0; y < N; ++y)
      E(x, y) = static_cast<double>(numerators[q[static_cast<std::size_t>(x * N + y)]]) / denom;
  return E;
}

}  // namespace detail

inline Eigen::MatrixXd idempotent(const Character& chi, const ExtraspecialGroup& G) {
  const auto q = detail::quotient_table(G);
  return detail::projection_from(G, q, detail::weighted_class_function(G, {chi}));
}

struct EigenProjection {
  std::int64_t eigenvalue = 0;
  Eigen::MatrixXd matrix;
  std::vector<Character> members;

  /// Rank = sum of chi(1)^2 over the member characters.
  std::int64_t rank() const {
    std::int64_t r = 0;
    for (const auto& chi : members) r += chi.degree() * chi.degree();
    return r;
  }
};

/// chi(S) / chi(1), summed directly over the elements of S.
inline std::int64_t character_eigenvalue(const Character& chi, const ConnectionSet& c) {
  std::int64_t sum = 0;
  for (const auto& s : c.elements()) sum += char_value(chi, s);
  if (sum % chi.degree() != 0) throw InconsistencyError("chi(S) not divisible by chi(1) for " + chi.label());
  return sum / chi.degree();
}

/// Eigenprojections of Cay(G, S), one per distinct eigenvalue, largest first.
///
/// Characters are grouped by chi(S)/chi(1) evaluated on the actual elements of
/// S; nothing here consults the closed-form spectrum.
inline std::vector<EigenProjection> projections_for(const ConnectionSet& c, const ExtraspecialGroup& G) {
  require_valid(c, false);
  if (c.n != G.n()) throw DimensionError("connection set and group differ in n");
  std::map<std::int64_t, std::vector<Character>, std::greater<>> groups;
  for (auto& chi : characters(G)) groups[character_eigenvalue(chi, c)].push_back(std::move(chi));
  const auto q = detail::quotient_table(G);
  std::vector<EigenProjection> out;
  for (auto& [theta, members] : groups) {
    EigenProjection p;
    p.eigenvalue = theta;
    p.matrix = detail::projection_from(G, q, detail::weighted_class_function(G, members));
    p.members = std::move(members);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace espwalk

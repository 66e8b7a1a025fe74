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
 * @file cayley.hpp
 * @brief Normal Cayley graphs of extraspecial 2-groups.
 *
 * A connection set is stored by class representatives: a set C of nonzero
 * vectors of F_2^(2n) and a flag for z. It denotes
 *
 *     S = { (x, 0), (x, 1) : x in C }  [ u {z} ]
 *
 * which is a union of conjugacy classes and inverse-closed by construction.
 */
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "espwalk/extraspecial.hpp"
#include "espwalk/gf2.hpp"

namespace espwalk {

struct ConnectionSet {
  int n = 1;
  std::vector<GF2Vector> classes;
  bool include_z = false;

  ConnectionSet() = default;
  ConnectionSet(int n_, std::vector<GF2Vector> classes_, bool include_z_)
      : n(n_), classes(std::move(classes_)), include_z(include_z_) {
    std::sort(classes.begin(), classes.end());
  }

  /// Convenience: classes given as bit-strings.
  static ConnectionSet from_strings(int n, std::initializer_list<std::string_view> bits, bool include_z) {
    std::vector<GF2Vector> cs;
    for (auto b : bits) cs.push_back(GF2Vector::parse(b));
    return {n, std::move(cs), include_z};
  }

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(2 * n); }
  std::int64_t ell() const noexcept { return static_cast<std::int64_t>(classes.size()); }
  std::int64_t degree() const noexcept { return 2 * ell() + (include_z ? 1 : 0); }

  /// Elements of S, ascending by group index.
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    if (include_z) out.push_back({GF2Vector::zero(dimension()), true});
    for (const auto& x : classes) {
      out.push_back({x, false});
      out.push_back({x, true});
    }
    return out;
  }

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
};

enum class ValidationIssue { WrongLength, ZeroClass, DuplicateClass, Empty, Improper, NotGenerating };

inline std::string to_string(ValidationIssue i) {
  switch (i) {
    case ValidationIssue::WrongLength: return "class vector length differs from 2n";
    case ValidationIssue::ZeroClass: return "zero vector listed as a class";
    case ValidationIssue::DuplicateClass: return "duplicate class";
    case ValidationIssue::Empty: return "connection set is empty";
    case ValidationIssue::Improper: return "S = G \\ {1} (complete graph)";
    case ValidationIssue::NotGenerating: return "classes do not span F_2^(2n); S does not generate G";
  }
  return "unknown";
}

struct ValidationResult {
  bool valid = true;
  bool connected = true;
  std::vector<ValidationIssue> issues;

  std::string explain() const {
    std::string s;
    for (auto i : issues) {
      if (!s.empty()) s += "; ";
      s += to_string(i);
    }
    return s;
  }
};

/// Structural checks always; the generation (rank) check only when `strict`.
/// Non-generating sets pass non-strict validation with `connected = false`.
inline ValidationResult validate(const ConnectionSet& c, bool strict) {
  ValidationResult r;
  auto fail = [&](ValidationIssue i) {
    r.valid = false;
    r.issues.push_back(i);
  };
  if (c.n < 1 || c.n > ExtraspecialGroup::kMaxN) {
    fail(ValidationIssue::WrongLength);
    r.connected = false;
    return r;
  }
  const std::size_t m = c.dimension();
  bool lengths_ok = true;
  for (const auto& x : c.classes) {
    if (x.size() != m) lengths_ok = false;
  }
  if (!lengths_ok) {
    fail(ValidationIssue::WrongLength);
    r.connected = false;
    return r;
  }
  if (std::any_of(c.classes.begin(), c.classes.end(), [](const GF2Vector& x) { return x.is_zero(); }))
    fail(ValidationIssue::ZeroClass);
  std::vector<GF2Vector> sorted = c.classes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(ValidationIssue::DuplicateClass);
  if (c.classes.empty() && !c.include_z) fail(ValidationIssue::Empty);
  const std::uint64_t nonzero = (std::uint64_t{1} << m) - 1;
  if (c.include_z && c.classes.size() == nonzero) fail(ValidationIssue::Improper);
  r.connected = rank(c.classes) == m;
  if (strict && !r.connected) fail(ValidationIssue::NotGenerating);
  return r;
}

inline void require_valid(const ConnectionSet& c, bool strict) {
  const auto r = validate(c, strict);
  if (!r.valid) throw ValidationError("invalid connection set: " + r.explain());
}

/// e_y = #{x in C : y.x = 0} for every y, indexed by int(y).
inline std::vector<std::int64_t> e_y_table(const ConnectionSet& c) {
  const std::size_t m = c.dimension();
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::int64_t> table(count, 0);
  for (std::uint64_t y = 0; y < count; ++y) {
    const GF2Vector yv(m, y);
    std::int64_t e = 0;
    for (const auto& x : c.classes)
      if (!dot(yv, x)) ++e;
    table[y] = e;
  }
  return table;
}

struct SpectrumSummary {
  std::vector<std::int64_t> e_table;
  /// eigenvalue -> multiplicity, largest eigenvalue first.
  std::map<std::int64_t, std::int64_t, std::greater<>> multiplicities;
  /// eigenvalue -> the y whose linear character affords it (int(y) ascending).
  std::map<std::int64_t, std::vector<std::uint64_t>, std::greater<>> linear_sources;
  std::int64_t nonlinear_eigenvalue = 0;
  std::int64_t nonlinear_multiplicity = 0;
  std::int64_t degree = 0;

  /// Eigenvalues repeated by multiplicity, ascending.
  std::vector<std::int64_t> expanded() const {
    std::vector<std::int64_t> out;
    for (const auto& [theta, mult] : multiplicities) out.insert(out.end(), static_cast<std::size_t>(mult), theta);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Eigenvalue afforded by the linear character chi_y.
inline std::int64_t linear_eigenvalue(std::int64_t e_y, std::int64_t ell, bool include_z) {
  return 4 * e_y - 2 * ell + (include_z ? 1 : 0);
}

/// Closed-form spectrum: 4 e_y - 2l (+1 if z in S) once per y, and the
/// nonlinear eigenvalue -1 (z in S) or 0 (z not in S) with multiplicity 2^(2n).
inline SpectrumSummary spectrum(const ConnectionSet& c) {
  SpectrumSummary s;
  s.e_table = e_y_table(c);
  const std::int64_t ell = c.ell();
  for (std::uint64_t y = 0; y < s.e_table.size(); ++y) {
    const auto theta = linear_eigenvalue(s.e_table[y], ell, c.include_z);
    s.multiplicities[theta] += 1;
    s.linear_sources[theta].push_back(y);
  }
  s.nonlinear_eigenvalue = c.include_z ? -1 : 0;
  s.nonlinear_multiplicity = static_cast<std::int64_t>(s.e_table.size());
  s.multiplicities[s.nonlinear_eigenvalue] += s.nonlinear_multiplicity;
  s.degree = c.degree();
  return s;
}

/// A[g][h] = 1 iff g h^-1 in S, under the canonical element indexing.
inline Eigen::MatrixXi adjacency_matrix(const ConnectionSet& c, const ExtraspecialGroup& G) {
  if (static_cast<int>(c.n) != G.n()) throw DimensionError("connection set and group differ in n");
  const auto N = static_cast<Eigen::Index>(G.order());
  Eigen::MatrixXi A = Eigen::MatrixXi::Zero(N, N);
  const auto S = c.elements();
  for (Eigen::Index h = 0; h < N; ++h) {
    const auto hg = G.element(static_cast<std::uint64_t>(h));
    for (const auto& s : S) A(static_cast<Eigen::Index>(G.index(G.mul(s, hg))), h) = 1;
  }
  return A;
}

/// Complement within G \ {1}: remaining nonzero vectors, z flag flipped.
inline ConnectionSet complement(const ConnectionSet& c) {
  const std::size_t m = c.dimension();
  std::vector<GF2Vector> rest;
  std::size_t i = 0;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << m); ++v) {
    const GF2Vector x(m, v);
    while (i < c.classes.size() && c.classes[i] < x) ++i;
    if (i < c.classes.size() && c.classes[i] == x) continue;
    rest.push_back(x);
  }
  return {c.n, std::move(rest), !c.include_z};
}

/// Breadth-first distance in Cay(G, S); nullopt if unreachable.
inline std::optional<int> graph_distance(const ConnectionSet& c, const ExtraspecialGroup& G,
                                         const GroupElement& from, const GroupElement& to) {
  const auto S = c.elements();
  std::vector<int> dist(G.order(), -1);
  std::queue<std::uint64_t> q;
  dist[G.index(from)] = 0;
  q.push(G.index(from));
  const auto target = G.index(to);
  while (!q.empty()) {
    const auto cur = q.front();
    q.pop();
    if (cur == target) return dist[cur];
    const auto g = G.element(cur);
    for (const auto& s : S) {
      const auto nb = G.index(G.mul(s, g));
      if (dist[nb] < 0) {
        dist[nb] = dist[cur] + 1;
        q.push(nb);
      }
    }
  }
  return std::nullopt;
}

}  // namespace espwalk

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
 * @file walk.hpp
 * @brief Numeric continuous-time quantum walk oracle.
 *
 * U(t) = sum_theta exp(i t theta) E_theta, built from the character
 * eigenprojections. Eigenvalues are integers, so the only rounding comes from
 * cos/sin of the phase and from the projection entries themselves.
 */
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "espwalk/chartable.hpp"
#include "espwalk/dyadic_time.hpp"

namespace espwalk {

inline constexpr double kVerdictTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-9;

struct TransitionMatrix {
  double time = 0.0;
  Eigen::MatrixXcd entries;

  Eigen::Index size() const noexcept { return entries.rows(); }
};

/// Largest entry of |sum_theta E_theta - I|.
inline double resolution_defect(std::span<const EigenProjection> projections) {
  if (projections.empty()) return std::numeric_limits<double>::infinity();
  const auto N = projections.front().matrix.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(N, N);
  for (const auto& p : projections) sum += p.matrix;
  return (sum - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff();
}

namespace detail {

template <typename PhaseFn>
TransitionMatrix assemble(std::span<const EigenProjection> projections, double t, PhaseFn phase) {
  if (const double d = resolution_defect(projections); !(d <= 1e-8))
    throw InconsistencyError("eigenprojections do not resolve the identity (defect " + std::to_string(d) + ")");
  const auto N = projections.front().matrix.rows();
  TransitionMatrix U{t, Eigen::MatrixXcd::Zero(N, N)};
  for (const auto& p : projections) {
    const double angle = phase(p.eigenvalue);
    U.entries += std::complex<double>(std::cos(angle), std::sin(angle)) * p.matrix.cast<std::complex<double>>();
  }
  return U;
}

}  // namespace detail

inline TransitionMatrix transition(std::span<const EigenProjection> projections, double t) {
  return detail::assemble(projections, t, [t](std::int64_t theta) {
    return std::remainder(t * static_cast<double>(theta), 2.0 * std::numbers::pi);
  });
}

/// Same as the real-time overload, with the phase reduced mod 2pi exactly.
inline TransitionMatrix transition(std::span<const EigenProjection> projections, DyadicTime t) {
  return detail::assemble(projections, t.radians(), [t](std::int64_t theta) { return t.phase_angle(theta); });
}

inline double unitarity_defect(const TransitionMatrix& U) {
  const auto N = U.size();
  return (U.entries * U.entries.adjoint() - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff();
}

enum class VerdictKind { None, Pst, Fr };

struct NumericVerdict {
  VerdictKind kind = VerdictKind::None;
  Eigen::Index source = 0;
  Eigen::Index target = -1;
  std::complex<double> phase{};  // PST: U e_u = phase e_v
  std::complex<double> alpha{};  // FR: U e_u = alpha e_u + beta e_v
  std::complex<double> beta{};
  bool balanced = false;
  double residual = 0.0;
  double time = 0.0;
};

/// PST from u iff exactly one entry of column u other than u has modulus at
/// least 1 - tol. The residual is the norm of the rest of the column.
inline NumericVerdict detect_pst(const TransitionMatrix& U, Eigen::Index u, double tol = kVerdictTol) {
  NumericVerdict r;
  r.source = u;
  r.time = U.time;
  Eigen::Index hits = 0;
  for (Eigen::Index v = 0; v < U.size(); ++v) {
    if (v == u) continue;
    if (std::abs(U.entries(v, u)) >= 1.0 - tol) {
      ++hits;
      r.target = v;
    }
  }
  if (hits != 1) {
    r.target = -1;
    return r;
  }
  r.kind = VerdictKind::Pst;
  r.phase = U.entries(r.target, u);
  double rest = 0.0;
  for (Eigen::Index v = 0; v < U.size(); ++v)
    if (v != r.target) rest += std::norm(U.entries(v, u));
  r.residual = std::sqrt(rest);
  return r;
}

/// FR from u to v iff |alpha|^2 + |beta|^2 >= 1 - tol and |beta| >= tol.
inline NumericVerdict detect_fr(const TransitionMatrix& U, Eigen::Index u, Eigen::Index v, double tol = kVerdictTol) {
  if (u == v) throw ContractError("detect_fr needs distinct vertices");
  NumericVerdict r;
  r.source = u;
  r.target = v;
  r.time = U.time;
  r.alpha = U.entries(u, u);
  r.beta = U.entries(v, u);
  const double mass = std::norm(r.alpha) + std::norm(r.beta);
  double rest = 0.0;
  for (Eigen::Index w = 0; w < U.size(); ++w)
    if (w != u && w != v) rest += std::norm(U.entries(w, u));
  r.residual = std::sqrt(rest);
  if (mass >= 1.0 - tol && std::abs(r.beta) >= tol) {
    r.kind = VerdictKind::Fr;
    r.balanced = std::abs(std::abs(r.alpha) - std::abs(r.beta)) < tol;
  }
  return r;
}

/// Largest modulus of an off-diagonal entry.
inline double max_offdiagonal(const TransitionMatrix& U) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < U.size(); ++j)
    for (Eigen::Index i = 0; i < U.size(); ++i)
      if (i != j) best = std::max(best, std::abs(U.entries(i, j)));
  return best;
}

struct CospectralVerdict {
  bool strongly_cospectral = false;
  std::set<std::int64_t> plus;   // E e_u = E e_v != 0
  std::set<std::int64_t> minus;  // E e_u = -E e_v != 0
  std::optional<std::int64_t> witness;
};

inline CospectralVerdict strongly_cospectral_bf(std::span<const EigenProjection> projections, Eigen::Index u,
                                                Eigen::Index v, double tol = kVerdictTol) {
  if (u == v) throw ContractError("strongly_cospectral_bf needs distinct vertices");
  CospectralVerdict r;
  for (const auto& p : projections) {
    const auto cu = p.matrix.col(u);
    const auto cv = p.matrix.col(v);
    if (cu.norm() <= tol && cv.norm() <= tol) continue;
    if ((cu - cv).norm() <= tol) {
      r.plus.insert(p.eigenvalue);
    } else if ((cu + cv).norm() <= tol) {
      r.minus.insert(p.eigenvalue);
    } else {
      r.witness = p.eigenvalue;
      r.plus.clear();
      r.minus.clear();
      return r;
    }
  }
  r.strongly_cospectral = true;
  return r;
}

inline std::set<std::int64_t> eigenvalue_support_bf(std::span<const EigenProjection> projections, Eigen::Index u,
                                                    double tol = kUnitaryTol) {
  std::set<std::int64_t> out;
  for (const auto& p : projections)
    if (p.matrix.col(u).norm() > tol) out.insert(p.eigenvalue);
  return out;
}

/// Checks U = lambda L(z) entrywise, lambda taken from the PST verdict at the
/// identity. L(z) swaps indices 2k and 2k+1.
inline bool scheme_structure_check(const TransitionMatrix& U, const ExtraspecialGroup& G, double tol = kVerdictTol) {
  if (U.size() != static_cast<Eigen::Index>(G.order())) throw DimensionError("matrix size differs from |G|");
  const auto verdict = detect_pst(U, 0, tol);
  if (verdict.kind != VerdictKind::Pst) throw ContractError("scheme_structure_check requires a PST time");
  const auto z = static_cast<Eigen::Index>(G.index(G.central_involution()));
  if (verdict.target != z) return false;
  for (Eigen::Index col = 0; col < U.size(); ++col)
    for (Eigen::Index row = 0; row < U.size(); ++row) {
      const std::complex<double> want = (row == (col ^ 1)) ? verdict.phase : std::complex<double>{};
      if (std::abs(U.entries(row, col) - want) > tol) return false;
    }
  return true;
}

/// Ascending eigenvalues of a symmetric matrix.
inline std::vector<double> numeric_eigenvalues(const Eigen::MatrixXd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InconsistencyError("eigenvalue solver did not converge");
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace espwalk

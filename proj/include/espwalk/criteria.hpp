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
 * @file criteria.hpp
 * @brief Closed-form decisions for state transfer on Cay(G, S).
 *
 * Notation: l = |C| (number of size-2 classes in S), e_y as in cayley.hpp,
 * and the threshold valuation
 *
 *     t = nu2(l + 1)  if z in S,      t = nu2(l)  otherwise.
 *
 * PST holds iff nu2(l - e_y) >= t for every y, with minimum time pi/2^m where
 * m = nu2(2l + 2) (z in S) or nu2(2l). With alpha = nu2(gcd(l - e_y)), the
 * graph admits neither PST nor FR when alpha < t, PST only when alpha = t,
 * and proper fractional revival when alpha > t.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "espwalk/cayley.hpp"
#include "espwalk/dyadic_time.hpp"
#include "espwalk/extraspecial.hpp"
#include "espwalk/gf2.hpp"

namespace espwalk {

inline bool is_power_of_two(std::int64_t x) noexcept { return x > 0 && (x & (x - 1)) == 0; }

/// Threshold valuation t: nu2(l+1) with z in S, nu2(l) without.
inline Valuation pst_threshold(const ConnectionSet& c) {
  return c.include_z ? nu2(c.ell() + 1) : nu2(c.ell());
}

/// Exponent m of the minimum PST time pi/2^m.
inline int min_time_exponent(const ConnectionSet& c) {
  return nu2(c.include_z ? 2 * c.ell() + 2 : 2 * c.ell()).value();
}

// --- Strong cospectrality -------------------------------------------------------

struct PhiSets {
  std::set<std::int64_t> plus;   // linear-character eigenvalues
  std::set<std::int64_t> minus;  // the nonlinear eigenvalue
  bool disjoint = false;
};

inline PhiSets phi_sets(const ConnectionSet& c) {
  require_valid(c, false);
  PhiSets phi;
  for (const auto e : e_y_table(c)) phi.plus.insert(linear_eigenvalue(e, c.ell(), c.include_z));
  const std::int64_t nonlinear = c.include_z ? -1 : 0;
  phi.minus.insert(nonlinear);
  phi.disjoint = !phi.plus.contains(nonlinear);
  return phi;
}

/// g and gz are strongly cospectral iff the linear and nonlinear eigenvalue
/// sets are disjoint.
inline bool strongly_cospectral_decision(const ConnectionSet& c) { return phi_sets(c).disjoint; }

// --- Perfect state transfer -------------------------------------------------------

struct PstFailure {
  std::uint64_t y = 0;        // int(y) of the first failing functional
  Valuation gap{0};           // nu2(l - e_y)
  Valuation required{0};      // threshold t
};

struct PstReport {
  bool admits = false;
  std::optional<PstFailure> failure;
  int min_time_exponent = 0;  // tau0 = pi / 2^m
  std::int64_t d_or_c = 0;    // gcd({2l+2 or 2l} u {4e_y - 4l})
  bool strongly_cospectral = false;
  bool connected = false;

  DyadicTime min_time() const noexcept { return {1, min_time_exponent}; }
};

inline std::int64_t raw_time_gcd(const ConnectionSet& c, std::span<const std::int64_t> e_table) {
  const std::int64_t ell = c.ell();
  std::int64_t d = c.include_z ? 2 * ell + 2 : 2 * ell;
  for (const auto e : e_table) d = std::gcd(d, 4 * e - 4 * ell);
  return d;
}

inline PstReport pst_decision(const ConnectionSet& c) {
  require_valid(c, false);
  PstReport r;
  const auto table = e_y_table(c);
  const std::int64_t ell = c.ell();
  const Valuation t = pst_threshold(c);
  r.admits = true;
  for (std::uint64_t y = 0; y < table.size(); ++y) {
    const Valuation gap = nu2(ell - table[y]);
    if (gap < t) {
      r.admits = false;
      r.failure = PstFailure{y, gap, t};
      break;
    }
  }
  r.min_time_exponent = min_time_exponent(c);
  r.d_or_c = raw_time_gcd(c, table);
  r.strongly_cospectral = strongly_cospectral_decision(c);
  r.connected = rank(c.classes) == c.dimension();
  if (!is_power_of_two(r.d_or_c))
    throw InconsistencyError("gcd " + std::to_string(r.d_or_c) + " of the PST time formula is not a power of 2");
  if (r.admits && r.d_or_c != (std::int64_t{1} << r.min_time_exponent))
    throw InconsistencyError("gcd time formula disagrees with the valuation formula");
  if (r.admits && !r.strongly_cospectral)
    throw InconsistencyError("PST admitted without strong cospectrality");
  return r;
}

/// M = gcd(l - e_y : y). Zero (valuation infinity) only when every e_y = l,
/// i.e. C is empty. A nonzero M that is not a power of 2 is a bug.
inline std::int64_t gcd_power2_check(const ConnectionSet& c) {
  require_valid(c, false);
  std::int64_t M = 0;
  for (const auto e : e_y_table(c)) M = std::gcd(M, c.ell() - e);
  if (M != 0 && !is_power_of_two(M))
    throw InconsistencyError("gcd(l - e_y) = " + std::to_string(M) + " is not a power of 2");
  return M;
}

// --- Fractional revival -----------------------------------------------------------

enum class FrCase { Neither, PstOnly, ProperFr };

inline std::string to_string(FrCase c) {
  switch (c) {
    case FrCase::Neither: return "neither";
    case FrCase::PstOnly: return "pst_only";
    case FrCase::ProperFr: return "proper_fr";
  }
  return "unknown";
}

struct FrReport {
  Valuation alpha{0};
  Valuation threshold{0};
  std::int64_t g = 0;
  /// hg = 2^(alpha+2); undefined when alpha is infinite.
  std::optional<std::int64_t> h;
  FrCase kind = FrCase::Neither;
  /// 2pi/(hg); absent unless proper FR with finite alpha.
  std::optional<DyadicTime> fr_min_time;
  /// pi/(2g); present for proper FR.
  std::optional<DyadicTime> balanced_time;
};

inline FrReport fr_classify(const ConnectionSet& c) {
  const std::int64_t M = gcd_power2_check(c);
  FrReport r;
  r.alpha = nu2(M);
  r.threshold = pst_threshold(c);
  const int m = min_time_exponent(c);
  if (r.alpha < r.threshold) {
    r.kind = FrCase::Neither;
  } else if (r.alpha == r.threshold) {
    r.kind = FrCase::PstOnly;
  } else {
    r.kind = FrCase::ProperFr;
  }
  // g = min(2^m, 2^(alpha+2)).
  const int g_exp = r.alpha.is_infinite() ? m : std::min(m, r.alpha.value() + 2);
  r.g = std::int64_t{1} << g_exp;
  if (!r.alpha.is_infinite()) r.h = (std::int64_t{1} << (r.alpha.value() + 2)) / r.g;
  if (r.kind == FrCase::ProperFr) {
    if (r.h) r.fr_min_time = DyadicTime{2, g_exp + std::countr_zero(static_cast<std::uint64_t>(*r.h))}.normalized();
    r.balanced_time = DyadicTime{1, g_exp + 1};
  }
  if (r.g != raw_time_gcd(c, e_y_table(c)))
    throw InconsistencyError("g differs from the gcd of the PST time formula");
  return r;
}

// --- Complements ------------------------------------------------------------------

/// True iff |G| tau is an integer multiple of 2pi (relative tolerance 1e-9).
inline bool complement_pst(const ConnectionSet& c, double tau) {
  if (!pst_decision(c).admits) throw ContractError("complement_pst requires a PST-admitting connection set");
  const double order = std::ldexp(1.0, 2 * c.n + 1);
  const double k = order * tau / (2.0 * std::numbers::pi);
  return std::abs(k - std::round(k)) <= 1e-9 * std::max(1.0, std::abs(k));
}

inline bool complement_pst(const ConnectionSet& c, DyadicTime tau) {
  if (!pst_decision(c).admits) throw ContractError("complement_pst requires a PST-admitting connection set");
  // 2^(2n+1) * num / 2^e  in  2Z   <=>   2^(2n) * num divisible by 2^e
  const auto t = tau.normalized();
  const int twos = 2 * c.n + static_cast<int>(nu2(t.numerator).is_infinite() ? 64 : nu2(t.numerator).value());
  return twos >= t.exponent;
}

// --- Spreads ----------------------------------------------------------------------

/// Connection set whose classes are the points of a valid partial spread.
inline ConnectionSet spread_connection(const PartialSpread& spread) {
  if (spread.members.empty()) throw ValidationError("spread has no members");
  const std::size_t k = spread.members.front().dim();
  if (!validate_spread(spread, k)) throw ValidationError("members are not a partial spread");
  if (spread.ambient % 2 != 0) throw ValidationError("spread ambient dimension is odd");
  return {static_cast<int>(spread.ambient / 2), spread_points(spread), false};
}

struct SpreadPrediction {
  std::optional<DyadicTime> pst_time;
  bool balanced_fr = false;

  bool no_claim() const noexcept { return !pst_time && !balanced_fr; }
};

/// Sufficient conditions for a spanning partial k-spread with N members:
/// nu2(N) <= k-1 gives PST at pi/2^nu2(2N); nu2(N) <= k-2 also gives
/// balanced FR. Outside these the result is NO_CLAIM, not a negative.
inline SpreadPrediction spread_predict(std::int64_t N, int k, int n) {
  if (N < 1 || k < 1 || k > 2 * n) throw DomainError("spread_predict: need N >= 1 and 1 <= k <= 2n");
  SpreadPrediction p;
  const int v = nu2(N).value();
  if (v <= k - 1) p.pst_time = DyadicTime{1, v + 1};
  if (v <= k - 2) p.balanced_fr = true;
  return p;
}

// --- Uniform mixing ---------------------------------------------------------------

struct MixingReport {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t order = 0;
  std::uint64_t min_support = 0;
  double bound = 0.0;  // sqrt(order)
  bool admits_possible = false;
};

/// (sum_j |class_size_j * value_j|)^2 for a character row with values
/// normalised by chi(1).
inline double hadamard_bound(std::span<const double> class_sizes, std::span<const double> normalized_values) {
  if (class_sizes.size() != normalized_values.size()) throw DimensionError("hadamard_bound: length mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < class_sizes.size(); ++j) s += std::abs(class_sizes[j] * normalized_values[j]);
  return s * s;
}

/// Class sizes and normalised |values| of a nonlinear character of the
/// extraspecial group of order p^(2n+1): value 1 on the p central classes, 0
/// on the noncentral ones.
inline std::pair<std::vector<double>, std::vector<double>> nonlinear_row(const ClassStructure& s) {
  std::vector<double> sizes, values;
  for (std::uint64_t i = 0; i < s.central_classes; ++i) {
    sizes.push_back(1.0);
    values.push_back(1.0);
  }
  for (std::uint64_t i = 0; i < s.noncentral_classes; ++i) {
    sizes.push_back(static_cast<double>(s.noncentral_class_size));
    values.push_back(0.0);
  }
  return {std::move(sizes), std::move(values)};
}

/// Support-size obstruction to instantaneous uniform mixing.
inline MixingReport mixing_check(std::uint64_t p, int n) {
  const auto s = class_structure_p(p, n);
  MixingReport r;
  r.p = p;
  r.n = n;
  r.order = s.order;
  r.min_support = s.nonlinear_support;
  r.bound = std::sqrt(static_cast<double>(s.order));
  r.admits_possible = static_cast<double>(r.min_support) >= r.bound;
  if (r.admits_possible) throw InconsistencyError("nonlinear character support reaches sqrt(|G|)");
  return r;
}

}  // namespace espwalk

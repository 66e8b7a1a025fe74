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
 * @file confirm.hpp
 * @brief Runs the numeric walk oracle at the times the closed-form criteria
 *        predict and records whether the two agree.
 */
#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "espwalk/cayley.hpp"
#include "espwalk/chartable.hpp"
#include "espwalk/criteria.hpp"
#include "espwalk/walk.hpp"

namespace espwalk {

/// One comparison between a closed-form claim and the oracle.
struct OracleCheck {
  std::string name;  // spectrum, strongly_cospectral_decision, pst_decision, fr_classify, ...
  std::optional<DyadicTime> time;
  bool expected = false;
  bool observed = false;
  double residual = 0.0;
  std::string detail;

  bool agree() const noexcept { return expected == observed; }
};

struct Confirmation {
  std::vector<OracleCheck> checks;

  bool agree() const {
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.agree(); });
  }
  std::vector<const OracleCheck*> disagreements() const {
    std::vector<const OracleCheck*> out;
    for (const auto& c : checks)
      if (!c.agree()) out.push_back(&c);
    return out;
  }
};

struct ConfirmOptions {
  double tol = kVerdictTol;
  /// Off-diagonal modulus a non-PST matrix must stay below, as 1 - margin.
  double negative_margin = 1e-3;
  double spectrum_tol = 1e-8;
  bool check_spectrum = true;
  /// Also require PST at 3 tau0 and its absence at 2 tau0.
  bool check_multiples = false;
  std::vector<DyadicTime> extra_times;
  /// Replaceable so the harness itself can be fault-tested.
  std::function<PstReport(const ConnectionSet&)> pst_decider = [](const ConnectionSet& c) { return pst_decision(c); };
};

namespace detail {

inline OracleCheck pst_check(const std::vector<EigenProjection>& proj, const ExtraspecialGroup& G, DyadicTime t,
                             bool expected, const ConfirmOptions& opt, std::string name) {
  OracleCheck chk{std::move(name), t, expected, false, 0.0, {}};
  const auto U = transition(proj, t);
  const auto v = detect_pst(U, 0, opt.tol);
  const bool to_z = v.kind == VerdictKind::Pst && v.target == 1;
  if (to_z) {
    chk.residual = v.residual;
    chk.observed = scheme_structure_check(U, G, opt.tol);
    chk.detail = chk.observed ? "U = lambda L(z)" : "column PST but not of the form lambda L(z)";
  } else {
    const double off = max_offdiagonal(U);
    chk.residual = 1.0 - off;
    chk.observed = off >= 1.0 - opt.negative_margin;
    chk.detail = "max off-diagonal modulus " + std::to_string(off);
  }
  return chk;
}

}  // namespace detail

inline Confirmation confirm(const ConnectionSet& c, const ExtraspecialGroup& G, const ConfirmOptions& opt = {}) {
  Confirmation out;
  const auto proj = projections_for(c, G);

  if (opt.check_spectrum) {
    const auto closed = spectrum(c).expanded();
    const auto numeric = numeric_eigenvalues(adjacency_matrix(c, G).cast<double>());
    double worst = closed.size() == numeric.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < std::min(closed.size(), numeric.size()); ++i)
      worst = std::max(worst, std::abs(static_cast<double>(closed[i]) - numeric[i]));
    out.checks.push_back({"spectrum", std::nullopt, true, worst <= opt.spectrum_tol, worst,
                          "max eigenvalue deviation " + std::to_string(worst)});
  }

  const bool sc = strongly_cospectral_decision(c);
  const auto scv = strongly_cospectral_bf(proj, 0, 1, opt.tol);
  out.checks.push_back({"strongly_cospectral_decision", std::nullopt, sc, scv.strongly_cospectral, 0.0,
                        scv.witness ? "witness eigenvalue " + std::to_string(*scv.witness) : ""});

  const auto pst = opt.pst_decider(c);
  const auto tau0 = pst.min_time();
  out.checks.push_back(detail::pst_check(proj, G, tau0, pst.admits, opt, "pst_decision"));
  if (opt.check_multiples && pst.admits) {
    out.checks.push_back(detail::pst_check(proj, G, tau0.times(3), true, opt, "pst_odd_multiple"));
    out.checks.push_back(detail::pst_check(proj, G, tau0.times(2), false, opt, "pst_even_multiple"));
  }

  const auto fr = fr_classify(c);
  if (fr.kind == FrCase::ProperFr) {
    if (fr.fr_min_time) {
      const auto U = transition(proj, *fr.fr_min_time);
      const auto v = detect_fr(U, 0, 1, opt.tol);
      const bool proper = v.kind == VerdictKind::Fr && std::abs(v.alpha) >= opt.tol;
      out.checks.push_back({"fr_classify", fr.fr_min_time, true, proper, v.residual,
                            "|alpha|=" + std::to_string(std::abs(v.alpha)) +
                                " |beta|=" + std::to_string(std::abs(v.beta))});
    }
    const auto U = transition(proj, *fr.balanced_time);
    const auto v = detect_fr(U, 0, 1, opt.tol);
    out.checks.push_back({"fr_balanced", fr.balanced_time, true, v.kind == VerdictKind::Fr && v.balanced, v.residual,
                          "|alpha|=" + std::to_string(std::abs(v.alpha)) +
                              " |beta|=" + std::to_string(std::abs(v.beta))});
  } else {
    // No proper revival: at every dyadic time pi/2^j, j <= 6, FR from 1 to z
    // occurs only as PST.
    bool spurious = false;
    std::string where;
    for (int j = 0; j <= 6; ++j) {
      const DyadicTime t{1, j};
      const auto v = detect_fr(transition(proj, t), 0, 1, opt.tol);
      if (v.kind == VerdictKind::Fr && std::abs(v.alpha) >= opt.tol) {
        spurious = true;
        where = t.to_string();
        break;
      }
    }
    out.checks.push_back({"fr_classify", std::nullopt, false, spurious, 0.0,
                          spurious ? "proper FR seen at " + where + " pi" : "no proper FR at pi/2^j, j<=6"});
  }

  for (const auto& t : opt.extra_times) {
    const bool expected = pst.admits && t.is_odd_multiple_of(tau0);
    out.checks.push_back(detail::pst_check(proj, G, t, expected, opt, "extra_time"));
  }
  return out;
}

}  // namespace espwalk

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

// Self-verification suite behind `espwalk verify`.
//
// quick: every n = 1 connection set, both isomorphism types.
// full:  quick + 300 seeded n = 2 sets + spread fixtures + odd-p mixing table.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "espwalk/confirm.hpp"
#include "espwalk/search.hpp"

namespace espwalk {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  std::uint64_t seed = 20240601;
  std::size_t n2_samples = 300;
  std::function<PstReport(const ConnectionSet&)> pst_decider = [](const ConnectionSet& c) { return pst_decision(c); };
};

struct GroupResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyReport {
  std::vector<GroupResult> groups;

  bool passed() const {
    return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.passed(); });
  }
};

namespace detail {

class GroupCollector {
 public:
  GroupResult& operator[](const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, groups_.size()).first;
      groups_.push_back(GroupResult{name, 0, {}});
    }
    return groups_[it->second];
  }

  void record(const std::string& group, bool ok, const std::string& what) {
    auto& g = (*this)[group];
    ++g.cases;
    if (!ok && g.failures.size() < 20) g.failures.push_back(what);
  }

  std::vector<GroupResult> take() { return std::move(groups_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<GroupResult> groups_;
};

inline std::string describe(const ConnectionSet& c) {
  std::string s = "n=" + std::to_string(c.n) + " C={";
  for (std::size_t i = 0; i < c.classes.size(); ++i) s += (i ? "," : "") + c.classes[i].to_string();
  return s + "}" + (c.include_z ? " +z" : "");
}

inline void oracle_groups(GroupCollector& out, const std::vector<ConnectionSet>& sets, const VerifyOptions& vopt,
                          bool multiples) {
  ConfirmOptions opt;
  opt.pst_decider = vopt.pst_decider;
  opt.check_multiples = multiples;
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    for (const auto& c : sets) {
      const ExtraspecialGroup G(c.n, iso);
      const auto conf = confirm(c, G, opt);
      for (const auto& chk : conf.checks) {
        std::string group = chk.name;
        if (group == "fr_balanced") group = "fr_classify";
        if (group == "pst_odd_multiple" || group == "pst_even_multiple") group = "pst_min_time";
        out.record(group, chk.agree(),
                   describe(c) + " [" + to_string(iso) + "] " + chk.name + ": expected " +
                       (chk.expected ? "true" : "false") + ", oracle " + (chk.observed ? "true" : "false") + " (" +
                       chk.detail + ")");
      }
    }
  }
}

inline void gf2_group(GroupCollector& out) {
  for (int n = 1; n <= 3; ++n) {
    const auto T = regular_spread(n);
    const auto pts = spread_points(T);
    const bool ok = T.size() == (std::size_t{1} << n) + 1 && validate_spread(T, static_cast<std::size_t>(n)) &&
                    pts.size() == (std::size_t{1} << (2 * n)) - 1;
    out.record("gf2core", ok, "regular_spread(" + std::to_string(n) + ") is not a spread partitioning F_2^2n");
  }
}

inline void group_structure(GroupCollector& out, int n) {
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    const ExtraspecialGroup G(n, iso);
    const auto els = G.elements();
    bool assoc = true, center = true, classes = true;
    for (const auto& a : els)
      for (const auto& b : els) {
        for (const auto& c : els)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) assoc = false;
      }
    for (const auto& g : els) {
      bool central = true;
      std::set<std::uint64_t> orbit;
      for (const auto& h : els) {
        if (G.mul(g, h) != G.mul(h, g)) central = false;
        orbit.insert(G.index(G.mul(G.mul(h, g), G.inv(h))));
      }
      if (central != G.is_central(g)) center = false;
      std::set<std::uint64_t> expected;
      for (const auto& k : G.class_of(g)) expected.insert(G.index(k));
      if (orbit != expected) classes = false;
    }
    const std::string tag = "n=" + std::to_string(n) + " " + to_string(iso);
    out.record("extraspecial", assoc, tag + ": product not associative");
    out.record("extraspecial", center, tag + ": center differs from {1, z}");
    out.record("extraspecial", classes, tag + ": conjugacy classes differ from cosets of Z");
  }
}

inline void complement_group(GroupCollector& out, const std::vector<ConnectionSet>& sets) {
  for (const auto& c : sets) {
    const auto pst = pst_decision(c);
    if (!pst.admits) continue;
    const auto cc = complement(c);
    const ExtraspecialGroup G(c.n, IsoType::Plus);
    const auto U = transition(projections_for(cc, G), pst.min_time());
    const auto v = detect_pst(U, 0);
    const bool ok = complement_pst(c, pst.min_time()) && v.kind == VerdictKind::Pst && v.target == 1 &&
                    scheme_structure_check(U, G);
    out.record("complement", ok, describe(c) + ": complement lacks PST at " + pst.min_time().to_string() + " pi");
  }
}

inline void support_group(GroupCollector& out, const std::vector<ConnectionSet>& sets) {
  for (const auto& c : sets) {
    const ExtraspecialGroup G(c.n, IsoType::Plus);
    const auto proj = projections_for(c, G);
    std::set<std::int64_t> all;
    for (const auto& p : proj) all.insert(p.eigenvalue);
    bool ok = true;
    for (Eigen::Index u = 0; u < static_cast<Eigen::Index>(G.order()); ++u)
      if (eigenvalue_support_bf(proj, u) != all) ok = false;
    out.record("eigenvalue_support", ok, describe(c) + ": some vertex misses an eigenvalue");
  }
}

inline void spread_group(GroupCollector& out) {
  {
    const auto c = spread_connection(regular_spread(2).take(2));
    const ExtraspecialGroup G(2, IsoType::Plus);
    const auto v = detect_pst(transition(projections_for(c, G), DyadicTime{1, 2}), 0);
    const auto pred = spread_predict(2, 2, 2);
    out.record("spread", v.kind == VerdictKind::Pst && v.target == 1 && pred.pst_time == DyadicTime{1, 2},
               "regular_spread(2) take 2: PST at pi/4 not confirmed");
  }
  {
    const auto c = spread_connection(regular_spread(3).take(2));
    const ExtraspecialGroup G(3, IsoType::Plus);
    const auto v = detect_fr(transition(projections_for(c, G), DyadicTime{1, 3}), 0, 1);
    const bool magnitudes = std::abs(std::abs(v.alpha) - M_SQRT1_2) <= 1e-7 && std::abs(std::abs(v.beta) - M_SQRT1_2) <= 1e-7;
    out.record("spread", v.kind == VerdictKind::Fr && v.balanced && magnitudes && spread_predict(2, 3, 3).balanced_fr,
               "regular_spread(3) take 2: balanced FR at pi/8 not confirmed");
  }
}

inline void mixing_group(GroupCollector& out) {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (int n = 1; n <= 3; ++n) {
      const auto r = mixing_check(p, n);
      const auto [sizes, values] = nonlinear_row(class_structure_p(p, n));
      const bool ok = !r.admits_possible && r.min_support == p &&
                      hadamard_bound(sizes, values) < static_cast<double>(r.order);
      out.record("mixing", ok, "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": obstruction not established");
    }
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
  detail::GroupCollector out;
  detail::gf2_group(out);
  detail::group_structure(out, 1);
  const auto n1 = enumerate_valid(1);
  detail::oracle_groups(out, n1, opt, true);
  detail::complement_group(out, n1);
  detail::support_group(out, n1);
  if (opt.level == VerifyLevel::Full) {
    detail::group_structure(out, 2);
    const auto n2 = random_valid_sets(2, opt.n2_samples, opt.seed);
    detail::oracle_groups(out, n2, opt, false);
    detail::complement_group(out, n2);
    detail::spread_group(out);
    detail::mixing_group(out);
  }
  return {out.take()};
}

}  // namespace espwalk

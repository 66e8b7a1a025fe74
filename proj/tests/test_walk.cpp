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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "espwalk/chartable.hpp"
#include "espwalk/criteria.hpp"
#include "espwalk/walk.hpp"

using namespace espwalk;
using cd = std::complex<double>;

namespace {

const ConnectionSet kOnlyZ(1, {}, true);
const auto kFull = ConnectionSet::from_strings(1, {"10", "01", "11"}, false);
const auto kPair = ConnectionSet::from_strings(1, {"10", "01"}, false);
const auto kPairZ = ConnectionSet::from_strings(1, {"10", "01"}, true);

std::vector<EigenProjection> proj(const ConnectionSet& c, IsoType iso = IsoType::Plus) {
  return projections_for(c, ExtraspecialGroup(c.n, iso));
}

TEST(Transition, IdentityAtZeroAndTwoPi) {
  for (const auto& c : {kFull, kPair, kPairZ}) {
    const auto p = proj(c);
    const auto I = Eigen::MatrixXcd::Identity(8, 8);
    EXPECT_LE((transition(p, 0.0).entries - I).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((transition(p, 2 * M_PI).entries - I).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE((transition(p, DyadicTime{2, 0}).entries - I).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Transition, PerfectMatchingAtQuarterPeriod) {
  const auto U = transition(proj(kOnlyZ), DyadicTime{1, 1});
  for (Eigen::Index r = 0; r < 8; ++r)
    for (Eigen::Index c = 0; c < 8; ++c)
      EXPECT_LE(std::abs(U.entries(r, c) - (r == (c ^ 1) ? cd{0, 1} : cd{})), 1e-12);
}

TEST(Transition, UnitarySymmetricAtRandomTimes) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> t(0.0, 20.0);
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    const auto p = proj(ConnectionSet::from_strings(2, {"1000", "0100", "0010", "0001", "1110"}, true), iso);
    for (int i = 0; i < 50; ++i) {
      const auto U = transition(p, t(rng));
      EXPECT_LE(unitarity_defect(U), 1e-9);
      EXPECT_LE((U.entries - U.entries.transpose()).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Transition, ExactAndFloatingAgree) {
  const auto p = proj(kPairZ);
  for (int e = 0; e <= 6; ++e)
    for (std::int64_t k : {1, 3, 5}) {
      const DyadicTime t{k, e};
      EXPECT_LE((transition(p, t).entries - transition(p, t.radians()).entries).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(Transition, RejectsIncompleteResolution) {
  auto p = proj(kFull);
  p.pop_back();
  EXPECT_THROW(transition(p, 1.0), InconsistencyError);
}

TEST(DetectPst, SpecExamples) {
  const auto a = detect_pst(transition(proj(kOnlyZ), DyadicTime{1, 1}), 0);
  EXPECT_EQ(a.kind, VerdictKind::Pst);
  EXPECT_EQ(a.target, 1);
  EXPECT_LE(std::abs(a.phase - cd{0, 1}), 1e-12);

  const auto b = detect_pst(transition(proj(kFull), DyadicTime{1, 1}), 0);
  EXPECT_EQ(b.kind, VerdictKind::Pst);
  EXPECT_EQ(b.target, 1);
  EXPECT_NEAR(std::abs(b.phase), 1.0, 1e-8);
  EXPECT_LE(b.residual, 1e-8);

  EXPECT_EQ(detect_pst(transition(proj(kFull), DyadicTime{1, 3}), 0).kind, VerdictKind::None);
}

TEST(DetectFr, SpecExamples) {
  const auto v = detect_fr(transition(proj(kFull), DyadicTime{1, 2}), 0, 1);
  EXPECT_EQ(v.kind, VerdictKind::Fr);
  EXPECT_TRUE(v.balanced);
  EXPECT_NEAR(std::abs(v.alpha), M_SQRT1_2, 1e-8);
  EXPECT_NEAR(std::abs(v.beta), M_SQRT1_2, 1e-8);

  EXPECT_EQ(detect_fr(transition(proj(kPair), 0.0), 0, 1).kind, VerdictKind::None);

  const auto pst = detect_fr(transition(proj(kPairZ), DyadicTime{1, 1}), 0, 1);
  EXPECT_EQ(pst.kind, VerdictKind::Fr);
  EXPECT_LE(std::abs(pst.alpha), 1e-8);
  EXPECT_THROW(detect_fr(transition(proj(kPair), 0.0), 2, 2), ContractError);
}

TEST(StronglyCospectral, SpecExamples) {
  const auto yes = strongly_cospectral_bf(proj(kPairZ), 0, 1);
  EXPECT_TRUE(yes.strongly_cospectral);
  EXPECT_EQ(yes.minus, std::set<std::int64_t>{-1});
  EXPECT_EQ(yes.plus, (std::set<std::int64_t>{5, 1, -3}));

  const auto no = strongly_cospectral_bf(proj(kPair), 0, 1);
  EXPECT_FALSE(no.strongly_cospectral);
  EXPECT_EQ(no.witness, std::optional<std::int64_t>(0));

  const auto p = proj(kPairZ);
  for (Eigen::Index v = 2; v < 8; ++v) EXPECT_FALSE(strongly_cospectral_bf(p, 0, v).strongly_cospectral);
}

TEST(StronglyCospectral, OnlyZPairsAcrossAllN1Sets) {
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    const ExtraspecialGroup G(1, iso);
    for (std::uint64_t mask = 1; mask < 8; ++mask)
      for (bool z : {false, true}) {
        std::vector<GF2Vector> cs;
        for (std::uint64_t v = 1; v <= 3; ++v)
          if ((mask >> (v - 1)) & 1U) cs.push_back(GF2Vector(2, v));
        const ConnectionSet c(1, cs, z);
        if (!validate(c, true).valid) continue;
        const auto p = projections_for(c, G);
        const bool decision = strongly_cospectral_decision(c);
        for (Eigen::Index u = 0; u < 8; ++u)
          for (Eigen::Index v = u + 1; v < 8; ++v)
            EXPECT_EQ(strongly_cospectral_bf(p, u, v).strongly_cospectral, decision && v == (u ^ 1));
      }
  }
}

TEST(EigenvalueSupport, FullSpectrumEverywhere) {
  const auto p = proj(kFull);
  for (Eigen::Index u = 0; u < 8; ++u) EXPECT_EQ(eigenvalue_support_bf(p, u), (std::set<std::int64_t>{6, -2, 0}));
  const auto q = proj(ConnectionSet::from_strings(2, {"1000", "0100", "0010", "0001"}, false), IsoType::Minus);
  std::set<std::int64_t> all;
  for (const auto& e : q) all.insert(e.eigenvalue);
  for (Eigen::Index u = 0; u < 32; ++u) EXPECT_EQ(eigenvalue_support_bf(q, u), all);
}

TEST(SchemeStructure, SpecExamples) {
  const ExtraspecialGroup G(1, IsoType::Plus);
  EXPECT_TRUE(scheme_structure_check(transition(proj(kOnlyZ), DyadicTime{1, 1}), G));
  EXPECT_TRUE(scheme_structure_check(transition(proj(kPairZ), DyadicTime{1, 1}), G));
  EXPECT_THROW(scheme_structure_check(transition(proj(kPair), DyadicTime{1, 2}), G), ContractError);
  EXPECT_THROW(scheme_structure_check(transition(proj(kPairZ), DyadicTime{1, 1}), ExtraspecialGroup(2, IsoType::Plus)),
               DimensionError);
}

TEST(IsoTypeInvariance, TransitionModuliAgree) {
  const auto c = ConnectionSet::from_strings(2, {"1000", "0100", "1100", "0010", "0001", "0011"}, false);
  const auto plus = proj(c, IsoType::Plus);
  const auto minus = proj(c, IsoType::Minus);
  for (const DyadicTime t : {DyadicTime{1, 2}, DyadicTime{1, 3}, DyadicTime{3, 4}}) {
    const auto a = detect_pst(transition(plus, t), 0);
    const auto b = detect_pst(transition(minus, t), 0);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.target, b.target);
    const auto fa = detect_fr(transition(plus, t), 0, 1);
    const auto fb = detect_fr(transition(minus, t), 0, 1);
    EXPECT_NEAR(std::abs(fa.alpha), std::abs(fb.alpha), 1e-10);
    EXPECT_NEAR(std::abs(fa.beta), std::abs(fb.beta), 1e-10);
  }
}

}  // namespace

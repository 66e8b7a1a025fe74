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

#include <set>

#include "espwalk/extraspecial.hpp"

using namespace espwalk;

namespace {

GroupElement E(std::string_view v, bool eps) { return {GF2Vector::parse(v), eps}; }

int count_order(const ExtraspecialGroup& G, int k) {
  int c = 0;
  for (const auto& g : G.elements()) c += G.element_order(g) == k;
  return c;
}

TEST(Construct, D8AndQ8) {
  const ExtraspecialGroup plus(1, IsoType::Plus), minus(1, IsoType::Minus);
  EXPECT_EQ(plus.order(), 8U);
  EXPECT_EQ(count_order(plus, 4), 2);
  EXPECT_EQ(count_order(plus, 2), 5);
  EXPECT_EQ(count_order(minus, 4), 6);
  EXPECT_EQ(count_order(minus, 2), 1);
}

TEST(Construct, OrderAndCenterForN2) {
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    const ExtraspecialGroup G(2, iso);
    EXPECT_EQ(G.order(), 32U);
    int central = 0;
    for (const auto& g : G.elements()) {
      bool commutes = true;
      for (const auto& h : G.elements()) commutes = commutes && G.mul(g, h) == G.mul(h, g);
      central += commutes;
      EXPECT_EQ(commutes, G.is_central(g));
    }
    EXPECT_EQ(central, 2);
  }
  EXPECT_THROW(ExtraspecialGroup(0, IsoType::Plus), DomainError);
}

TEST(Construct, PlusAndMinusAreNotIsomorphicForN2) {
  // Involution counts separate the two types.
  EXPECT_NE(count_order(ExtraspecialGroup(2, IsoType::Plus), 2), count_order(ExtraspecialGroup(2, IsoType::Minus), 2));
}

TEST(Mul, SpecExamples) {
  const ExtraspecialGroup G(1, IsoType::Plus);
  const auto z = G.central_involution();
  EXPECT_EQ(G.mul(z, z), G.identity());
  EXPECT_EQ(G.mul(E("10", false), E("01", false)), E("11", true));
  EXPECT_EQ(G.mul(E("01", false), E("10", false)), E("11", false));
  const ExtraspecialGroup Q(1, IsoType::Minus);
  EXPECT_EQ(Q.inv(E("11", false)), E("11", true));
}

TEST(Mul, GroupAxioms) {
  for (int n = 1; n <= 2; ++n)
    for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
      const ExtraspecialGroup G(n, iso);
      const auto els = G.elements();
      for (const auto& a : els) {
        EXPECT_EQ(G.mul(a, G.inv(a)), G.identity());
        EXPECT_EQ(G.mul(G.identity(), a), a);
        for (const auto& b : els) {
          const auto comm = G.mul(G.mul(a, b), G.inv(G.mul(b, a)));
          EXPECT_TRUE(G.is_central(comm));
          for (const auto& c : els) ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
        }
      }
    }
}

TEST(Index, Bijection) {
  const ExtraspecialGroup G(2, IsoType::Minus);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < G.order(); ++i) {
    const auto g = G.element(i);
    EXPECT_EQ(G.index(g), i);
    EXPECT_EQ(i, 2 * g.v.value() + (g.eps ? 1 : 0));
    seen.insert(i);
  }
  EXPECT_EQ(seen.size(), G.order());
  EXPECT_EQ(G.index(G.identity()), 0U);
  EXPECT_EQ(G.index(G.central_involution()), 1U);
}

TEST(Classes, SpecExamples) {
  EXPECT_EQ(ExtraspecialGroup(1, IsoType::Plus).conjugacy_classes().size(), 5U);
  EXPECT_EQ(ExtraspecialGroup(2, IsoType::Plus).conjugacy_classes().size(), 17U);
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    const ExtraspecialGroup G(1, iso);
    const auto a = G.class_of(E("11", true));
    const auto b = G.class_of(E("11", false));
    EXPECT_EQ(std::set<std::uint64_t>({G.index(a[0]), G.index(a[1])}),
              std::set<std::uint64_t>({G.index(b[0]), G.index(b[1])}));
    const auto conj = G.mul(G.mul(E("10", false), E("11", false)), G.inv(E("10", false)));
    EXPECT_EQ(conj, E("11", true));
  }
}

TEST(Classes, MatchBruteForceConjugation) {
  for (const auto iso : {IsoType::Plus, IsoType::Minus}) {
    const ExtraspecialGroup G(2, iso);
    for (const auto& g : G.elements()) {
      std::set<std::uint64_t> orbit;
      for (const auto& h : G.elements()) orbit.insert(G.index(G.mul(G.mul(h, g), G.inv(h))));
      std::set<std::uint64_t> cls;
      for (const auto& k : G.class_of(g)) cls.insert(G.index(k));
      EXPECT_EQ(orbit, cls);
    }
  }
}

TEST(ClassStructure, SpecExamples) {
  const auto s21 = class_structure_p(2, 1);
  EXPECT_EQ(s21.nonlinear_support, 2U);
  EXPECT_EQ(s21.order, 8U);
  const auto s31 = class_structure_p(3, 1);
  EXPECT_EQ(s31.nonlinear_characters, 2U);
  EXPECT_EQ(s31.nonlinear_degree, 3U);
  EXPECT_EQ(s31.nonlinear_support, 3U);
  EXPECT_EQ(s31.order, 27U);
  const auto s52 = class_structure_p(5, 2);
  EXPECT_EQ(s52.nonlinear_support, 5U);
  EXPECT_EQ(s52.order, 3125U);
  EXPECT_THROW(class_structure_p(4, 1), DomainError);
}

TEST(ClassStructure, CountsAreConsistent) {
  for (std::uint64_t p : {2, 3, 5, 7, 11})
    for (int n = 1; n <= 3; ++n) {
      const auto s = class_structure_p(p, n);
      EXPECT_EQ(s.class_count, s.central_classes + s.noncentral_classes);
      EXPECT_EQ(s.class_count, s.linear_characters + s.nonlinear_characters);
      EXPECT_EQ(s.central_classes + s.noncentral_classes * s.noncentral_class_size, s.order);
      EXPECT_EQ(s.linear_characters + s.nonlinear_characters * s.nonlinear_degree * s.nonlinear_degree, s.order);
    }
  const ExtraspecialGroup G(2, IsoType::Plus);
  EXPECT_EQ(class_structure_p(2, 2).class_count, G.conjugacy_classes().size());
}

TEST(IsoType, Parse) {
  EXPECT_EQ(parse_iso_type("plus"), IsoType::Plus);
  EXPECT_EQ(parse_iso_type("minus"), IsoType::Minus);
  EXPECT_THROW(parse_iso_type("other"), ParseError);
}

}  // namespace

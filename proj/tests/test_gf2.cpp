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

#include <random>
#include <sstream>

#include "espwalk/dyadic_time.hpp"
#include "espwalk/gf2.hpp"

using namespace espwalk;

namespace {

GF2Vector V(std::string_view s) { return GF2Vector::parse(s); }

TEST(GF2Vector, ParseAndFormat) {
  const auto v = V("1100");
  EXPECT_EQ(v.size(), 4U);
  EXPECT_EQ(v.value(), 0b1100U);
  EXPECT_EQ(v.to_string(), "1100");
  EXPECT_TRUE(v.test(0));
  EXPECT_FALSE(v.test(3));
  EXPECT_EQ(v.weight(), 2);
  EXPECT_THROW(V(""), ParseError);
  EXPECT_THROW(V("10a1"), ParseError);
  EXPECT_THROW(GF2Vector(2, 4), DimensionError);
}

TEST(GF2Vector, OrderingIsLengthThenValue) {
  EXPECT_LT(V("11"), V("000"));
  EXPECT_LT(V("01"), V("10"));
  EXPECT_EQ(V("0110"), GF2Vector(4, 6));
}

TEST(GF2Vector, XorRequiresSameLength) {
  EXPECT_EQ(V("1100") ^ V("1010"), V("0110"));
  EXPECT_THROW((void)(V("11") ^ V("110")), DimensionError);
}

TEST(Dot, SpecExamples) {
  EXPECT_FALSE(dot(V("00"), V("11")));
  EXPECT_TRUE(dot(V("10"), V("10")));
  EXPECT_TRUE(dot(V("1100"), V("0101")));
  EXPECT_THROW((void)dot(V("10"), V("100")), DimensionError);
}

TEST(Rank, SpecExamples) {
  const std::vector<GF2Vector> a = {V("10"), V("01")};
  const std::vector<GF2Vector> b = {V("11"), V("11")};
  const std::vector<GF2Vector> c = {V("1000"), V("0100"), V("1100"), V("0010"), V("0001"), V("0011")};
  EXPECT_EQ(rank(a), 2U);
  EXPECT_EQ(rank(b), 1U);
  EXPECT_EQ(rank(c), 4U);
  EXPECT_TRUE(spans_full(c, 4));
  EXPECT_FALSE(spans_full(b, 2));
}

TEST(Rank, InvariantUnderElementaryOperations) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    std::vector<GF2Vector> vs;
    const std::size_t count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) vs.push_back(GF2Vector(m, rng() & ((1U << m) - 1)));
    const auto r = rank(vs);
    EXPECT_LE(r, std::min(m, count));
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(rank(shuffled), r);
    if (vs.size() >= 2) {
      auto added = vs;
      added[0] ^= added[1];
      EXPECT_EQ(rank(added), r);
    }
    auto extended = vs;
    extended.push_back(vs[0] ^ vs.back());
    EXPECT_EQ(rank(extended), r);
  }
}

TEST(Nu2, SpecExamples) {
  EXPECT_EQ(nu2(6), Valuation(1));
  EXPECT_TRUE(nu2(0).is_infinite());
  EXPECT_EQ(nu2(12), Valuation(2));
  EXPECT_EQ(nu2(-8), Valuation(3));
  EXPECT_EQ(nu2(0).to_string(), "inf");
  EXPECT_GT(nu2(0), nu2(1 << 20));
}

TEST(Nu2, Multiplicative) {
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t a = 1 + rng() % 100000, b = 1 + rng() % 100000;
    EXPECT_EQ(nu2(a * b).value(), nu2(a).value() + nu2(b).value());
    EXPECT_GE(nu2(a + b).value(), std::min(nu2(a).value(), nu2(b).value()));
  }
}

TEST(GF2n, SpecExamples) {
  EXPECT_EQ(gf2n_mul(0b01, 0b10, 2), 0b10U);
  EXPECT_EQ(gf2n_mul(0b10, 0b10, 2), 0b11U);
  EXPECT_EQ(gf2n_mul(0b10, 0b11, 2), 0b01U);
  EXPECT_THROW((void)gf2n_mul(1, 1, 5), ConfigurationError);
  EXPECT_THROW((void)gf2n_mul(4, 1, 2), DomainError);
}

TEST(GF2n, FieldAxioms) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t q = 1U << n;
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(gf2n_mul(a, 1, n), a);
      EXPECT_EQ(gf2n_mul(a, 0, n), 0U);
      bool has_inverse = a == 0;
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(gf2n_mul(a, b, n), gf2n_mul(b, a, n));
        if (gf2n_mul(a, b, n) == 1) has_inverse = true;
        for (std::uint32_t c = 0; c < q; ++c) {
          EXPECT_EQ(gf2n_mul(gf2n_mul(a, b, n), c, n), gf2n_mul(a, gf2n_mul(b, c, n), n));
          EXPECT_EQ(gf2n_mul(a, b ^ c, n), gf2n_mul(a, b, n) ^ gf2n_mul(a, c, n));
        }
      }
      EXPECT_TRUE(has_inverse) << "n=" << n << " a=" << a;
    }
  }
}

TEST(Subspace, PointsAndMembership) {
  const GF2Subspace h({V("10"), V("01")});
  EXPECT_EQ(h.points(), (std::vector<GF2Vector>{V("01"), V("10"), V("11")}));
  EXPECT_TRUE(h.contains(V("11")));
  EXPECT_THROW(GF2Subspace({V("11"), V("11")}), ValidationError);
  EXPECT_THROW(GF2Subspace(std::vector<GF2Vector>{}), ValidationError);
}

TEST(RegularSpread, SpecExamples) {
  const auto t1 = regular_spread(1);
  ASSERT_EQ(t1.size(), 3U);
  EXPECT_EQ(t1.members[0].points(), std::vector<GF2Vector>{V("10")});
  EXPECT_EQ(t1.members[1].points(), std::vector<GF2Vector>{V("01")});
  EXPECT_EQ(t1.members[2].points(), std::vector<GF2Vector>{V("11")});

  const auto t2 = regular_spread(2);
  EXPECT_EQ(t2.size(), 5U);
  EXPECT_TRUE(validate_spread(t2, 2));
  EXPECT_EQ(spread_points(t2).size(), 15U);

  const auto t3 = regular_spread(3);
  EXPECT_EQ(t3.size(), 9U);
  EXPECT_TRUE(validate_spread(t3, 3));
  EXPECT_EQ(spread_points(t3).size(), 63U);

  EXPECT_THROW(regular_spread(5), ConfigurationError);
  EXPECT_THROW(regular_spread(0), DomainError);
}

TEST(RegularSpread, EveryPairIsPartialSpreadAndSpans) {
  for (int n = 2; n <= 4; ++n) {
    const auto t = regular_spread(n);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        const PartialSpread pair{t.ambient, {t.members[i], t.members[j]}};
        EXPECT_TRUE(validate_spread(pair, static_cast<std::size_t>(n)));
        EXPECT_TRUE(spans_full(spread_points(pair), t.ambient));
      }
  }
}

TEST(ValidateSpread, SpecExamples) {
  const PartialSpread complementary{4, {GF2Subspace({V("1000"), V("0100")}), GF2Subspace({V("0010"), V("0001")})}};
  EXPECT_TRUE(validate_spread(complementary, 2));
  const PartialSpread overlapping{2, {GF2Subspace({V("10")}), GF2Subspace({V("10")})}};
  EXPECT_FALSE(validate_spread(overlapping, 1));
  const PartialSpread shared{4, {GF2Subspace({V("1000"), V("0100")}), GF2Subspace({V("1000"), V("0010")})}};
  EXPECT_FALSE(validate_spread(shared, 2));
  EXPECT_FALSE(validate_spread(complementary, 1));
}

TEST(SpreadPoints, SpecExamples) {
  const PartialSpread one{2, {GF2Subspace({V("10"), V("01")})}};
  EXPECT_EQ(spread_points(one), (std::vector<GF2Vector>{V("01"), V("10"), V("11")}));
  const auto two = regular_spread(2).take(2);
  EXPECT_EQ(spread_points(two),
            (std::vector<GF2Vector>{V("0001"), V("0010"), V("0011"), V("0100"), V("1000"), V("1100")}));
}

TEST(SpreadFile, RoundTripAndErrors) {
  const auto t = regular_spread(2);
  std::istringstream in("# regular spread\n\n" + format_spread(t));
  const auto back = parse_spread(in, "mem");
  ASSERT_EQ(back.size(), t.size());
  EXPECT_EQ(spread_points(back), spread_points(t));

  std::istringstream bad("1000,0100\n10x0,0001\n");
  try {
    (void)parse_spread(bad, "f.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "f.txt:2");
  }
  std::istringstream dependent("1000,1000\n");
  EXPECT_THROW((void)parse_spread(dependent, "f"), ParseError);
}

TEST(DyadicTime, ArithmeticAndParsing) {
  const DyadicTime t{1, 2};
  EXPECT_EQ(t.times(2), (DyadicTime{1, 1}));
  EXPECT_EQ((DyadicTime{4, 3}), (DyadicTime{1, 1}));
  EXPECT_TRUE(t.times(3).is_odd_multiple_of(t));
  EXPECT_FALSE(t.times(2).is_odd_multiple_of(t));
  EXPECT_EQ(DyadicTime::parse("3/2^4"), (DyadicTime{3, 4}));
  EXPECT_EQ(DyadicTime::parse("5"), (DyadicTime{5, 0}));
  EXPECT_THROW(DyadicTime::parse("3/4"), ParseError);
  EXPECT_THROW(DyadicTime::parse("x"), ParseError);
  EXPECT_NEAR(t.radians(), M_PI / 4, 1e-15);
  EXPECT_NEAR(t.phase_angle(9), M_PI / 4, 1e-15);
  EXPECT_NEAR(t.phase_angle(-1), 7 * M_PI / 4, 1e-15);
  EXPECT_EQ(t.to_string(), "1/2^2");
}

}  // namespace

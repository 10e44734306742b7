#include <gtest/gtest.h>

#include <random>

#include "maxgenus/scroll_geometry.hpp"

using namespace maxgenus;
using namespace maxgenus::scroll;

namespace {

// Literal expansion over the eight monomials H^i R^(3-i).
Integer oracle_triple(const ResolvedClass& a, const ResolvedClass& b, const ResolvedClass& c) {
  const Integer table[4] = {0, 0, 1, 3};  // indexed by number of H factors
  const Integer* ca[2] = {&a.h, &a.r};
  const Integer* cb[2] = {&b.h, &b.r};
  const Integer* cc[2] = {&c.h, &c.r};
  Integer total = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const int hs = (i == 0) + (j == 0) + (k == 0);
        total += *ca[i] * *cb[j] * *cc[k] * table[hs];
      }
  return total;
}

// Sum over every multi-index alpha with |alpha| = a of h^0(O_P1(alpha.e + b)).
Integer oracle_h0(ScrollType type, long a, long b) {
  const auto e = splitting_degrees(type);
  Integer total = 0;
  for (long i = 0; i <= a; ++i)
    for (long j = 0; i + j <= a; ++j) {
      const long k = a - i - j;
      const long deg = i * e[0] + j * e[1] + k * e[2] + b;
      if (deg >= 0) total += deg + 1;
    }
  return total;
}

ResolvedClass rc(long h, long r) { return {h, r}; }
DivisorClass dc(long h, long r) { return {h, r}; }

const ScrollType kAll[] = {ScrollType::S111, ScrollType::S012, ScrollType::S003};

}  // namespace

TEST(ScrollType, SplittingDegreesSumToThree) {
  for (auto t : kAll) {
    const auto e = splitting_degrees(t);
    EXPECT_EQ(e[0] + e[1] + e[2], 3) << name(t);
  }
  EXPECT_TRUE(has_singular_line(ScrollType::S003));
  EXPECT_FALSE(has_singular_line(ScrollType::S012));
  EXPECT_TRUE(has_vertex_point(ScrollType::S012));
  EXPECT_FALSE(has_vertex_point(ScrollType::S111));
}

TEST(ScrollType, ParsesSpellings) {
  EXPECT_EQ(parse_scroll("s111"), ScrollType::S111);
  EXPECT_EQ(parse_scroll("S012"), ScrollType::S012);
  EXPECT_EQ(parse_scroll("S(0,0,3)"), ScrollType::S003);
  EXPECT_THROW(parse_scroll("s001"), ParseError);
}

TEST(TripleProduct, IntersectionTable) {
  const auto H = ResolvedClass::hyperplane();
  const auto R = ResolvedClass::ruling();
  EXPECT_EQ(triple_product(H, H, H), 3);
  EXPECT_EQ(triple_product(R, H, H), 1);
  EXPECT_EQ(triple_product(R, R, H), 0);
  EXPECT_EQ(triple_product(R, R, R), 0);
}

TEST(TripleProduct, QuotedValuesOnSmoothScroll) {
  const auto H = DivisorClass::hyperplane();
  EXPECT_EQ(triple_product(ScrollType::S111, dc(1, 1), dc(1, 1), H), 5);
  EXPECT_EQ(triple_product(ScrollType::S111, dc(1, -1), dc(1, -1), H), 1);
  EXPECT_EQ(triple_product(ScrollType::S111, dc(4, -1), dc(1, -2), H), 3);
  EXPECT_EQ(triple_product(ScrollType::S012, dc(1, 1), dc(1, 1), H), 5);
  EXPECT_THROW(triple_product(ScrollType::S003, H, H, H), ParameterError);
}

TEST(TripleProduct, SymmetricAndTrilinear) {
  std::mt19937 gen(20240611);
  std::uniform_int_distribution<long> coef(-50, 50);
  auto random_class = [&] { return rc(coef(gen), coef(gen)); };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_class(), b = random_class(), c = random_class(), x = random_class();
    const Integer abc = triple_product(a, b, c);
    EXPECT_EQ(abc, oracle_triple(a, b, c));
    EXPECT_EQ(abc, triple_product(a, c, b));
    EXPECT_EQ(abc, triple_product(b, a, c));
    EXPECT_EQ(abc, triple_product(b, c, a));
    EXPECT_EQ(abc, triple_product(c, a, b));
    EXPECT_EQ(abc, triple_product(c, b, a));
    EXPECT_EQ(triple_product(a + x, b, c), abc + triple_product(x, b, c));
    EXPECT_EQ(triple_product(a, b + x, c), abc + triple_product(a, x, c));
    EXPECT_EQ(triple_product(a, b, c + x), abc + triple_product(a, b, x));
  }
}

TEST(TripleProduct, ClassIdentitiesForSymbolicW) {
  const auto H = DivisorClass::hyperplane();
  const auto S111 = ScrollType::S111;
  for (long w = 2; w <= 10; ++w) {
    // S ~ (w+1)H-R, p ~ H-2R
    EXPECT_EQ(triple_product(S111, dc(w + 1, -1), dc(1, -2), H), w) << w;
    // S ~ (w+1)H-2R, p ~ H-2R
    EXPECT_EQ(triple_product(S111, dc(w + 1, -2), dc(1, -2), H), w - 1) << w;
    // pi ~ R, S ~ (w+1)H
    EXPECT_EQ(triple_product(S111, dc(0, 1), dc(w + 1, 0), H), w + 1) << w;
    // (H+R).q.H with q ~ H-R
    EXPECT_EQ(triple_product(S111, dc(1, 1), dc(1, -1), H), 3) << w;
  }
}

TEST(H0, QuotedValues) {
  for (auto t : kAll) {
    EXPECT_EQ(h0_weil(t, dc(1, 0)), 6) << name(t);
    EXPECT_EQ(h0_weil(t, dc(0, 1)), 2) << name(t);
    EXPECT_EQ(h0_weil(t, dc(1, -1)), 3) << name(t);
    EXPECT_EQ(h0_weil(t, dc(0, 2)), 3) << name(t);
  }
  EXPECT_EQ(h0_weil(ScrollType::S111, dc(1, -2)), 0);
  EXPECT_EQ(h0_weil(ScrollType::S012, dc(1, -2)), 1);
}

TEST(H0, PushforwardMatchesClosedFormExhaustively) {
  for (auto t : kAll) {
    for (long a = 0; a <= 20; ++a) {
      for (long b = -1; b <= 20; ++b) {
        const Integer expected = oracle_h0(t, a, b);
        ASSERT_EQ(h0_pushforward(t, dc(a, b)), expected) << name(t) << " " << a << "H+" << b << "R";
        ASSERT_EQ(h0_closed_form(dc(a, b)), expected) << name(t) << " " << a << "H+" << b << "R";
      }
    }
  }
}

TEST(H0, PushforwardBeyondClosedFormRange) {
  for (auto t : kAll) {
    for (long a = 0; a <= 8; ++a)
      for (long b = -12; b <= -2; ++b) EXPECT_EQ(h0_pushforward(t, dc(a, b)), oracle_h0(t, a, b));
    EXPECT_EQ(h0_weil(t, dc(-1, 5)), 0);
  }
  EXPECT_THROW(h0_closed_form(dc(2, -2)), ParameterError);
}

TEST(S003, CanonicalForms) {
  EXPECT_EQ(canonicalize_s003(Integer(4)), rc(1, 1));
  EXPECT_EQ(canonicalize_s003(Integer(3)), rc(1, 0));
  EXPECT_EQ(canonicalize_s003(Integer(5)), rc(1, 2));
  EXPECT_EQ(canonicalize_s003(dc(1, 1)), rc(1, 1));
}

TEST(S003, CanonicalRoundTrip) {
  for (long t = 0; t <= 300; ++t) {
    const ResolvedClass c = canonicalize_s003(Integer(t));
    EXPECT_EQ(3 * c.h + c.r, t);
    EXPECT_TRUE(c.r >= 0 && c.r < 3);
    const TotalTransform tt = total_transform(c);
    const Rational expected_eps = t % 3 == 0 ? Rational(0) : (t % 3 == 1 ? Rational(2, 3) : Rational(1, 3));
    EXPECT_EQ(tt.eps, expected_eps) << t;
    EXPECT_EQ(tt.resolved, c + tt.ceil_q * ResolvedClass::exceptional());
    Rational third(c.r, 3);
    third.canonicalize();
    EXPECT_EQ(tt.eps, Rational(tt.ceil_q) - third);
  }
}

TEST(S003, TotalTransforms) {
  auto a = total_transform(rc(1, 1));
  EXPECT_EQ(a.resolved, rc(2, -2));
  EXPECT_EQ(a.eps, Rational(2, 3));
  auto b = total_transform(rc(0, 1));
  EXPECT_EQ(b.resolved, rc(1, -2));
  EXPECT_EQ(b.eps, Rational(2, 3));
  auto c = total_transform(rc(0, 3));
  EXPECT_EQ(c.resolved, rc(1, 0));
  EXPECT_EQ(c.eps, 0);
  EXPECT_THROW(total_transform(rc(1, -1)), ParameterError);
}

TEST(S003, QuotedIntersectionDegrees) {
  auto gen = [](long t) { return canonicalize_s003(Integer(t)); };
  EXPECT_EQ(intersection_degree_s003(gen(4), gen(4)), 6);
  EXPECT_EQ(intersection_degree_s003(gen(5), gen(5)), 8);
  EXPECT_EQ(intersection_degree_s003(gen(7), rc(0, 1)), 3);
  EXPECT_EQ(intersection_degree_s003(gen(4), rc(0, 1)), 2);
}

TEST(S003, IntersectionDegreeAgainstDefinition) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> hs(0, 12), rs(0, 14);
  const auto H = ResolvedClass::hyperplane();
  for (int trial = 0; trial < 3000; ++trial) {
    const ResolvedClass p1 = rc(hs(gen), rs(gen)), p2 = rc(hs(gen), rs(gen));
    const auto t1 = total_transform(p1), t2 = total_transform(p2);
    Rational base(oracle_triple(t1.resolved, t2.resolved, H));
    const Rational e = t1.eps + t2.eps;
    if (e >= 1) base += 3 * (e - 1) + 1;
    base.canonicalize();
    if (base < 0) {
      EXPECT_THROW(intersection_degree_s003(p1, p2), ParameterError);
      continue;
    }
    ASSERT_EQ(base.get_den(), 1);
    const Integer deg = intersection_degree_s003(p1, p2);
    EXPECT_EQ(deg, base.get_num());
    EXPECT_EQ(deg, intersection_degree_s003(p2, p1));
    const Integer extra = deg - oracle_triple(t1.resolved, t2.resolved, H);
    EXPECT_TRUE(extra == 0 || extra == 1 || extra == 2) << extra;
  }
}

TEST(S003, LineMultiplicities) {
  // (m, b, w, a) = (10, 1, 2, 1): 3ab
  EXPECT_EQ(multiplicity_along_l(rc(10, 3), rc(2, 3)), 3);
  // (m, b, w, a) = (10, 1, 3, 2): 3b(w-a)+b
  EXPECT_EQ(multiplicity_along_l(rc(10, 3), rc(2, 4)), 4);
  EXPECT_EQ(multiplicity_along_l(rc(10, 3), rc(0, 5)), 5);
  for (long m = 2; m <= 12; ++m) {
    for (long w = 2; w <= 6; ++w) {
      for (long a = 0; a <= w; ++a) {
        for (long b = 0; b <= 2; ++b) {
          const ResolvedClass F = rc(m + 1 - b, 3 * b);
          EXPECT_EQ(multiplicity_along_l(F, rc(w + 1 - a, 3 * a)), 3 * a * b);
          if (a >= 1) EXPECT_EQ(multiplicity_along_l(F, rc(a, 3 * w - 3 * a + 1)), 3 * b * (w - a) + b);
        }
      }
      EXPECT_EQ(multiplicity_along_l(rc(m + 1, 0), rc(w, 2)), 0);
    }
  }
}

TEST(S003, MultiplicityNonNegative) {
  std::mt19937 gen(99);
  std::uniform_int_distribution<long> hs(0, 10), rs(0, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    const ResolvedClass p1 = rc(hs(gen), rs(gen)), p2 = rc(hs(gen), rs(gen));
    try {
      EXPECT_GE(multiplicity_along_l(p1, p2), 0);
    } catch (const ParameterError&) {
    }
  }
}

TEST(Irreducibility, Criteria) {
  EXPECT_TRUE(is_irreducible_class(ScrollType::S111, rc(1, -1)));
  EXPECT_FALSE(is_irreducible_class(ScrollType::S111, rc(0, 2)));
  EXPECT_TRUE(is_irreducible_class(ScrollType::S111, rc(0, 1)));
  EXPECT_FALSE(is_irreducible_class(ScrollType::S003, rc(0, 3)));
  EXPECT_TRUE(is_irreducible_class(ScrollType::S003, rc(2, 1)));
  EXPECT_FALSE(is_irreducible_class(ScrollType::S003, rc(2, -1)));
  EXPECT_TRUE(is_irreducible_class(ScrollType::S012, rc(3, -3)));
  EXPECT_FALSE(is_irreducible_class(ScrollType::S012, rc(3, -4)));
  EXPECT_THROW(is_irreducible_class(ScrollType::S111, rc(1, -2)), ParameterError);
  EXPECT_THROW(is_irreducible_class(ScrollType::S111, rc(-1, 4)), ParameterError);
}

TEST(CanonicalClass, AdjunctionOnTwistedCubic) {
  for (auto t : kAll) {
    EXPECT_EQ(canonical_class(t), rc(-3, 1));
    // X ∩ H ∩ H' is a twisted cubic: 2g - 2 = (K + 2H).H.H = -2
    const auto H = ResolvedClass::hyperplane();
    EXPECT_EQ(triple_product(canonical_class(t) + 2 * H, H, H), -2);
  }
}

TEST(CompleteIntersection, Genus) {
  EXPECT_EQ(ci_curve_genus(1, 1), 0);
  EXPECT_EQ(ci_curve_genus(11, 3), 562);
  EXPECT_EQ(ci_curve_genus(11, 4), 815);
  for (long f = 1; f <= 30; ++f)
    for (long g = 1; g <= 30; ++g) {
      EXPECT_EQ(ci_curve_genus(f, g), ci_curve_genus(g, f));
      EXPECT_EQ(ci_curve_genus(f, g), 1 + Integer(f * g * (3 * f + 3 * g - 8)) / 2);
    }
}

TEST(ClassStrings, ParseAndFormat) {
  EXPECT_EQ(parse_divisor("4R"), dc(0, 4));
  EXPECT_EQ(parse_divisor("H-2R"), dc(1, -2));
  EXPECT_EQ(parse_divisor("-H"), dc(-1, 0));
  EXPECT_EQ(parse_divisor("3H+R"), dc(3, 1));
  EXPECT_EQ(parse_divisor("0"), dc(0, 0));
  EXPECT_EQ(parse_resolved("2H~+3R~"), rc(2, 3));
  EXPECT_THROW(parse_divisor("2H~"), ParseError);
  EXPECT_THROW(parse_resolved("2H"), ParseError);
  EXPECT_THROW(parse_divisor("H+"), ParseError);
  EXPECT_THROW(parse_divisor("x"), ParseError);
  EXPECT_EQ(format(dc(1, -2)), "H-2R");
  EXPECT_EQ(format(dc(0, 5)), "5R");
  EXPECT_EQ(format(rc(2, -2)), "2H~-2R~");
  std::mt19937 gen(3);
  std::uniform_int_distribution<long> coef(-40, 40);
  for (int i = 0; i < 500; ++i) {
    const DivisorClass c = dc(coef(gen), coef(gen));
    EXPECT_EQ(parse_divisor(format(c)), c);
    const ResolvedClass r = rc(coef(gen), coef(gen));
    EXPECT_EQ(parse_resolved(format(r)), r);
  }
  const DivisorClass big{Integer("123456789012345678901234567890"), Integer(-7)};
  EXPECT_EQ(parse_divisor(format(big)), big);
}

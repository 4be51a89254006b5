#include <gtest/gtest.h>

#include <random>
#include <set>

#include "isoendo/curve.hpp"
#include "isoendo/errors.hpp"

using namespace isoendo;

TEST(Curve, SpecialModels) {
  Field F = Field::get(31, 2);
  Curve E0 = curve_from_j(F.zero());
  EXPECT_TRUE(E0.A().is_zero());
  EXPECT_TRUE(E0.B().is_one());
  Curve E1728 = curve_from_j(F.element(1728));
  EXPECT_TRUE(E1728.A().is_one());
  EXPECT_TRUE(E1728.B().is_zero());
  EXPECT_EQ(E0.j_invariant(), F.zero());
  EXPECT_EQ(E1728.j_invariant(), F.element(1728));
}

TEST(Curve, JInvariantRoundTrip) {
  Field F = Field::get(31, 2);
  EXPECT_EQ(curve_from_j(F.element(2)).j_invariant(), F.element(2));
  EXPECT_EQ(curve_from_j(F.element(23)).j_invariant(), F.element(23));
  for (Integer i = 0; i < F.order(); ++i) {
    FieldElement j = F.from_index(i);
    ASSERT_EQ(curve_from_j(j).j_invariant(), j) << j.encode();
  }
}

TEST(Curve, GroupLaw) {
  Field F = Field::get(31, 2);
  Curve E = curve_from_j(F.element(2));
  std::mt19937_64 rng(1);
  for (int it = 0; it < 10; ++it) {
    CurvePoint P = E.random_point(F, rng), Q = E.random_point(F, rng), R = E.random_point(F, rng);
    EXPECT_TRUE(E.add(P, E.negate(P)).is_infinity());
    EXPECT_EQ(E.scalar_mul(1, P), P);
    EXPECT_EQ(E.add(E.add(P, Q), R), E.add(P, E.add(Q, R)));
    EXPECT_TRUE(E.is_on_curve(E.add(P, Q)));
    auto n = point_order(E, P, 2000);
    ASSERT_TRUE(n.has_value());
    EXPECT_TRUE(E.scalar_mul(*n, P).is_infinity());
    EXPECT_EQ(mod(count_points(E), *n), 0);
  }
}

TEST(Curve, CountPointsSmall) {
  // y^2 = x^3 + x over F_5: x = 0 gives one point, x = 2, 3 give two each
  Field F = Field::get(5, 1);
  EXPECT_EQ(count_points(Curve(F.one(), F.zero())), 4);
  EXPECT_THROW(count_points(Curve(F.one(), F.zero()), 4), Error);
}

TEST(Curve, Supersingularity) {
  Field F31 = Field::get(31, 2);
  Curve E = curve_from_j(F31.element(1728));
  Integer t = frobenius_trace(E);
  EXPECT_TRUE(t == 0 || t == 31 || t == -31 || t == 62 || t == -62);
  EXPECT_TRUE(is_supersingular(E));
  Field F101 = Field::get(101, 2);
  EXPECT_TRUE(is_supersingular(curve_from_j(F101.zero())));
  // j = 1 is ordinary for p = 31 (supersingular set is {2, 4, 23})
  EXPECT_FALSE(is_supersingular(curve_from_j(F31.element(1))));
}

TEST(Curve, SupersingularCountMatchesFormula) {
  for (int p : {23, 31, 37}) {
    Field F = Field::get(p, 2);
    int count = 0;
    for (Integer i = 0; i < F.order(); ++i)
      if (is_supersingular(curve_from_j(F.from_index(i)))) ++count;
    int eps = p % 12 == 1 ? 0 : p % 12 == 11 ? 2 : 1;
    EXPECT_EQ(count, p / 12 + eps) << p;
  }
}

TEST(Curve, NormalizedModelHasFrobeniusMinusP) {
  Field F = Field::get(31, 2);
  for (long j : {2, 4, 23}) {
    Curve E = normalized_model(F.element(j));
    EXPECT_EQ(E.j_invariant(), F.element(j));
    EXPECT_EQ(count_points(E), Integer(32 * 32));
  }
}

TEST(DivisionPolynomial, Degrees) {
  Field F = Field::get(101, 2);
  Curve E = curve_from_j(F.element(3));
  EXPECT_EQ(division_polynomial(E, 1), Polynomial(F, {F.one()}));
  EXPECT_EQ(division_polynomial(E, 3).degree(), 4);
  EXPECT_EQ(division_polynomial(E, 5).degree(), 12);
  EXPECT_EQ(division_polynomial(E, 7).degree(), 24);
  EXPECT_EQ(division_polynomial(E, 4).degree(), 6);
  EXPECT_THROW(division_polynomial(E, 101), Error);
  // f_3 divides f_9, f_5 divides f_15
  DivisionPolynomials table(E);
  EXPECT_TRUE((table(9) % table(3)).is_zero());
  EXPECT_TRUE((table(15) % table(5)).is_zero());
}

TEST(DivisionPolynomial, RootsAreTorsionXCoordinates) {
  // brute force over x in F_{31^2}, with y allowed in F_{31^4}
  Field F = Field::get(31, 2), L = Field::get(31, 4);
  Curve E = curve_from_j(F.element(5));
  Curve EL = E.base_change(L);
  for (int m : {3, 5}) {
    Polynomial f = division_polynomial(E, m);
    for (Integer i = 0; i < F.order(); ++i) {
      FieldElement x = F.from_index(i);
      FieldElement v = EL.rhs(L.embed(x));
      CurvePoint P(L.embed(x), v.sqrt());
      bool torsion = EL.scalar_mul(m, P).is_infinity();
      ASSERT_EQ(f(x).is_zero(), torsion) << "m=" << m << " x=" << x.encode();
    }
  }
}

TEST(TorsionBasis, IndependentPointsOfOrderEll) {
  Field F = Field::get(31, 2);
  for (int ell : {2, 3, 5}) {
    Curve E = curve_from_j(F.element(2));
    TorsionBasis tb = torsion_basis(E, ell);
    Curve EL = E.base_change(tb.field);
    EXPECT_TRUE(EL.scalar_mul(ell, tb.P1).is_infinity());
    EXPECT_TRUE(EL.scalar_mul(ell, tb.P2).is_infinity());
    EXPECT_FALSE(tb.P1.is_infinity());
    // the ell+1 subgroups <P2>, <P1 + i P2> are pairwise distinct
    std::vector<std::set<std::string>> groups;
    auto group_of = [&](const CurvePoint& G) {
      std::set<std::string> s;
      CurvePoint R = G;
      for (int i = 1; i < ell; ++i, R = EL.add(R, G)) s.insert(R.to_string());
      return s;
    };
    groups.push_back(group_of(tb.P2));
    CurvePoint Q = tb.P1;
    for (int i = 0; i < ell; ++i, Q = EL.add(Q, tb.P2)) groups.push_back(group_of(Q));
    for (size_t a = 0; a < groups.size(); ++a)
      for (size_t b = a + 1; b < groups.size(); ++b) EXPECT_NE(groups[a], groups[b]);
  }
}

TEST(TorsionBasis, TwoTorsionOfJTwo) {
  Field F = Field::get(31, 2);
  Curve E = normalized_model(F.element(2));
  auto xs = roots(E.rhs_poly());
  ASSERT_EQ(xs.size(), 3u);
  TorsionBasis tb = torsion_basis(E, 2);
  EXPECT_EQ(tb.field, F);
  std::set<std::string> expected, got;
  for (auto& x : xs) expected.insert(x.encode());
  got.insert(tb.P1.x().encode());
  got.insert(tb.P2.x().encode());
  got.insert(E.add(tb.P1, tb.P2).x().encode());
  EXPECT_EQ(got, expected);
}

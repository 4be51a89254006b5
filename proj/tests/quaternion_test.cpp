#include <gtest/gtest.h>

#include <random>

#include "isoendo/errors.hpp"
#include "isoendo/quaternion.hpp"

using namespace isoendo;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

QuatElement random_element(const QuatAlgebra& B, std::mt19937_64& rng) {
  return QuatElement(B, random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng));
}

QuatOrder order_of(const QuatAlgebra& B, std::vector<std::string> basis) {
  std::vector<QuatElement> e;
  for (const auto& s : basis) e.push_back(QuatElement::parse(B, s));
  return QuatOrder::from_basis(B, e);
}

QuatOrder standard_order(const QuatAlgebra& B) {
  return QuatOrder::from_basis(B, {QuatElement(B, 1), QuatElement(B, 0, 1), QuatElement(B, 0, 0, 1),
                                   QuatElement(B, 0, 0, 0, 1)});
}

const QuatAlgebra B31{-1, -31};

QuatOrder end23() { return order_of(B31, {"1", "-i", "-1/2i+1/2ij", "1/2-1/2j"}); }
QuatOrder end2() { return order_of(B31, {"1", "1/4i+1/4ij", "2i", "1/2-1/2j"}); }
QuatOrder end4() { return order_of(B31, {"1", "1/2+1/6i+1/6j-1/6ij", "5/6i+1/3j+1/6ij", "-13/6i+1/3j+1/6ij"}); }

}  // namespace

TEST(Quaternion, UnitsAndRelations) {
  const QuatAlgebra B{-2, -101};
  const QuatElement one(B, 1), i(B, 0, 1), j(B, 0, 0, 1), k(B, 0, 0, 0, 1);
  EXPECT_EQ(one.trd(), 2);
  EXPECT_EQ(one.nrd(), 1);
  EXPECT_EQ(i.nrd(), 2);
  EXPECT_EQ(i * i, QuatElement(B, -2));
  EXPECT_EQ(j * j, QuatElement(B, -101));
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(k * k, QuatElement(B, -202));
  EXPECT_EQ(i.conj(), -i);
}

TEST(Quaternion, RandomIdentities) {
  std::mt19937_64 rng(11);
  for (const QuatAlgebra& B : {QuatAlgebra{-1, -31}, QuatAlgebra{-2, -101}, QuatAlgebra{-17, -3}, QuatAlgebra{3, -5}}) {
    for (int n = 0; n < 200; ++n) {
      const QuatElement x = random_element(B, rng), y = random_element(B, rng), z = random_element(B, rng);
      EXPECT_EQ((x * y).nrd(), x.nrd() * y.nrd());
      EXPECT_EQ(trace_pairing(x, y), x.trd() * y.trd() - (x * y).trd());
      EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ((x * y).trd(), (y * x).trd());
      EXPECT_EQ(x * x.conj(), QuatElement(B, x.nrd()));
      EXPECT_EQ(x * x - x.trd() * x + QuatElement(B, x.nrd()), QuatElement(B, 0));
    }
  }
}

TEST(Quaternion, ParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const QuatElement x = random_element(B31, rng);
    EXPECT_EQ(QuatElement::parse(B31, x.to_string()), x);
  }
  EXPECT_EQ(QuatElement::parse(B31, "1/2 - 1/2j"), QuatElement(B31, Rational(1, 2), 0, Rational(-1, 2)));
  EXPECT_EQ(QuatElement::parse(B31, "-i + 3*ij"), QuatElement(B31, 0, -1, 0, 3));
  EXPECT_EQ(QuatElement(B31, 0).to_string(), "0");
  EXPECT_THROW(QuatElement::parse(B31, "1/2 + k"), Error);
  EXPECT_THROW(QuatElement::parse(B31, ""), Error);
  EXPECT_THROW(QuatElement::parse(B31, "1/0"), Error);
}

TEST(Hilbert, KnownValuesAndReciprocity) {
  EXPECT_EQ(hilbert_symbol(-1, -1, 2), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 3), 1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 0), -1);
  EXPECT_EQ(hilbert_symbol(2, 5, 5), -1);
  EXPECT_EQ(hilbert_symbol(2, 7, 7), 1);
  EXPECT_EQ(hilbert_symbol(-1, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(5, 5, 5), 1);  // (5,5) = (5,-1)
  // product over all places is 1, and the symbol is symmetric and bimultiplicative
  for (long a = -30; a <= 30; ++a)
    for (long b = -30; b <= 30; ++b) {
      if (a == 0 || b == 0) continue;
      int prod = hilbert_symbol(a, b, 0);
      for (long q = 2; q <= 31; q = next_prime(Integer(q)).get_si()) {
        prod *= hilbert_symbol(a, b, q);
        EXPECT_EQ(hilbert_symbol(a, b, q), hilbert_symbol(b, a, q));
        EXPECT_EQ(hilbert_symbol(a, -a, q), 1);
        EXPECT_EQ(hilbert_symbol(a, b * b, q), 1);
      }
      EXPECT_EQ(prod, 1) << a << " " << b;
    }
}

TEST(BpInfty, PresentationsAndRamification) {
  EXPECT_EQ(b_p_infty(31), (QuatAlgebra{-1, -31}));
  EXPECT_EQ(b_p_infty(103), (QuatAlgebra{-1, -103}));
  EXPECT_EQ(b_p_infty(101), (QuatAlgebra{-2, -101}));
  EXPECT_EQ(b_p_infty(2), (QuatAlgebra{-1, -1}));
  EXPECT_EQ(b_p_infty(17), (QuatAlgebra{-17, -3}));
  EXPECT_EQ(b_p_infty(73), (QuatAlgebra{-73, -7}));
  EXPECT_THROW(b_p_infty(91), Error);
  for (long p = 2; p < 300; p = next_prime(Integer(p)).get_si()) {
    const QuatAlgebra B = b_p_infty(p);
    EXPECT_TRUE(B.is_definite());
    EXPECT_EQ(ramified_primes(B), std::vector<Integer>{p}) << p;
  }
  // the lemma's literal (-1, p) is split at infinity
  EXPECT_EQ(hilbert_symbol(-1, 31, 0), 1);
}

TEST(BpInfty, ContainsAnOrderOfDiscriminantP) {
  // independent of the Hilbert symbol: a maximal order of B_{p,inf} has reduced discriminant p
  for (long p : {2L, 3L, 5L, 13L, 17L, 31L, 41L, 73L, 101L, 103L}) {
    const QuatAlgebra B = b_p_infty(p);
    const auto found = maximal_superorders(standard_order(B), p, 1);
    ASSERT_EQ(found.size(), 1u) << p;
    EXPECT_EQ(found[0].reduced_discriminant(), p);
    EXPECT_TRUE(found[0].check().ok());
  }
}

TEST(Gram, FromTracesClosedForms) {
  const GramMatrix g = gram_from_traces(0, 2, 2, 8, 5);
  const std::vector<std::vector<long>> want = {{2, 0, 2, 5}, {0, 4, -5, 4}, {2, -5, 16, 0}, {5, 4, 0, 32}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(g[r][c], want[r][c]);
  EXPECT_EQ(determinant(gram_from_traces(2, 1, 2, 1, 2)), 0);
  EXPECT_EQ(rank(gram_from_traces(2, 1, 2, 1, 2)), 1);
  EXPECT_THROW(gram_from_traces(3, 2, 0, 2, 0), Error);
  try {
    gram_from_traces(0, 2, 5, 4, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRealizable);
  }
}

TEST(Gram, RealizationsReproduceTheGram) {
  for (const auto& d : std::vector<std::array<long, 5>>{{0, 2, 2, 8, 5}, {1, 2, 0, 8, 5}, {2, 2, -1, 8, 1}, {4, 16, 5, 32, 3}}) {
    const Realization r = realize_from_traces(d[0], d[1], d[2], d[3], d[4]);
    EXPECT_EQ(r.alpha.trd(), d[0]);
    EXPECT_EQ(r.alpha.nrd(), d[1]);
    EXPECT_EQ(r.beta.trd(), d[2]);
    EXPECT_EQ(r.beta.nrd(), d[3]);
    EXPECT_EQ((r.alpha * r.beta).trd(), d[4]);
    const QuatElement one(r.algebra, 1);
    EXPECT_EQ(gram_matrix({one, r.alpha, r.beta, r.alpha * r.beta}), gram_from_traces(d[0], d[1], d[2], d[3], d[4]));
  }
  EXPECT_THROW(realize_from_traces(2, 1, 0, 2, 0), Error);  // alpha = 1
  EXPECT_THROW(realize_from_traces(0, 2, 0, 2, -4), Error);  // beta = alpha
  EXPECT_THROW(realize_from_traces(0, 2, 0, 8, 9), Error);  // indefinite
}

TEST(Gram, FindPairMatchesTheAbstractRealization) {
  // p = 31: alpha with (t, n) = (0, 2) and beta with (2, 8) generating a maximal order
  const Integer tab = 5;
  ASSERT_EQ(reduced_discriminant(gram_from_traces(0, 2, 2, 8, tab)), 31);
  const auto [alpha, beta] = find_pair(B31, 0, 2, 2, 8, tab, 60);
  const QuatElement one(B31, 1);
  const GramMatrix g = gram_matrix({one, alpha, beta, alpha * beta});
  EXPECT_EQ(g, gram_from_traces(0, 2, 2, 8, tab));
  EXPECT_TRUE(is_isometric(g, end2().gram()) || is_isometric(g, end4().gram()) || is_isometric(g, end23().gram()));
}

TEST(Discriminant, WorkedExampleBasesAndScaling) {
  EXPECT_EQ(end23().reduced_discriminant(), 31);
  EXPECT_EQ(end2().reduced_discriminant(), 31);
  EXPECT_EQ(end4().reduced_discriminant(), 31);
  EXPECT_EQ(standard_order(B31).reduced_discriminant(), 4 * 31);
  GramMatrix g = end23().gram();
  const Rational det = determinant(g);
  for (int c = 0; c < 4; ++c) g[1][c] *= 2;
  for (int r = 0; r < 4; ++r) g[r][1] *= 2;
  EXPECT_EQ(determinant(g), 4 * det);
  EXPECT_THROW(reduced_discriminant(gram_from_traces(2, 1, 0, 2, 0)), Error);
}

TEST(Order, ChecksAndClosure) {
  for (const auto& O : {end23(), end2(), end4(), standard_order(B31)}) EXPECT_TRUE(O.check().ok());
  const QuatOrder half_i = order_of(B31, {"1", "1/2i", "j", "ij"});
  EXPECT_FALSE(half_i.check().integral);
  const QuatOrder no_one = order_of(B31, {"2", "i", "j", "ij"});
  EXPECT_FALSE(no_one.check().contains_one);
  const QuatOrder not_closed = order_of(B31, {"1", "i", "2j", "ij"});
  EXPECT_FALSE(not_closed.check().closed);
  EXPECT_EQ(QuatOrder::generated_by(B31, {QuatElement(B31, 0, 1), QuatElement(B31, 0, 0, 1)}), standard_order(B31));
  EXPECT_THROW(QuatOrder::generated_by(B31, {QuatElement(B31, 0, 1)}), Error);
  EXPECT_THROW(QuatOrder::generated_by(B31, {QuatElement(B31, 0, Rational(1, 2))}), Error);
  // equality is lattice equality
  EXPECT_EQ(order_of(B31, {"1", "-i", "-1/2i+1/2ij", "1/2-1/2j"}),
            order_of(B31, {"1/2-1/2j", "1", "i", "-1/2i+1/2ij + 3 - 4i"}));
  EXPECT_TRUE(end23().contains(QuatElement::parse(B31, "1/2 - 1/2j")));
  EXPECT_FALSE(end23().contains(QuatElement::parse(B31, "1/2 - 1/2i")));
}

TEST(FindElement, SmallCases) {
  EXPECT_EQ(find_element(B31, 2, 1, 1), QuatElement(B31, 1));
  const QuatElement x = find_element(B31, 0, 2, 28);
  EXPECT_EQ(x.trd(), 0);
  EXPECT_EQ(x.nrd(), 2);
  const QuatAlgebra B101 = b_p_infty(101);
  const QuatElement y = find_element(B101, -1, 2, 28);
  EXPECT_EQ(y.trd(), -1);
  EXPECT_EQ(y.nrd(), 2);
  // x^2 + 31(y^2 + z^2) = 2 d^2 has no solution for d <= 3
  EXPECT_THROW(find_element(B31, 0, 2, 3), Error);
  EXPECT_THROW(find_element(B31, 5, 2, 28), Error);
}

TEST(Lattice, HermiteNormalForm) {
  const ZMat a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const ZMat h = hnf(a);
  ASSERT_EQ(h.size(), 3u);
  for (size_t r = 0; r < h.size(); ++r)
    for (size_t c = 0; c < r; ++c) EXPECT_EQ(h[r][c], 0);
  EXPECT_EQ(abs(determinant(to_rational(a))), determinant(to_rational(h)));
  // a unimodular change of generators gives the same form
  const ZMat b = {{2 - 6, 4 + 6, 4 + 12}, {-6, 6, 12}, {10 + 2, -4 + 4, -16 + 4}};
  EXPECT_EQ(hnf(b), h);
  EXPECT_EQ(hnf({{0, 0}, {0, 0}}).size(), 0u);
  EXPECT_EQ(hnf({{3, 5}, {6, 10}}), (ZMat{{3, 5}}));
}

TEST(Lattice, LllAndShortVectors) {
  const GramMatrix g = end4().gram();
  const LllResult r = lll_reduce(g);
  EXPECT_EQ(determinant(r.gram), determinant(g));
  EXPECT_EQ(abs(determinant(to_rational(r.transform))), 1);
  EXPECT_EQ(multiply(multiply(to_rational(r.transform), g), transpose(to_rational(r.transform))), r.gram);
  // reduced diagonal entries are short
  EXPECT_EQ(r.gram[0][0], 2);
  // naive enumeration on a small box agrees
  const GramMatrix h = {{2, 1, 0}, {1, 4, 1}, {0, 1, 6}};
  for (long norm = 1; norm <= 14; ++norm) {
    std::size_t naive = 0;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        for (long z = -6; z <= 6; ++z) {
          const long v = 2 * x * x + 2 * x * y + 4 * y * y + 2 * y * z + 6 * z * z;
          if (v == norm) ++naive;
        }
    EXPECT_EQ(vectors_of_norm(h, norm, 1'000'000).size(), naive) << norm;
  }
}

TEST(Lattice, Isometry) {
  std::mt19937_64 rng(7);
  for (const auto& O : {end23(), end2(), end4()}) {
    const GramMatrix g = O.gram();
    EXPECT_TRUE(is_isometric(g, g));
    // random unimodular U as a product of elementary moves
    ZMat u = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::uniform_int_distribution<int> idx(0, 3), coef(-3, 3);
    for (int s = 0; s < 12; ++s) {
      const int a = idx(rng), b = idx(rng);
      if (a == b) continue;
      const int c = coef(rng);
      for (int k = 0; k < 4; ++k) u[a][k] += c * u[b][k];
    }
    const QMat uq = to_rational(u);
    EXPECT_TRUE(is_isometric(g, multiply(multiply(uq, g), transpose(uq))));
  }
  EXPECT_FALSE(is_isometric(end2().gram(), end4().gram()));
  EXPECT_FALSE(is_isometric(end2().gram(), end23().gram()));
  EXPECT_FALSE(is_isometric(end4().gram(), end23().gram()));
  EXPECT_FALSE(is_isometric(end4().gram(), standard_order(B31).gram()));
}

TEST(Superorders, MaximalOrdersAndTheSuborderAtAlpha) {
  EXPECT_EQ(maximal_superorders(end23(), 31), std::vector<QuatOrder>{end23()});
  // every maximal order over Z<1, i, j, ij> in B_{31,inf}
  const QuatOrder std31 = standard_order(B31);
  const auto over_std = maximal_superorders(std31, 31);
  ASSERT_FALSE(over_std.empty());
  for (const auto& M : over_std) {
    EXPECT_EQ(M.reduced_discriminant(), 31);
    EXPECT_TRUE(M.check().ok());
    for (const auto& x : std31.basis()) EXPECT_TRUE(M.contains(x));
  }
  const QuatAlgebra B = b_p_infty(103);
  const QuatOrder sub = order_of(B, {"1", "-1/2+17/6i-1/6j+1/6ij", "-5/2i+1/2ij", "-1/2-22/3i-11/6j-2/3ij"});
  EXPECT_EQ(sub.reduced_discriminant(), 17 * 103);
  const auto sup = maximal_superorders(sub, 103);
  // an Eichler order of prime level lies in exactly two maximal orders
  EXPECT_EQ(sup.size(), 2u);
  const auto types = up_to_isometry(sup);
  ASSERT_EQ(types.size(), 1u);
  const QuatOrder alpha = order_of(B, {"-1", "-1/2+1/6i-1/6j-1/6ij", "3i", "5/6i-1/3j+1/6ij"});
  EXPECT_TRUE(is_isometric(types[0].gram(), alpha.gram()));
}

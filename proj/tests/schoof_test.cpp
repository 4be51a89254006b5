#include <gtest/gtest.h>

#include "isoendo/errors.hpp"
#include "isoendo/graph.hpp"
#include "isoendo/oracle.hpp"
#include "isoendo/schoof.hpp"

using namespace isoendo;

namespace {

const IsogenyGraph& g31() {
  static const IsogenyGraph G = build_graph(31, 2);
  return G;
}

int vertex(const IsogenyGraph& G, long j) { return G.vertex_index(G.field().element(j)); }

// f(P) for a point P of E0[m], read off the stored image of the generic point.
CurvePoint apply(const EndoModM& f, const CurvePoint& P) {
  if (f.is_zero()) return CurvePoint::infinity(P.field());
  return CurvePoint(f.u().rep()(P.x()), P.y() * f.v().rep()(P.x()));
}

// The p = 31 cycle 2 -> 4 -> (loop at 4) -> 2.
Cycle cycle_via_loop_at_4() {
  const IsogenyGraph& G = g31();
  const int v2 = vertex(G, 2), v4 = vertex(G, 4);
  for (const auto& c : enumerate_cycles(G, v2, 3))
    if (c.length() == 3 && G.edge(c.edges[0]).to == v4 && G.edge(c.edges[1]).to == v4) return c;
  throw std::runtime_error("no such cycle");
}

}  // namespace

TEST(EndoModM, IdentityZeroAndComposition) {
  const IsogenyGraph& G = g31();
  IsogenyChain chain = cycle_to_chain(G, cycle_via_loop_at_4());
  EndoModM id = EndoModM::identity(chain.domain(), 5);
  EndoModM psi = reduce_mod_m(chain, 5);
  EXPECT_EQ(id + id.zero(), id);
  EXPECT_EQ(id.zero() + psi, psi);
  EXPECT_EQ(id.compose(psi), psi);
  EXPECT_EQ(psi.compose(id), psi);
  EXPECT_TRUE((psi + (-psi)).is_zero());
  EXPECT_EQ(id.scalar(5), id.zero());
  EXPECT_EQ(id.scalar(6), id);
  EXPECT_EQ(id.scalar(-1), -id);
}

TEST(EndoModM, ArithmeticAgreesPointwise) {
  const IsogenyGraph& G = g31();
  IsogenyChain chain = cycle_to_chain(G, cycle_via_loop_at_4());
  std::mt19937_64 rng(3);
  for (int m : {3, 5, 7}) {
    const Curve& E = chain.domain();
    EndoModM psi = reduce_mod_m(chain, m);
    auto [P, Q] = torsion_pair(E, m, rng);
    const Curve EL = E.base_change(P.field());
    for (const auto& R : {P, Q, EL.add(P, Q)}) {
      const CurvePoint psiR = chain.evaluate(R);
      EXPECT_EQ(apply(psi, R), psiR);
      EXPECT_EQ(apply(psi + psi, R), EL.dbl(psiR));
      EXPECT_EQ(apply(psi.dbl(), R), EL.dbl(psiR));
      EXPECT_EQ(apply(psi.compose(psi), R), chain.evaluate(psiR));
      EXPECT_EQ(apply(psi.scalar(3), R), EL.scalar_mul(3, psiR));
    }
  }
}

TEST(TraceModM, ScalarChainAndTableCycle) {
  const IsogenyGraph& G = g31();
  // phi followed by its exact dual is [2]
  const IsogenyMap& phi = G.edge(G.vertex(vertex(G, 2)).out[0]).map;
  IsogenyChain two({phi, exact_dual(phi)});
  for (int m : {3, 5, 7, 11}) EXPECT_EQ(trace_mod_m(two, m), 4 % m);
  // the 2 -> 4 -> 4 -> 2 cycle has trace 2
  IsogenyChain c = cycle_to_chain(G, cycle_via_loop_at_4());
  EXPECT_EQ(trace_mod_m(c, 3), 2);
  EXPECT_EQ(trace_mod_m(c, 5), 2);
  EXPECT_EQ(trace(c).trace, 2);
  EXPECT_EQ(trace(c).norm, 8);
  EXPECT_THROW(trace_mod_m(c, 31), Error);
  EXPECT_THROW(trace_mod_m(c, 2), Error);
  EXPECT_THROW(trace_mod_m(path_to_chain(G, {G.vertex(vertex(G, 2)).out[0]}), 3), Error);
}

TEST(TraceModM, DualChainHasTheSameTrace) {
  const IsogenyGraph& G = g31();
  for (size_t v = 0; v < G.vertices().size(); ++v)
    for (const auto& c : enumerate_cycles(G, v, 4)) {
      IsogenyChain chain = cycle_to_chain(G, c);
      IsogenyChain dual = dual_chain(chain);
      EXPECT_EQ(trace(dual).trace, trace(chain).trace);
      EXPECT_EQ(trace(chain.then(dual)).trace, 2 * chain.degree());
    }
}

TEST(Trace, PrimeSelection) {
  EXPECT_EQ(trace_primes(31, 2, 8, TraceBound::Sharp), (std::vector<long>{3, 5}));
  EXPECT_EQ(trace_primes(31, 2, 8, TraceBound::Paper), (std::vector<long>{3, 5, 7}));
  // p and ell are skipped
  EXPECT_EQ(trace_primes(5, 3, 8, TraceBound::Sharp), (std::vector<long>{7, 11}));
  for (long n : {2L, 64L, 1L << 16}) {
    Integer N = 1;
    for (long m : trace_primes(103, 2, n, TraceBound::Sharp)) N *= m;
    EXPECT_GT((N - 1) * (N - 1), 16 * n);
  }
}

TEST(Trace, AgreesWithOracleUnderBothBounds) {
  const IsogenyGraph& G = g31();
  for (size_t v = 0; v < G.vertices().size(); ++v)
    for (const auto& c : enumerate_cycles(G, v, 4)) {
      IsogenyChain chain = cycle_to_chain(G, c);
      TraceResult r = trace(chain);
      EXPECT_EQ(r.trace, trace_oracle(chain));
      EXPECT_EQ(trace(chain, TraceBound::Paper).trace, r.trace);
      EXPECT_LE(r.trace * r.trace, 4 * r.norm);
      for (auto [m, t] : r.residues) EXPECT_EQ(mod(r.trace, m), t);
    }
}

TEST(Oracle, TorsionPoints) {
  EXPECT_EQ(torsion_field_degree(31, 3), 2);
  EXPECT_EQ(torsion_field_degree(103, 13), 1);
  EXPECT_THROW(torsion_field_degree(31, 31), Error);
  std::mt19937_64 rng(9);
  const Curve& E = g31().vertex(0).model;
  for (long m : {3, 5, 7}) {
    CurvePoint P = torsion_point(E, m, rng);
    const Curve EL = E.base_change(P.field());
    EXPECT_FALSE(P.is_infinity());
    EXPECT_TRUE(EL.scalar_mul(m, P).is_infinity());
  }
  auto primes = oracle_primes(103, 2, 2);
  EXPECT_EQ(primes.front(), 13);  // -103 = 1 mod 13
  EXPECT_EQ(std::count(primes.begin(), primes.end(), 103), 0);
}

TEST(Oracle, ConjugationByAPath) {
  // tr(dual(phi) rho phi) = deg(phi) tr(rho)
  const IsogenyGraph& G = g31();
  const int v2 = vertex(G, 2), v4 = vertex(G, 4);
  std::vector<int> path = shortest_path(G, v2, v4);
  IsogenyChain phi = path_to_chain(G, path);
  for (const auto& rho : enumerate_cycles(G, v4, 2)) {
    IsogenyChain rc = cycle_to_chain(G, rho);
    IsogenyChain conj = phi.then(rc).then(dual_chain(phi));
    EXPECT_EQ(trace_oracle(conj), phi.degree() * trace_oracle(rc));
  }
  EXPECT_THROW(trace_oracle(phi), Error);
}

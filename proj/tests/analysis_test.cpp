#include <gtest/gtest.h>

#include <functional>

#include "isoendo/analysis.hpp"
#include "isoendo/errors.hpp"

using namespace isoendo;

namespace {

const IsogenyGraph& graph31() {
  static const IsogenyGraph G = build_graph(31, 2);
  return G;
}

const IsogenyGraph& graph103() {
  static const IsogenyGraph G = build_graph(103, 2);
  return G;
}

int vertex_of(const IsogenyGraph& G, long j) { return G.vertex_index(G.field().element(j)); }

// Every edge walk that follows the given vertex sequence.
std::vector<Cycle> walks_along(const IsogenyGraph& G, const std::vector<int>& route) {
  std::vector<Cycle> out;
  std::vector<int> path;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k + 1 == route.size()) {
      out.push_back(make_cycle_from_edges(G, path));
      return;
    }
    for (int e : G.vertex(route[k]).out) {
      if (G.edge(e).to != route[k + 1]) continue;
      path.push_back(e);
      rec(k + 1);
      path.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Cycle> primitive_walks_along(const IsogenyGraph& G, const std::vector<int>& route) {
  std::vector<Cycle> out;
  for (auto& c : walks_along(G, route))
    if (c.no_backtracking) out.push_back(c);
  return out;
}

Integer cycle_trace(const IsogenyGraph& G, const Cycle& c) { return trace(cycle_to_chain(G, c)).trace; }

Cycle repeat(const IsogenyGraph& G, const Cycle& c, int times) {
  std::vector<int> edges;
  for (int k = 0; k < times; ++k) edges.insert(edges.end(), c.edges.begin(), c.edges.end());
  return make_cycle_from_edges(G, edges);
}

Cycle reverse_dual(const IsogenyGraph& G, const Cycle& c) {
  return make_cycle_from_edges(G, reverse_dual_edges(G, c.edges));
}

// Pair reports for all cycles of length <= max_len at every vertex.
template <class F>
void for_each_pair(const IsogenyGraph& G, int max_len, F&& f) {
  for (size_t v = 0; v < G.vertices().size(); ++v) {
    const auto cs = enumerate_cycles(G, static_cast<int>(v), max_len);
    std::vector<IsogenyChain> chains;
    std::vector<Integer> tr;
    for (const auto& c : cs) {
      chains.push_back(cycle_to_chain(G, c));
      tr.push_back(trace(chains.back()).trace);
    }
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t k = i; k < cs.size(); ++k) {
        const Integer tab = trace(chains[k].then(chains[i])).trace;
        f(report_from_traces(G, cs[i], cs[k], tr[i], tr[k], tab));
      }
  }
}

}  // namespace

TEST(Primitive, BacktrackingWalkIsNotPrimitive) {
  const auto& G = graph31();
  const int v2 = vertex_of(G, 2), v4 = vertex_of(G, 4);
  const int e = G.vertex(v2).out.front();
  const Cycle back = make_cycle_from_edges(G, {e, G.edge(e).dual});
  EXPECT_FALSE(is_primitive(back));
  const auto through4 = primitive_walks_along(G, {v2, v4, v4, v2});
  ASSERT_FALSE(through4.empty());
  for (const auto& c : through4) EXPECT_TRUE(is_primitive(c));
  for (const auto& c : enumerate_cycles(G, v2, 4)) EXPECT_TRUE(is_primitive(c));
}

TEST(Commutes, PowersAndDualsCommute) {
  const auto& G = graph31();
  for (const auto& c : enumerate_cycles(G, vertex_of(G, 4), 3)) {
    EXPECT_TRUE(commutes(G, c, repeat(G, c, 2)));
    EXPECT_TRUE(commutes(G, c, reverse_dual(G, c)));
  }
}

TEST(Commutes, TableCyclesAtTwoDoNotCommute) {
  const auto& G = graph31();
  const int v2 = vertex_of(G, 2), v4 = vertex_of(G, 4);
  const auto loops = primitive_walks_along(G, {v2, v2});
  const auto longs = primitive_walks_along(G, {v2, v4, v4, v2});
  ASSERT_EQ(loops.size(), 1u);
  ASSERT_FALSE(longs.empty());
  for (const auto& c : longs) EXPECT_FALSE(commutes(G, loops[0], c));
  EXPECT_THROW(commutes(G, loops[0], enumerate_cycles(G, v4, 1).front()), Error);
}

TEST(IndependenceReport, TableCyclesAtFourGenerateMaximalOrder) {
  const auto& G = graph31();
  const int v2 = vertex_of(G, 2), v4 = vertex_of(G, 4);
  std::vector<Cycle> loops;
  for (const auto& c : primitive_walks_along(G, {v4, v4}))
    if (abs(cycle_trace(G, c)) == 1) loops.push_back(c);
  const auto longs = primitive_walks_along(G, {v4, v2, v2, v4});
  // the two loops at 4 are each other's duals
  ASSERT_EQ(loops.size(), 2u);
  ASSERT_FALSE(longs.empty());
  int maximal = 0;
  for (const auto& loop : loops) {
    for (const auto& c : longs) {
      const auto r = independence_report(G, loop, c);
      EXPECT_EQ(abs(r.ta), 1);
      EXPECT_EQ(r.na, 2);
      EXPECT_EQ(r.nb, 8);
      EXPECT_TRUE(r.independent);
      EXPECT_FALSE(r.commute);
      ASSERT_TRUE(r.disc.has_value());
      EXPECT_GT(determinant(r.gram4), 0);
      if (r.tb == 0) {
        EXPECT_EQ(*r.disc, 31);
        EXPECT_EQ(r.status, OrderStatus::Maximal);
        ++maximal;
      }
    }
  }
  EXPECT_GE(maximal, 1);
}

TEST(IndependenceReport, CycleWithItselfIsDependent) {
  const auto& G = graph31();
  const Cycle c = enumerate_cycles(G, vertex_of(G, 2), 3).back();
  const auto r = independence_report(G, c, c);
  EXPECT_FALSE(r.independent);
  EXPECT_TRUE(r.commute);
  EXPECT_FALSE(r.disc.has_value());
  EXPECT_EQ(r.status, OrderStatus::Undetermined);
  EXPECT_EQ(r.tab, r.ta * r.ta - 2 * r.na);
}

TEST(IndependenceReport, AlphaVertexAtHundredThreeIsNonmaximalWithoutWitness) {
  const auto& G = graph103();
  const int v34 = vertex_of(G, 34), v69 = vertex_of(G, 69);
  int alpha = -1;
  for (int e : G.vertex(v34).out)
    if (!G.vertex(G.edge(e).to).j.is_prime_field()) {
      alpha = G.edge(e).to;
      break;
    }
  ASSERT_GE(alpha, 0);
  const int alpha_bar = *G.find_vertex(G.vertex(alpha).j.frobenius());
  int beta = -1;
  for (int e : G.vertex(alpha).out)
    if (G.edge(e).to != alpha_bar && G.edge(e).to != v34) beta = G.edge(e).to;
  ASSERT_GE(beta, 0);
  const int beta_bar = *G.find_vertex(G.vertex(beta).j.frobenius());

  const auto c2 = primitive_walks_along(G, {alpha, v34, v69, v69, v34, alpha});
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(cycle_trace(G, c2[0]), 0);
  int found = 0;
  for (const auto& c1 : primitive_walks_along(G, {alpha, alpha_bar, beta_bar, beta, alpha})) {
    if (abs(cycle_trace(G, c1)) != 3) continue;
    const auto r = independence_report(G, c1, c2[0]);
    EXPECT_TRUE(r.independent);
    EXPECT_EQ(r.status, OrderStatus::NonMaximal);
    EXPECT_EQ(r.disc, Rational(17 * 103));
    EXPECT_FALSE(r.obstruction.has_value());
    ++found;
  }
  EXPECT_GE(found, 1);
}

TEST(SharedPath, DistinctFirstEdgesGiveNoWitness) {
  const auto& G = graph31();
  const auto cs = enumerate_cycles(G, vertex_of(G, 2), 3);
  for (const auto& a : cs)
    for (const auto& b : cs)
      if (a.edges.front() != b.edges.front()) EXPECT_FALSE(shared_path_obstruction(G, a, b).has_value());
}

TEST(SharedPath, SharedEdgeToOtherVertexGivesWitnessAndLargeDiscriminant) {
  const auto& G = graph31();
  const int v2 = vertex_of(G, 2), v4 = vertex_of(G, 4);
  const auto a = primitive_walks_along(G, {v2, v4, v4, v2});
  const auto b = primitive_walks_along(G, {v2, v4, v4, v4, v2});
  int checked = 0;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.edges.front() != y.edges.front()) continue;
      const auto w = shared_path_obstruction(G, x, y);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->vertices.front(), v2);
      const auto r = independence_report(G, x, y);
      EXPECT_TRUE(r.obstruction.has_value());
      EXPECT_NE(r.status, OrderStatus::Maximal);
      if (r.disc) EXPECT_GT(*r.disc, 31);
      ++checked;
    }
  EXPECT_GE(checked, 1);
}

TEST(Conductor, KnownCases) {
  const auto e4 = conductor_predicates(2, 1, 1);
  EXPECT_EQ(e4.disc, -7);
  EXPECT_TRUE(e4.ell_splits);
  EXPECT_TRUE(e4.conductor_coprime_to_ell);
  const auto e69 = conductor_predicates(2, 1, 0);
  EXPECT_EQ(e69.disc, -8);
  EXPECT_FALSE(e69.ell_splits);
  EXPECT_FALSE(e69.conductor_coprime_to_ell);
  EXPECT_TRUE(conductor_predicates(3, 1, 1).ell_splits);   // -11 = 1 mod 3
  EXPECT_FALSE(conductor_predicates(3, 1, 0).ell_splits);  // -12 = 0 mod 3
}

TEST(Conductor, DualFirstAndLastEdgeMeansEvenTrace) {
  const auto& G = graph31();
  for (size_t v = 0; v < G.vertices().size(); ++v)
    for (const auto& c : enumerate_cycles(G, static_cast<int>(v), 4)) {
      const auto pred = conductor_predicates(2, static_cast<int>(c.length()), cycle_trace(G, c));
      EXPECT_EQ(c.first_dual_last, !pred.conductor_coprime_to_ell);
    }
}

TEST(Sweep, CommutingPairsRepeatACommonCycle) {
  const auto& G = graph31();
  int commuting = 0;
  for_each_pair(G, 3, [&](const CyclePairReport& r) {
    EXPECT_NE(r.commute, r.independent);
    if (r.independent) EXPECT_GT(determinant(r.gram4), 0);
    const bool hypotheses = (!r.c1.first_dual_last || !r.c2.first_dual_last) && !visits_j0_or_j1728(G, r.c1) &&
                            !visits_j0_or_j1728(G, r.c2);
    if (r.commute && hypotheses) {
      EXPECT_TRUE(share_root_cycle(G, r.c1, r.c2));
      ++commuting;
    }
  });
  EXPECT_GT(commuting, 0);
}

TEST(Sweep, WitnessPairsAreNeverBases) {
  const auto& G = graph31();
  int independent_witnesses = 0;
  for_each_pair(G, 3, [&](const CyclePairReport& r) {
    if (!r.obstruction) return;
    EXPECT_NE(r.status, OrderStatus::Maximal);
    if (r.independent) {
      EXPECT_GT(*r.disc, 31);
      ++independent_witnesses;
    }
  });
  EXPECT_GT(independent_witnesses, 0);
}

// Independence is equivalent to non-commutation, which is cheap to test.
TEST(Sweep, CyclesThroughDifferentVerticesAreIndependent) {
  const auto& G = graph103();
  int checked = 0;
  for (size_t v = 0; v < G.vertices().size(); ++v) {
    std::vector<Cycle> cs;
    for (const auto& c : enumerate_cycles(G, static_cast<int>(v), 5))
      if (!has_self_dual_loop(G, c) && !visits_j0_or_j1728(G, c)) cs.push_back(c);
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t k = i + 1; k < cs.size(); ++k) {
        if (vertex_set(G, cs[i]) == vertex_set(G, cs[k])) continue;
        EXPECT_FALSE(commutes(G, cs[i], cs[k]));
        ++checked;
      }
  }
  EXPECT_GT(checked, 100);
}

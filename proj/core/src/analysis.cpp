#include "isoendo/analysis.hpp"

#include <algorithm>
#include <random>

#include "isoendo/errors.hpp"
#include "isoendo/oracle.hpp"

namespace isoendo {

bool is_primitive(const Cycle& c) { return c.no_backtracking; }

bool commutes(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2, std::uint64_t seed) {
  if (c1.base != c2.base) raise(ErrorKind::BadInput, "cycles start at different vertices");
  const IsogenyChain a = cycle_to_chain(G, c1), b = cycle_to_chain(G, c2);
  const Curve& E = a.domain();
  std::mt19937_64 rng(seed);
  auto agree = [&](const CurvePoint& P) { return a.evaluate(b.evaluate(P)) == b.evaluate(a.evaluate(P)); };
  // alpha*beta - beta*alpha has degree at most 4 ell^(e1+e2); it vanishes once
  // its kernel holds E[N] with N^2 > 16 ell^(e1+e2)
  const Integer target = 16 * ipow(Integer(G.ell()), c1.length() + c2.length());
  Integer N = 1;
  for (long m : oracle_primes(G.p(), G.ell(), 6)) {
    if (N * N > target) break;
    const auto [P, Q] = torsion_pair(E, m, rng);
    if (!agree(P) || !agree(Q)) return false;
    N *= m;
  }
  if (N * N <= target) raise(ErrorKind::TooLarge, "not enough auxiliary primes to separate the commutator");
  for (int k = 0; k < 3; ++k)
    if (!agree(E.random_point(E.field(), rng))) return false;
  return true;
}

std::optional<PathWitness> shared_path_obstruction(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2) {
  if (c1.base != c2.base) raise(ErrorKind::BadInput, "cycles start at different vertices");
  size_t k = 0;
  while (k < c1.edges.size() && k < c2.edges.size() && c1.edges[k] == c2.edges[k]) ++k;
  if (k == 0) return std::nullopt;
  PathWitness w;
  w.edges.assign(c1.edges.begin(), c1.edges.begin() + k);
  w.vertices.push_back(c1.base);
  for (int e : w.edges) w.vertices.push_back(G.edge(e).to);
  const auto conj = G.find_vertex(G.vertex(c1.base).j.frobenius());
  const bool ends_at_conjugate = conj && *conj == w.vertices.back();
  if (k >= 2 || !ends_at_conjugate) return w;
  return std::nullopt;
}

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::Maximal:
      return "maximal";
    case OrderStatus::NonMaximal:
      return "nonmaximal";
    case OrderStatus::Undetermined:
      break;
  }
  return "undetermined";
}

CyclePairReport report_from_traces(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2, const Integer& ta,
                                   const Integer& tb, const Integer& tab, std::uint64_t seed) {
  CyclePairReport r;
  r.c1 = c1;
  r.c2 = c2;
  r.ta = ta;
  r.tb = tb;
  r.tab = tab;
  r.na = ipow(Integer(G.ell()), c1.length());
  r.nb = ipow(Integer(G.ell()), c2.length());
  r.gram4 = gram_from_traces(r.ta, r.na, r.tb, r.nb, r.tab);
  GramMatrix g3(3);
  for (int i = 0; i < 3; ++i) g3[i].assign(r.gram4[i].begin(), r.gram4[i].begin() + 3);
  r.independent = determinant(g3) != 0;
  r.commute = commutes(G, c1, c2, seed);
  // 1, alpha, beta are dependent exactly when beta lies in Q(alpha)
  if (r.independent == r.commute)
    raise(ErrorKind::IntegrityFailure, std::string("commutation test says ") + (r.commute ? "commuting" : "not commuting") +
                                           " but the Gram rank says " + (r.independent ? "independent" : "dependent"));
  r.obstruction = shared_path_obstruction(G, c1, c2);
  if (r.independent) {
    r.disc = reduced_discriminant(r.gram4);
    r.status = *r.disc == G.p() ? OrderStatus::Maximal : OrderStatus::NonMaximal;
  }
  return r;
}

CyclePairReport independence_report(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2, TraceBound mode,
                                    std::uint64_t seed) {
  if (c1.base != c2.base) raise(ErrorKind::BadInput, "cycles start at different vertices");
  const IsogenyChain a = cycle_to_chain(G, c1), b = cycle_to_chain(G, c2);
  // alpha*beta applies beta first
  const Integer ta = trace(a, mode).trace, tb = trace(b, mode).trace, tab = trace(b.then(a), mode).trace;
  return report_from_traces(G, c1, c2, ta, tb, tab, seed);
}

ConductorPredicates conductor_predicates(int ell, int length, const Integer& trace) {
  ConductorPredicates c;
  c.disc = trace * trace - 4 * ipow(Integer(ell), length);
  c.conductor_coprime_to_ell = mod(c.disc, ell) != 0;
  if (ell == 2)
    c.ell_splits = mod(c.disc, 8) == 1;
  else
    c.ell_splits = mod(c.disc, ell) != 0 && jacobi(c.disc, ell) == 1;
  return c;
}

namespace {

std::vector<int> root_walk(const std::vector<int>& w) {
  const size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return {w.begin(), w.begin() + d};
  }
  return w;
}

}  // namespace

bool share_root_cycle(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2) {
  const auto r1 = root_walk(c1.edges), r2 = root_walk(c2.edges);
  return r1 == r2 || r1 == reverse_dual_edges(G, r2);
}

std::vector<int> vertex_set(const IsogenyGraph& G, const Cycle& c) {
  std::vector<int> v = {c.base};
  for (int e : c.edges) v.push_back(G.edge(e).to);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool visits_j0_or_j1728(const IsogenyGraph& G, const Cycle& c) {
  const FieldElement j0 = G.field().zero(), j1728 = G.field().element(1728);
  for (int v : vertex_set(G, c))
    if (G.vertex(v).j == j0 || G.vertex(v).j == j1728) return true;
  return false;
}

bool has_self_dual_loop(const IsogenyGraph& G, const Cycle& c) {
  for (int e : c.edges)
    if (G.edge(e).from == G.edge(e).to && G.edge(e).dual == e) return true;
  return false;
}

}  // namespace isoendo

#include "isoendo/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "isoendo/errors.hpp"

namespace isoendo {

std::optional<int> IsogenyGraph::find_vertex(const FieldElement& j) const {
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].j == j) return static_cast<int>(v);
  return std::nullopt;
}

int IsogenyGraph::vertex_index(const FieldElement& j) const {
  auto v = find_vertex(j);
  if (!v) raise(ErrorKind::NotAVertex, "j = " + j.encode() + " is not a vertex of G(" + p_.get_str() + ", " + std::to_string(ell_) + ")");
  return *v;
}

int IsogenyGraph::out_edge(int v, int kernel_id) const {
  const auto& out = vertex(v).out;
  if (kernel_id < 0 || kernel_id >= static_cast<int>(out.size()))
    raise(ErrorKind::BadInput, "kernel id " + std::to_string(kernel_id) + " out of range at vertex " + std::to_string(v));
  return out[kernel_id];
}

Curve find_start_vertex(const Integer& p) {
  if (p <= 3 || !is_prime(p)) raise(ErrorKind::BadInput, "characteristic must be a prime > 3");
  const Field F = Field::get(p, 2);
  if (mod(p, 4) == 3) return curve_from_j(F.element(1728));
  if (mod(p, 3) == 2) return curve_from_j(F.zero());
  for (Integer i = 0; i < F.order(); ++i) {
    // index order visits F_p first
    FieldElement j = F.from_index(i);
    if (j.is_zero() || j == F.element(1728)) continue;
    Curve E = curve_from_j(j);
    if (is_supersingular(E)) return E;
  }
  raise(ErrorKind::IntegrityFailure, "no supersingular j-invariant found");
}

namespace {

struct LocalKernels {
  std::vector<IsogenyMap> maps;  // sorted by kernel polynomial
  TorsionBasis basis;
};

LocalKernels kernels_at(const Curve& E, int ell, std::mt19937_64& rng) {
  LocalKernels out;
  out.basis = torsion_basis(E, ell, rng);
  const Curve EL = E.base_change(out.basis.field);
  std::vector<CurvePoint> gens{out.basis.P1};
  CurvePoint Q = out.basis.P2;
  for (int k = 0; k < ell; ++k) {
    gens.push_back(Q);
    Q = EL.add(Q, out.basis.P1);
  }
  for (const auto& g : gens) out.maps.push_back(velu(E, g, ell));
  std::sort(out.maps.begin(), out.maps.end(), [](const IsogenyMap& a, const IsogenyMap& b) {
    return a.kernel_polynomial() < b.kernel_polynomial();
  });
  for (size_t i = 1; i < out.maps.size(); ++i)
    if (out.maps[i - 1].kernel_polynomial() == out.maps[i].kernel_polynomial())
      raise(ErrorKind::IntegrityFailure, "two torsion subgroups share a kernel polynomial");
  return out;
}

Polynomial image_kernel(const IsogenyMap& phi, const TorsionBasis& tb) {
  for (const auto& P : {tb.P1, tb.P2}) {
    CurvePoint R = phi.evaluate(P);
    if (!R.is_infinity()) return kernel_polynomial(phi.codomain(), R, phi.degree());
  }
  raise(ErrorKind::IntegrityFailure, "isogeny kills the whole ell-torsion");
}

void fill_flags(const IsogenyGraph& G, Cycle& c) {
  c.no_backtracking = true;
  for (size_t i = 0; i + 1 < c.edges.size(); ++i)
    if (G.edge(c.edges[i]).dual == c.edges[i + 1]) c.no_backtracking = false;
  c.first_dual_last = G.edge(c.edges.back()).dual == c.edges.front();
}

std::string j_label(const FieldElement& j) {
  if (j.field().degree() == 1 || j.coeff(1) == 0) return j.coeff(0).get_str();
  return j.encode();
}

}  // namespace

IsogenyGraph build_graph(const Integer& p, int ell) {
  if (ell < 2 || !is_prime(Integer(ell))) raise(ErrorKind::BadInput, "ell must be prime");
  if (p == ell) raise(ErrorKind::BadInput, "ell must differ from p");
  const Curve start = find_start_vertex(p);

  IsogenyGraph G;
  G.p_ = p;
  G.ell_ = ell;
  G.F_ = Field::get(p, 2);
  std::map<FieldElement, int> index;
  auto add_vertex = [&](const FieldElement& j) {
    auto it = index.find(j);
    if (it != index.end()) return it->second;
    const int v = static_cast<int>(G.vertices_.size());
    G.vertices_.push_back(GraphVertex{j, normalized_model(j), {}});
    index.emplace(j, v);
    return v;
  };
  add_vertex(start.j_invariant());

  std::mt19937_64 rng(0x9a7f);
  std::vector<TorsionBasis> bases;
  for (size_t v = 0; v < G.vertices_.size(); ++v) {
    const Curve E = G.vertices_[v].model;
    LocalKernels local = kernels_at(E, ell, rng);
    bases.push_back(local.basis);
    for (size_t k = 0; k < local.maps.size(); ++k) {
      const IsogenyMap& phi = local.maps[k];
      const int w = add_vertex(phi.codomain().j_invariant());
      const Curve& target = G.vertices_[w].model;
      std::vector<FieldElement> us = isomorphism_scales(phi.codomain(), target);
      if (us.empty()) raise(ErrorKind::IntegrityFailure, "codomain is not isomorphic to the vertex model over F_{p^2}");
      GraphEdge e;
      e.from = static_cast<int>(v);
      e.to = w;
      e.kernel_id = static_cast<int>(k);
      e.iso_scale = us.front();
      e.map = phi.then_isomorphism(e.iso_scale, target);
      G.vertices_[v].out.push_back(static_cast<int>(G.edges_.size()));
      G.edges_.push_back(std::move(e));
    }
  }

  // dual pairing by kernel comparison
  for (auto& e : G.edges_) {
    const Polynomial k = image_kernel(e.map, bases[e.from]);
    for (int d : G.vertices_[e.to].out)
      if (G.edges_[d].map.kernel_polynomial() == k) e.dual = d;
    if (e.dual < 0) raise(ErrorKind::IntegrityFailure, "edge has no dual at its target");
  }

  // involutive pairs: the later edge becomes the exact dual of the earlier one
  const FieldElement ell_F = G.F_.element(ell);
  for (size_t i = 0; i < G.edges_.size(); ++i) {
    const int d = G.edges_[i].dual;
    if (d <= static_cast<int>(i) || G.edges_[d].dual != static_cast<int>(i)) continue;
    GraphEdge& de = G.edges_[d];
    de.map = exact_dual(G.edges_[i].map);
    de.iso_scale = G.edges_[i].map.scale() / ell_F;
    de.exact_dual = true;
  }
  return G;
}

Integer expected_vertex_count(const Integer& p) {
  if (p == 2 || p == 3) return 1;
  const long r = mod(p, 12).get_si();
  const long eps = r == 1 ? 0 : r == 11 ? 2 : 1;
  return Integer(p / 12) + eps;
}

bool vertex_count_check(const IsogenyGraph& G) {
  const Integer expected = expected_vertex_count(G.p());
  if (Integer(static_cast<long>(G.vertices().size())) != expected)
    raise(ErrorKind::IntegrityFailure, "G(" + G.p().get_str() + ", " + std::to_string(G.ell()) + ") has " +
                                           std::to_string(G.vertices().size()) + " vertices, expected " + expected.get_str());
  return true;
}

std::vector<int> Cycle::kernel_ids(const IsogenyGraph& G) const {
  std::vector<int> ids;
  for (int e : edges) ids.push_back(G.edge(e).kernel_id);
  return ids;
}

Cycle make_cycle_from_edges(const IsogenyGraph& G, const std::vector<int>& edges) {
  if (edges.empty()) raise(ErrorKind::BadChain, "empty cycle");
  Cycle c;
  c.base = G.edge(edges.front()).from;
  c.edges = edges;
  for (size_t i = 1; i < edges.size(); ++i)
    if (G.edge(edges[i - 1]).to != G.edge(edges[i]).from) raise(ErrorKind::BadChain, "edges do not form a walk");
  if (G.edge(edges.back()).to != c.base) raise(ErrorKind::BadChain, "walk does not return to its base vertex");
  fill_flags(G, c);
  return c;
}

Cycle make_cycle(const IsogenyGraph& G, int base, const std::vector<int>& kernel_ids) {
  if (kernel_ids.empty()) raise(ErrorKind::BadChain, "empty cycle");
  std::vector<int> edges;
  int v = base;
  for (int k : kernel_ids) {
    const int e = G.out_edge(v, k);
    edges.push_back(e);
    v = G.edge(e).to;
  }
  return make_cycle_from_edges(G, edges);
}

std::vector<Cycle> enumerate_cycles(const IsogenyGraph& G, int v, int max_len) {
  std::vector<Cycle> out;
  if (max_len < 1) return out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int at) -> void {
    for (int e : G.vertex(at).out) {
      if (!path.empty() && G.edge(path.back()).dual == e) continue;
      path.push_back(e);
      const int to = G.edge(e).to;
      if (to == v) {
        Cycle c;
        c.base = v;
        c.edges = path;
        fill_flags(G, c);
        out.push_back(std::move(c));
      }
      if (static_cast<int>(path.size()) < max_len) self(self, to);
      path.pop_back();
    }
  };
  dfs(dfs, v);
  return out;
}

IsogenyChain path_to_chain(const IsogenyGraph& G, const std::vector<int>& edges) {
  std::vector<IsogenyMap> maps;
  for (int e : edges) maps.push_back(G.edge(e).map);
  return IsogenyChain(std::move(maps));
}

IsogenyChain cycle_to_chain(const IsogenyGraph& G, const Cycle& c) { return path_to_chain(G, c.edges); }

IsogenyChain dual_chain(const IsogenyChain& chain) {
  std::vector<IsogenyMap> maps;
  for (auto it = chain.maps().rbegin(); it != chain.maps().rend(); ++it) maps.push_back(exact_dual(*it));
  return IsogenyChain(std::move(maps));
}

std::vector<int> reverse_dual_edges(const IsogenyGraph& G, const std::vector<int>& edges) {
  std::vector<int> out;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) out.push_back(G.edge(*it).dual);
  return out;
}

std::vector<int> shortest_path(const IsogenyGraph& G, int u, int v) {
  std::vector<int> via(G.vertices().size(), -1);
  std::vector<bool> seen(G.vertices().size(), false);
  std::deque<int> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    if (a == v) break;
    for (int e : G.vertex(a).out) {
      const int b = G.edge(e).to;
      if (seen[b]) continue;
      seen[b] = true;
      via[b] = e;
      queue.push_back(b);
    }
  }
  if (!seen[v]) raise(ErrorKind::IntegrityFailure, "graph is not connected");
  std::vector<int> path;
  for (int at = v; at != u; at = G.edge(via[at]).from) path.push_back(via[at]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string to_dot(const IsogenyGraph& G) {
  static const char* const palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4"};
  std::ostringstream os;
  os << "digraph G_" << G.p() << "_" << G.ell() << " {\n";
  for (size_t v = 0; v < G.vertices().size(); ++v)
    os << "  v" << v << " [label=\"" << j_label(G.vertex(v).j) << "\"];\n";
  // edges of a dual pair share a colour
  std::vector<int> pair(G.edges().size(), -1);
  int next = 0;
  for (size_t i = 0; i < G.edges().size(); ++i) {
    if (pair[i] >= 0) continue;
    pair[i] = next;
    const int d = G.edge(i).dual;
    if (d >= 0 && pair[d] < 0 && G.edge(d).dual == static_cast<int>(i)) pair[d] = next;
    ++next;
  }
  for (size_t i = 0; i < G.edges().size(); ++i) {
    const auto& e = G.edge(i);
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.kernel_id << "\", color=\""
       << palette[pair[i] % 8] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

GraphSnapshot GraphSnapshot::of(const IsogenyGraph& G) {
  GraphSnapshot s;
  s.p = G.p();
  s.ell = G.ell();
  for (const auto& v : G.vertices()) s.vertices.push_back({v.j, v.model.A(), v.model.B()});
  for (const auto& e : G.edges())
    s.edges.push_back({e.from, e.to, e.kernel_id, e.dual, e.map.kernel_polynomial(), e.iso_scale, e.exact_dual});
  return s;
}

IsogenyGraph GraphSnapshot::restore() const {
  auto fail = [](const std::string& what) { raise(ErrorKind::IntegrityFailure, "graph snapshot: " + what); };
  IsogenyGraph G;
  G.p_ = p;
  G.ell_ = ell;
  G.F_ = Field::get(p, 2);
  for (const auto& v : vertices) {
    Curve model(v.A, v.B);
    if (model.j_invariant() != v.j) fail("model does not have the recorded j-invariant");
    G.vertices_.push_back(GraphVertex{v.j, model, {}});
  }
  const int nv = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv) fail("vertex index out of range");
    const Curve& E = G.vertices_[e.from].model;
    IsogenyMap phi = velu_from_kernel_polynomial(E, e.kernel, ell);
    if (phi.codomain().j_invariant() != vertices[e.to].j) fail("edge target disagrees with the kernel");
    GraphEdge ge;
    ge.from = e.from;
    ge.to = e.to;
    ge.kernel_id = e.kernel_id;
    ge.iso_scale = e.iso_scale;
    ge.map = phi.then_isomorphism(e.iso_scale, G.vertices_[e.to].model);
    ge.dual = e.dual;
    ge.exact_dual = e.exact_dual;
    auto& out = G.vertices_[e.from].out;
    if (e.kernel_id != static_cast<int>(out.size())) fail("edges are not in kernel order");
    if (!out.empty() && !(G.edges_[out.back()].map.kernel_polynomial() < ge.map.kernel_polynomial()))
      fail("kernel polynomials are not sorted");
    out.push_back(static_cast<int>(G.edges_.size()));
    G.edges_.push_back(std::move(ge));
  }
  const FieldElement ell_F = G.F_.element(ell);
  for (const auto& e : G.edges_) {
    if (e.dual < 0 || e.dual >= static_cast<int>(G.edges_.size()) || G.edges_[e.dual].from != e.to ||
        G.edges_[e.dual].to != e.from)
      fail("dual edge does not run backwards");
    if (e.exact_dual && e.map.scale() * G.edges_[e.dual].map.scale() != ell_F) fail("exact dual does not compose to [ell]");
  }
  return G;
}

}  // namespace isoendo

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoendo/isogeny.hpp"

namespace isoendo {

struct GraphVertex {
  FieldElement j;
  Curve model;            // normalized model: Frobenius acts as [-p]
  std::vector<int> out;   // edge indices, ordered by kernel id
};

struct GraphEdge {
  int from = -1, to = -1;
  int kernel_id = -1;     // position among the ell + 1 kernels at `from`
  IsogenyMap map;         // Vélu map followed by an isomorphism onto the target model
  FieldElement iso_scale; // the u of that isomorphism
  int dual = -1;          // edge at `to` whose kernel is map(E[ell])
  bool exact_dual = false; // map is the exact dual of edge `dual`'s map
};

class IsogenyGraph {
 public:
  IsogenyGraph() = default;

  const Integer& p() const { return p_; }
  int ell() const { return ell_; }
  const Field& field() const { return F_; }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphVertex& vertex(int v) const { return vertices_.at(v); }
  const GraphEdge& edge(int e) const { return edges_.at(e); }

  std::optional<int> find_vertex(const FieldElement& j) const;
  // Throws NotAVertex.
  int vertex_index(const FieldElement& j) const;
  // The edge leaving v with the given kernel id.
  int out_edge(int v, int kernel_id) const;

 private:
  friend IsogenyGraph build_graph(const Integer& p, int ell);
  friend struct GraphSnapshot;
  Integer p_;
  int ell_ = 0;
  Field F_;
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
};

// Some supersingular curve over F_{p^2}.
Curve find_start_vertex(const Integer& p);

// BFS from find_start_vertex. Vertices are numbered in discovery order and
// edges at each vertex are ordered by kernel polynomial. When two edges are
// each other's dual, the later one is replaced by the exact dual of the
// earlier, so that the pair composes to [ell].
IsogenyGraph build_graph(const Integer& p, int ell);

// floor(p/12) + eps_p
Integer expected_vertex_count(const Integer& p);
// Throws IntegrityFailure on a mismatch.
bool vertex_count_check(const IsogenyGraph& G);

struct Cycle {
  int base = -1;
  std::vector<int> edges;
  bool no_backtracking = true;
  bool first_dual_last = false;

  size_t length() const { return edges.size(); }
  std::vector<int> kernel_ids(const IsogenyGraph& G) const;
};

// Validates a walk given by kernel ids from `base` and fills in the flags.
// Throws BadChain if the walk is not closed.
Cycle make_cycle(const IsogenyGraph& G, int base, const std::vector<int>& kernel_ids);
Cycle make_cycle_from_edges(const IsogenyGraph& G, const std::vector<int>& edges);

// All closed walks at v of length 1..max_len without backtracking, in
// lexicographic order of kernel ids (a walk precedes its extensions).
std::vector<Cycle> enumerate_cycles(const IsogenyGraph& G, int v, int max_len);

IsogenyChain cycle_to_chain(const IsogenyGraph& G, const Cycle& c);
// Chain for the edge walk, which need not be closed.
IsogenyChain path_to_chain(const IsogenyGraph& G, const std::vector<int>& edges);
// The dual of a chain: exact duals of its maps in reverse order.
IsogenyChain dual_chain(const IsogenyChain& chain);
// The walk of dual edges in reverse order.
std::vector<int> reverse_dual_edges(const IsogenyGraph& G, const std::vector<int>& edges);
// Shortest walk (BFS, lowest kernel ids first) from u to v.
std::vector<int> shortest_path(const IsogenyGraph& G, int u, int v);

std::string to_dot(const IsogenyGraph& G);

// Plain data needed to rebuild a graph without recomputing the BFS.
struct GraphSnapshot {
  struct Vertex {
    FieldElement j;
    FieldElement A, B;
  };
  struct Edge {
    int from, to, kernel_id, dual;
    Polynomial kernel;
    FieldElement iso_scale;
    bool exact_dual;
  };
  Integer p;
  int ell = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  static GraphSnapshot of(const IsogenyGraph& G);
  // Recomputes every map and checks it against the recorded data; throws
  // IntegrityFailure on any disagreement.
  IsogenyGraph restore() const;
};

}  // namespace isoendo

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoendo/graph.hpp"
#include "isoendo/quaternion.hpp"
#include "isoendo/schoof.hpp"

namespace isoendo {

// A cycle is primitive (does not factor through [n], n > 1) iff it has no backtracking.
bool is_primitive(const Cycle& c);

// Whether the endomorphisms of two cycles at the same vertex commute, tested
// on bases of E[m] for auxiliary primes m with prod m > 4 ell^((e1+e2)/2),
// which determines alpha*beta - beta*alpha, plus random F_{p^2}-points.
bool commutes(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2, std::uint64_t seed = 0);

// Shared walk from the base vertex that meets the obstruction hypotheses.
struct PathWitness {
  std::vector<int> edges;
  std::vector<int> vertices;  // base, ..., end of the shared walk
};

// Longest common prefix (edge-wise) of the two cycles; a witness when it is
// nonempty and either passes through an intermediate vertex or ends at a
// vertex other than the Frobenius conjugate of the base.
std::optional<PathWitness> shared_path_obstruction(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2);

enum class OrderStatus { Maximal, NonMaximal, Undetermined };
std::string to_string(OrderStatus s);

struct CyclePairReport {
  Cycle c1, c2;
  Integer ta, na, tb, nb, tab;  // traces and norms of alpha, beta and trace of alpha*beta
  bool commute = false;
  bool independent = false;
  GramMatrix gram4;
  std::optional<Rational> disc;  // reduced discriminant when 1, alpha, beta, alpha*beta span a lattice
  std::optional<PathWitness> obstruction;
  OrderStatus status = OrderStatus::Undetermined;
};

// Traces via `trace`, Gram of <1, alpha, beta, alpha*beta>, independence by the
// rank of the Gram of {1, alpha, beta}. Throws IntegrityFailure when the
// commutation test and the rank test disagree.
CyclePairReport independence_report(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2,
                                    TraceBound mode = TraceBound::Sharp, std::uint64_t seed = 0);

// Same report from precomputed traces.
CyclePairReport report_from_traces(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2, const Integer& ta,
                                   const Integer& tb, const Integer& tab, std::uint64_t seed = 0);

struct ConductorPredicates {
  Integer disc;  // t^2 - 4 ell^e
  bool conductor_coprime_to_ell = false;
  bool ell_splits = false;
};
ConductorPredicates conductor_predicates(int ell, int length, const Integer& trace);

// Whether the edge sequences are powers of one root walk, or of a root walk
// and its reverse dual.
bool share_root_cycle(const IsogenyGraph& G, const Cycle& c1, const Cycle& c2);

bool visits_j0_or_j1728(const IsogenyGraph& G, const Cycle& c);
// Whether the cycle uses a self-loop that is its own dual.
bool has_self_dual_loop(const IsogenyGraph& G, const Cycle& c);

// Distinct vertices visited by the cycle, ascending.
std::vector<int> vertex_set(const IsogenyGraph& G, const Cycle& c);

}  // namespace isoendo

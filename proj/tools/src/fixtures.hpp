#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoendo/graph.hpp"

namespace isoendo::tools {

// A vertex of a worked example: an F_p j-invariant, or the non-F_p vertices
// (a Galois orbit) optionally restricted to neighbours of an F_p vertex.
struct VertexRef {
  std::string label;
  std::optional<long> j;
  std::optional<long> neighbour_of;
  bool excludes_neighbours = false;  // non-F_p vertices not adjacent to neighbour_of

  // Matching vertex indices, ascending.
  std::vector<int> resolve(const IsogenyGraph& G) const;
};

struct TableRow {
  std::string route;  // vertex sequence of the listed cycle, for diagnostics
  long trace = 0;
  long norm = 0;
  bool sign_known = true;
};

enum class Verdict { Maximal, UniqueMaximalSuperorder };
std::string to_string(Verdict v);

struct PairFixture {
  VertexRef vertex;
  TableRow first, second;
  Verdict verdict = Verdict::Maximal;
  bool tabulated = true;               // rows count towards the table totals
  std::vector<std::string> suborder;   // basis of the generated order, when listed
};

struct OrderFixture {
  VertexRef vertex;
  std::vector<std::string> basis;
};

struct Example {
  long p = 0;
  std::vector<long> fp_vertices;
  int non_fp_vertices = 0;
  std::vector<PairFixture> pairs;
  std::vector<OrderFixture> orders;

  const OrderFixture* order_for(const std::string& label) const;
};

const std::vector<Example>& examples();
// Throws BadInput for a prime without a worked example.
const Example& example(long p);

}  // namespace isoendo::tools

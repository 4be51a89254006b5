#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "isoendo/graph.hpp"
#include "isoendo/schoof.hpp"

namespace isoendo::tools {

struct RowResult {
  std::string vertex;
  TableRow row;
  bool tabulated = true;
  bool exact = false;       // a closed walk with this trace and norm
  bool up_to_sign = false;  // a closed walk with trace +-t and this norm
  std::vector<long> traces;  // distinct traces of closed walks of this length
};

struct PairResult {
  std::string vertex;
  Verdict expected = Verdict::Maximal;
  bool confirmed = false;
  long pairs_tried = 0;
  std::optional<std::vector<int>> cycle1, cycle2;  // the confirming pair
  std::optional<std::string> disc;
  std::string detail;
};

struct ReproduceReport {
  long p = 0;
  std::vector<std::string> expected_vertices, found_vertices;
  bool vertices_ok = false;
  std::vector<RowResult> rows;
  std::vector<PairResult> pairs;

  int tabulated_rows() const;
  int rows_exact() const;
  int rows_up_to_sign() const;
  int verdicts_confirmed() const;
  bool passed() const;
};

struct ReproduceOptions {
  TraceBound bound = TraceBound::Sharp;
  std::uint64_t seed = 0;
};

ReproduceReport reproduce(const IsogenyGraph& G, const Example& ex, const ReproduceOptions& opt = {});

// Label of a vertex: its j-invariant when in F_p, otherwise the encoded
// coefficient list.
std::string vertex_label(const IsogenyGraph& G, int v);

}  // namespace isoendo::tools

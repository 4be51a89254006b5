#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cache.hpp"
#include "fixtures.hpp"
#include "isoendo/errors.hpp"
#include "isoendo/quaternion.hpp"
#include "reproduce.hpp"

using namespace isoendo;
using namespace isoendo::tools;
namespace fs = std::filesystem;

namespace {

int automorphisms(const IsogenyGraph& G, int v) {
  const FieldElement& j = G.vertex(v).j;
  if (j == G.field().element(0)) return 6;
  if (j == G.field().element(1728)) return 4;
  return 2;
}

int loops(const IsogenyGraph& G, int v) {
  int n = 0;
  for (int e : G.vertex(v).out) n += G.edge(e).to == v;
  return n;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / (name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

// Units times loop edges account for every element of reduced norm ell, so the
// count pins each listed basis to its vertex.
TEST(Fixtures, NormTwoElementsMatchLoops) {
  for (const auto& ex : examples()) {
    const IsogenyGraph G = build_graph(ex.p, 2);
    const QuatAlgebra B = b_p_infty(Integer(ex.p));
    for (const auto& o : ex.orders) {
      std::vector<QuatElement> elems;
      for (const auto& s : o.basis) elems.push_back(QuatElement::parse(B, s));
      const auto gram = QuatOrder::from_basis(B, elems).gram();
      const size_t found = vectors_of_norm(gram, 4, 1'000'000).size();
      const auto vs = o.vertex.resolve(G);
      ASSERT_FALSE(vs.empty()) << ex.p << ' ' << o.vertex.label;
      for (int v : vs)
        EXPECT_EQ(found, static_cast<size_t>(automorphisms(G, v) * loops(G, v))) << ex.p << ' ' << o.vertex.label;
    }
  }
}

TEST(Fixtures, ListedVerticesExist) {
  for (const auto& ex : examples()) {
    const IsogenyGraph G = build_graph(ex.p, 2);
    for (const auto& pf : ex.pairs) EXPECT_FALSE(pf.vertex.resolve(G).empty()) << ex.p << ' ' << pf.vertex.label;
  }
  EXPECT_THROW(example(37), Error);
}

TEST(Reproduce, SmallestExampleConfirmsVerdicts) {
  const IsogenyGraph G = build_graph(31, 2);
  const ReproduceReport r = reproduce(G, example(31), {});
  EXPECT_TRUE(r.vertices_ok);
  EXPECT_EQ(r.tabulated_rows(), 6);
  EXPECT_EQ(r.rows_up_to_sign(), 6);
  EXPECT_EQ(r.verdicts_confirmed(), 3);
}

TEST(Cache, RoundTripGivesSameGraph) {
  const fs::path dir = fresh_dir("isoendo-cache");
  std::ostringstream diag;
  const IsogenyGraph built = load_or_build_graph(31, 2, dir, diag);
  ASSERT_TRUE(fs::exists(dir / "graph-31-2.json"));
  const IsogenyGraph loaded = load_or_build_graph(31, 2, dir, diag);
  EXPECT_EQ(snapshot_to_json(GraphSnapshot::of(built)), snapshot_to_json(GraphSnapshot::of(loaded)));
  EXPECT_TRUE(diag.str().empty()) << diag.str();
  fs::remove_all(dir);
}

TEST(Cache, CorruptFileIsReportedAndReplaced) {
  const fs::path dir = fresh_dir("isoendo-corrupt");
  const fs::path file = dir / "graph-31-2.json";
  std::ostringstream diag;
  const IsogenyGraph built = load_or_build_graph(31, 2, dir, diag);

  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = text.find("\"to\"");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos, "\"x\":1,");
  std::ofstream(file) << text;

  const IsogenyGraph rebuilt = load_or_build_graph(31, 2, dir, diag);
  EXPECT_NE(diag.str().find("warning"), std::string::npos);
  EXPECT_EQ(snapshot_to_json(GraphSnapshot::of(built)), snapshot_to_json(GraphSnapshot::of(rebuilt)));

  std::ofstream(file) << "not json";
  std::ostringstream diag2;
  load_or_build_graph(31, 2, dir, diag2);
  EXPECT_NE(diag2.str().find("warning"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cache, DirectoryPrecedence) {
  ::setenv("ISOGENY_ENDO_CACHE", "/tmp/from-env", 1);
  EXPECT_EQ(cache_dir("/tmp/from-flag"), fs::path("/tmp/from-flag"));
  EXPECT_EQ(cache_dir(""), fs::path("/tmp/from-env"));
  ::unsetenv("ISOGENY_ENDO_CACHE");
  EXPECT_FALSE(cache_dir("").has_value());
}

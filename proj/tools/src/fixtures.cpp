#include "fixtures.hpp"

#include <algorithm>

#include "isoendo/errors.hpp"

namespace isoendo::tools {

std::vector<int> VertexRef::resolve(const IsogenyGraph& G) const {
  std::vector<int> out;
  if (j) {
    if (auto v = G.find_vertex(G.field().element(*j))) out.push_back(*v);
    return out;
  }
  std::vector<int> near;
  if (neighbour_of) {
    const auto anchor = G.find_vertex(G.field().element(*neighbour_of));
    if (!anchor) return out;
    for (int e : G.vertex(*anchor).out) near.push_back(G.edge(e).to);
  }
  for (size_t v = 0; v < G.vertices().size(); ++v) {
    if (G.vertex(v).j.is_prime_field()) continue;
    const bool adjacent = std::find(near.begin(), near.end(), static_cast<int>(v)) != near.end();
    if (neighbour_of && adjacent == excludes_neighbours) continue;
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::Maximal ? "maximal" : "unique maximal superorder";
}

const OrderFixture* Example::order_for(const std::string& label) const {
  for (const auto& o : orders)
    if (o.vertex.label == label) return &o;
  return nullptr;
}

namespace {

VertexRef fp(long j) { return {std::to_string(j), j, std::nullopt, false}; }

PairFixture maximal(long j, TableRow a, TableRow b) { return {fp(j), std::move(a), std::move(b), Verdict::Maximal, true, {}}; }

PairFixture superorder(VertexRef v, TableRow a, TableRow b) {
  return {std::move(v), std::move(a), std::move(b), Verdict::UniqueMaximalSuperorder, true, {}};
}

Example example31() {
  Example ex;
  ex.p = 31;
  ex.fp_vertices = {2, 4, 23};
  ex.pairs = {
      maximal(2, {"2-2", 0, 2}, {"2-4-4-2", 2, 8}),
      maximal(4, {"4-4", 1, 2}, {"4-2-2-4", 0, 8}),
      maximal(23, {"23-23", 2, 2}, {"23-2-2-23", -1, 8}),
  };
  ex.orders = {
      {fp(23), {"1", "-i", "-1/2i+1/2ij", "1/2-1/2j"}},
      {fp(2), {"1", "1/4i+1/4ij", "2i", "1/2-1/2j"}},
      {fp(4), {"1", "1/2+1/6i+1/6j-1/6ij", "5/6i+1/3j+1/6ij", "-13/6i+1/3j+1/6ij"}},
  };
  return ex;
}

Example example103() {
  const VertexRef alpha{"alpha", std::nullopt, 34, false};
  const VertexRef beta{"beta", std::nullopt, 34, true};
  Example ex;
  ex.p = 103;
  ex.fp_vertices = {23, 24, 34, 69, 80};
  ex.non_fp_vertices = 4;
  PairFixture a = superorder(alpha, {"alpha-alphabar-betabar-beta-alpha", 3, 16, false},
                             {"alpha-34-69-69-34-alpha", 0, 32, true});
  a.tabulated = false;
  a.suborder = {"1", "-1/2+17/6i-1/6j+1/6ij", "-5/2i+1/2ij", "-1/2-22/3i-11/6j-2/3ij"};
  ex.pairs = {
      maximal(34, {"34-alphabar-alpha-34", -3, 8}, {"34-69-69-34", 0, 8}),
      maximal(69, {"69-69", 0, 2}, {"69-34-alpha-alphabar-34-69", -6, 32}),
      maximal(23, {"23-24-24-23", 2, 8}, {"23-80-80-23", -4, 8}),
      maximal(80, {"80-80", 2, 2}, {"80-23-69-69-23-80", 0, 32}),
      maximal(24, {"24-24", -1, 2}, {"24-23-69-69-23-24", 0, 32}),
      a,
  };
  ex.orders = {
      {fp(80), {"1", "i", "1/2i+1/2ij", "1/2+1/2j"}},
      {fp(23), {"1", "2i", "3/4i+1/4ij", "1/2-1/2j"}},
      // 69 carries a self-loop and 34 does not, so only End(E(69)) has norm-2
      // elements; each basis is filed under the vertex it fits.
      {fp(69), {"1", "17/14i+1/14ij", "15/7i-2/7ij", "1/2-1/2j"}},
      {fp(34), {"1", "1/2+1/7i+3/14j", "1/2-16/7i+1/14j", "1/2-17/14i-1/14j-1/2ij"}},
      {fp(24), {"1", "1/2+3/8i+1/8ij", "1/2-29/8i+1/8ij", "-13/8i+1/2j+1/8ij"}},
      {alpha, {"-1", "-1/2+1/6i-1/6j-1/6ij", "3i", "5/6i-1/3j+1/6ij"}},
      {beta, {"1", "1/2+13/10i+1/10j-1/10ij", "-12/5i+1/5j-1/5ij", "1/2-3/5i+3/10j+1/5ij"}},
  };
  return ex;
}

Example example101() {
  const VertexRef alpha{"alpha", std::nullopt, std::nullopt, false};
  Example ex;
  ex.p = 101;
  ex.fp_vertices = {0, 3, 21, 57, 59, 64, 66};
  ex.non_fp_vertices = 2;
  ex.pairs = {
      maximal(3, {"3-59-59-3", 2, 8}, {"3-64-3", -1, 4}),
      maximal(59, {"59-59", -1, 2}, {"59-3-64-3-59", -8, 16}),
      maximal(64, {"64-57-alpha-66-alphabar-57-64", 10, 64}, {"64-3-64", -1, 4}),
      maximal(66, {"66-0-66", 2, 4}, {"66-alpha-57-alphabar-66", 5, 16}),
      superorder(fp(21), {"21-21", 0, 2}, {"21-alpha-66-0-66-alpha-21", -8, 64}),
      superorder(fp(57), {"57-64-3-59-59-3-64-57", -8, 128}, {"57-alpha-66-alphabar-57", -5, 16}),
      superorder(alpha, {"alpha-21-21-alphabar-57-alpha", 5, 32}, {"alpha-66-0-66-alpha", 4, 16}),
  };
  ex.orders = {
      {fp(3), {"1", "1/2-13/12i+1/12ij", "5/6i+1/6ij", "5/12i-1/2j+1/12ij"}},
      {fp(59), {"1", "1/2+5/12i-1/12ij", "-13/6i-1/6ij", "-13/12i+1/2j-1/12ij"}},
      {fp(64), {"-1", "-1/2-3/5i-1/10j+1/10ij", "-1/2-21/20i+1/5j+1/20ij", "-67/20i-1/10j-3/20ij"}},
      {fp(66), {"1", "7/10i-1/10ij", "1/2-29/20i-3/20ij", "7/20i-1/2j-1/20ij"}},
      {fp(21), {"-1", "i", "-1/2+1/4i-1/4ij", "-1/2+1/2i-1/2j"}},
      {fp(57), {"1", "1/2-13/28i+1/7j+1/28ij", "-53/28i-1/14j+3/28ij", "1/2-11/4i-1/4ij"}},
      {fp(0), {"-1", "-1/2+7/20i+1/20ij", "-1/2+9/5i+1/2j-1/10ij", "-29/20i+1/2j+3/20ij"}},
      {alpha, {"-1", "2i", "-1/2+3/8i+1/4j-1/8ij", "-7/8i+1/4j+1/8ij"}},
  };
  return ex;
}

}  // namespace

const std::vector<Example>& examples() {
  static const std::vector<Example> all = {example31(), example103(), example101()};
  return all;
}

const Example& example(long p) {
  for (const auto& ex : examples())
    if (ex.p == p) return ex;
  raise(ErrorKind::BadInput, "no worked example for p = " + std::to_string(p) + " (have 31, 101, 103)");
}

}  // namespace isoendo::tools

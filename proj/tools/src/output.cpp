#include "output.hpp"

#include <iomanip>

namespace isoendo::tools {

using nlohmann::json;

namespace {

std::string route(const IsogenyGraph& G, const Cycle& c) {
  std::string s = vertex_label(G, c.base);
  for (int e : c.edges) s += " > " + vertex_label(G, G.edge(e).to);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

json graph_json(const IsogenyGraph& G) {
  json j;
  j["p"] = G.p().get_str();
  j["ell"] = G.ell();
  j["vertex_count"] = G.vertices().size();
  j["expected_vertex_count"] = expected_vertex_count(G.p()).get_str();
  j["vertex_count_ok"] = Integer(static_cast<long>(G.vertices().size())) == expected_vertex_count(G.p());
  j["vertices"] = json::array();
  for (size_t v = 0; v < G.vertices().size(); ++v) {
    const auto& gv = G.vertex(v);
    j["vertices"].push_back({{"index", v},
                             {"j", gv.j.encode()},
                             {"label", vertex_label(G, static_cast<int>(v))},
                             {"A", gv.model.A().encode()},
                             {"B", gv.model.B().encode()},
                             {"out", gv.out}});
  }
  j["edges"] = json::array();
  for (size_t e = 0; e < G.edges().size(); ++e) {
    const auto& ge = G.edge(e);
    j["edges"].push_back({{"id", e},
                          {"from", ge.from},
                          {"to", ge.to},
                          {"kernel_id", ge.kernel_id},
                          {"dual", ge.dual},
                          {"exact_dual", ge.exact_dual}});
  }
  return j;
}

json cycle_json(const IsogenyGraph& G, const Cycle& c) {
  return {{"base", c.base},
          {"edges", c.edges},
          {"kernel_ids", c.kernel_ids(G)},
          {"route", route(G, c)},
          {"length", c.length()},
          {"no_backtracking", c.no_backtracking},
          {"first_dual_last", c.first_dual_last}};
}

json trace_json(const TraceResult& r) {
  json res = json::array();
  for (const auto& [m, t] : r.residues) res.push_back({{"m", m}, {"t", t}});
  return {{"trace", r.trace.get_str()}, {"norm", r.norm.get_str()}, {"residues", res}};
}

json gram_json(const GramMatrix& g) {
  json out = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    out.push_back(r);
  }
  return out;
}

json pair_report_json(const IsogenyGraph& G, const CyclePairReport& r) {
  json j;
  j["j"] = G.vertex(r.c1.base).j.encode();
  j["cycle1"] = r.c1.edges;
  j["cycle2"] = r.c2.edges;
  j["traces"] = {{"a", r.ta.get_str()}, {"b", r.tb.get_str()}, {"ab", r.tab.get_str()}};
  j["norms"] = {{"a", r.na.get_str()}, {"b", r.nb.get_str()}};
  j["gram"] = gram_json(r.gram4);
  j["disc_reduced"] = r.disc ? json(r.disc->get_str()) : json(nullptr);
  j["independent"] = r.independent;
  j["commute"] = r.commute;
  j["obstruction"] = r.obstruction ? json(r.obstruction->vertices) : json(nullptr);
  j["order_status"] = to_string(r.status);
  return j;
}

json order_json(const QuatOrder& O) {
  json basis = json::array();
  for (const auto& x : O.basis()) basis.push_back(x.to_string());
  return {{"algebra", {{"a", O.algebra().a.get_str()}, {"b", O.algebra().b.get_str()}}},
          {"basis", basis},
          {"disc_reduced", O.reduced_discriminant().get_str()}};
}

json reproduce_json(const ReproduceReport& r) {
  json j;
  j["p"] = r.p;
  j["vertices"] = {{"expected", r.expected_vertices}, {"found", r.found_vertices}, {"ok", r.vertices_ok}};
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"vertex", row.vertex},
                         {"route", row.row.route},
                         {"trace", row.row.trace},
                         {"norm", row.row.norm},
                         {"sign_known", row.row.sign_known},
                         {"tabulated", row.tabulated},
                         {"exact", row.exact},
                         {"up_to_sign", row.up_to_sign},
                         {"observed_traces", row.traces}});
  j["verdicts"] = json::array();
  for (const auto& v : r.pairs) {
    json x = {{"vertex", v.vertex},
              {"expected", to_string(v.expected)},
              {"confirmed", v.confirmed},
              {"pairs_tried", v.pairs_tried},
              {"detail", v.detail}};
    if (v.cycle1) x["cycle1"] = *v.cycle1;
    if (v.cycle2) x["cycle2"] = *v.cycle2;
    if (v.disc) x["disc_reduced"] = *v.disc;
    j["verdicts"].push_back(x);
  }
  j["summary"] = {{"rows", r.tabulated_rows()},
                  {"rows_exact", r.rows_exact()},
                  {"rows_up_to_sign", r.rows_up_to_sign()},
                  {"verdicts", r.pairs.size()},
                  {"verdicts_confirmed", r.verdicts_confirmed()},
                  {"passed", r.passed()}};
  return j;
}

void print_graph_table(const IsogenyGraph& G, std::ostream& out) {
  const Integer expected = expected_vertex_count(G.p());
  out << "p " << G.p() << " ell " << G.ell() << " vertices " << G.vertices().size() << " expected " << expected
      << (Integer(static_cast<long>(G.vertices().size())) == expected ? " ok" : " MISMATCH") << '\n';
  for (size_t v = 0; v < G.vertices().size(); ++v) {
    out << "vertex " << v << " j " << vertex_label(G, static_cast<int>(v)) << " edges";
    for (int e : G.vertex(v).out) out << ' ' << e << ">" << G.edge(e).to;
    out << '\n';
  }
  for (size_t e = 0; e < G.edges().size(); ++e) {
    const auto& ge = G.edge(e);
    out << "edge " << e << ' ' << ge.from << " > " << ge.to << " kernel " << ge.kernel_id << " dual " << ge.dual
        << (ge.exact_dual ? " exact" : "") << '\n';
  }
}

void print_cycle_table(const IsogenyGraph& G, const std::vector<Cycle>& cycles,
                       const std::vector<TraceResult>& traces, std::ostream& out) {
  for (size_t k = 0; k < cycles.size(); ++k) {
    const auto& c = cycles[k];
    out << "edges " << join(c.edges) << " len " << c.length() << " dual_ends " << (c.first_dual_last ? 1 : 0);
    if (k < traces.size()) out << " trace " << traces[k].trace << " norm " << traces[k].norm;
    out << " route " << route(G, c) << '\n';
  }
}

void print_pair_report_table(const IsogenyGraph& G, const CyclePairReport& r, std::ostream& out) {
  out << "vertex " << vertex_label(G, r.c1.base) << '\n';
  out << "cycle1 " << join(r.c1.edges) << " trace " << r.ta << " norm " << r.na << '\n';
  out << "cycle2 " << join(r.c2.edges) << " trace " << r.tb << " norm " << r.nb << '\n';
  out << "trace(ab) " << r.tab << '\n';
  out << "commute " << r.commute << " independent " << r.independent << '\n';
  out << "gram\n";
  for (const auto& row : r.gram4) {
    for (const auto& x : row) out << std::setw(8) << x.get_str();
    out << '\n';
  }
  out << "disc " << (r.disc ? r.disc->get_str() : "-") << " status " << to_string(r.status) << '\n';
  if (r.obstruction) out << "shared path " << join(r.obstruction->vertices) << '\n';
}

void print_reproduce_table(const ReproduceReport& r, std::ostream& out) {
  out << "p " << r.p << " vertices " << (r.vertices_ok ? "ok" : "MISMATCH") << '\n';
  for (const auto& row : r.rows) {
    out << (row.tabulated ? "row " : "extra ") << std::left << std::setw(6) << row.vertex << std::right
        << " t " << std::setw(4) << row.row.trace << " n " << std::setw(4) << row.row.norm << "  exact "
        << (row.exact ? "yes" : "no ") << "  up-to-sign " << (row.up_to_sign ? "yes" : "no ") << "  "
        << row.row.route << '\n';
  }
  for (const auto& v : r.pairs) {
    out << "verdict " << std::left << std::setw(6) << v.vertex << std::right << ' ' << to_string(v.expected) << ": "
        << (v.confirmed ? "confirmed" : "NOT confirmed") << " (" << v.pairs_tried << " pairs; " << v.detail << ")\n";
  }
  out << "summary rows exact " << r.rows_exact() << '/' << r.tabulated_rows() << " up-to-sign " << r.rows_up_to_sign()
      << '/' << r.tabulated_rows() << " verdicts " << r.verdicts_confirmed() << '/' << r.pairs.size() << ' '
      << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace isoendo::tools

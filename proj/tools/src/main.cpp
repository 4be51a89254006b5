#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "fixtures.hpp"
#include "isoendo/analysis.hpp"
#include "isoendo/errors.hpp"
#include "isoendo/oracle.hpp"
#include "output.hpp"
#include "reproduce.hpp"

using namespace isoendo;
using namespace isoendo::tools;
using nlohmann::json;

namespace {

constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

struct RunConfig {
  long p = 0;
  int ell = 2;
  int max_len = 8;
  std::string bound_mode = "sharp";
  int denom_bound = 28;
  std::string cache_dir;
  std::string format = "table";
  std::uint64_t seed = 0;
  std::string j;
  std::vector<std::string> cycles;
  bool verify = false;
  bool with_traces = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg, std::vector<std::string> formats) {
  cmd->add_option("--p", cfg.p, "characteristic")->required();
  cmd->add_option("--ell", cfg.ell, "isogeny degree")->capture_default_str();
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("--cache-dir", cfg.cache_dir, "graph cache directory (default $ISOGENY_ENDO_CACHE)");
  cmd->add_option("--bound-mode", cfg.bound_mode, "Schoof prime bound")
      ->check(CLI::IsMember({"sharp", "paper"}))
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
}

TraceBound bound_of(const RunConfig& cfg) { return cfg.bound_mode == "paper" ? TraceBound::Paper : TraceBound::Sharp; }

void validate(const RunConfig& cfg) {
  if (cfg.p < 5 || !is_prime(Integer(cfg.p))) raise(ErrorKind::BadInput, "--p must be a prime >= 5");
  if (cfg.ell < 2 || !is_prime(Integer(cfg.ell)) || cfg.ell == cfg.p)
    raise(ErrorKind::BadInput, "--ell must be a prime different from p");
  if (cfg.max_len < 0) raise(ErrorKind::BadInput, "--max-len must be nonnegative");
}

IsogenyGraph graph_for(const RunConfig& cfg) {
  validate(cfg);
  return load_or_build_graph(Integer(cfg.p), cfg.ell, cache_dir(cfg.cache_dir), std::cerr);
}

int vertex_for(const IsogenyGraph& G, const std::string& j) {
  if (j.empty()) raise(ErrorKind::BadInput, "--j is required");
  const FieldElement x = j.find(',') != std::string::npos ? G.field().decode(j) : G.field().element(Integer(j));
  return G.vertex_index(x);
}

Cycle cycle_for(const IsogenyGraph& G, const std::string& spec, std::optional<int> base) {
  std::vector<int> edges;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      const int e = std::stoi(tok);
      if (e < 0 || e >= static_cast<int>(G.edges().size())) throw std::out_of_range(tok);
      edges.push_back(e);
    } catch (const std::logic_error&) {
      raise(ErrorKind::BadInput, "bad edge id '" + tok + "' in --cycle");
    }
  }
  if (edges.empty()) raise(ErrorKind::BadInput, "empty --cycle");
  Cycle c = make_cycle_from_edges(G, edges);
  if (base && c.base != *base) raise(ErrorKind::BadInput, "cycle " + spec + " does not start at the given vertex");
  return c;
}

int cmd_graph(const RunConfig& cfg) {
  const IsogenyGraph G = graph_for(cfg);
  if (cfg.format == "json")
    std::cout << graph_json(G).dump(2) << '\n';
  else if (cfg.format == "dot")
    std::cout << to_dot(G);
  else
    print_graph_table(G, std::cout);
  if (Integer(static_cast<long>(G.vertices().size())) != expected_vertex_count(G.p())) {
    std::cerr << "vertex count differs from floor(p/12) + eps_p\n";
    return kMismatch;
  }
  return 0;
}

int cmd_cycles(const RunConfig& cfg) {
  const IsogenyGraph G = graph_for(cfg);
  const int v = vertex_for(G, cfg.j);
  const auto cycles = enumerate_cycles(G, v, cfg.max_len);
  std::vector<TraceResult> traces;
  if (cfg.with_traces)
    for (const auto& c : cycles) traces.push_back(trace(cycle_to_chain(G, c), bound_of(cfg)));
  if (cfg.format == "json") {
    json out = json::array();
    for (size_t k = 0; k < cycles.size(); ++k) {
      json c = cycle_json(G, cycles[k]);
      if (k < traces.size()) c["trace"] = trace_json(traces[k]);
      out.push_back(c);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    print_cycle_table(G, cycles, traces, std::cout);
  }
  return 0;
}

int cmd_trace(const RunConfig& cfg) {
  const IsogenyGraph G = graph_for(cfg);
  if (cfg.cycles.size() != 1) raise(ErrorKind::BadInput, "trace takes exactly one --cycle");
  std::optional<int> base;
  if (!cfg.j.empty()) base = vertex_for(G, cfg.j);
  const Cycle c = cycle_for(G, cfg.cycles[0], base);
  const IsogenyChain chain = cycle_to_chain(G, c);
  const TraceResult r = trace(chain, bound_of(cfg));
  std::optional<Integer> oracle;
  if (cfg.verify) oracle = trace_oracle(chain);
  if (cfg.format == "json") {
    json out = trace_json(r);
    out["cycle"] = cycle_json(G, c);
    if (oracle) out["oracle"] = oracle->get_str();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "trace " << r.trace << " norm " << r.norm << '\n';
    for (const auto& [m, t] : r.residues) std::cout << "mod " << m << " = " << t << '\n';
    if (oracle) std::cout << "oracle " << *oracle << '\n';
  }
  if (oracle && *oracle != r.trace) {
    std::cerr << "trace mismatch: schoof " << r.trace << " oracle " << *oracle << '\n';
    return kMismatch;
  }
  return 0;
}

int cmd_endoring(const RunConfig& cfg) {
  const IsogenyGraph G = graph_for(cfg);
  if (cfg.cycles.size() != 2) raise(ErrorKind::BadInput, "endoring takes exactly two --cycle options");
  const int v = vertex_for(G, cfg.j);
  const Cycle c1 = cycle_for(G, cfg.cycles[0], v), c2 = cycle_for(G, cfg.cycles[1], v);
  const CyclePairReport r = independence_report(G, c1, c2, bound_of(cfg), cfg.seed);
  const QuatAlgebra B = b_p_infty(G.p());
  json out = pair_report_json(G, r);
  std::optional<QuatOrder> realized;
  std::vector<QuatOrder> superorders;
  if (r.independent) {
    try {
      const auto [a, b] = find_pair(B, r.ta, r.na, r.tb, r.nb, r.tab, cfg.denom_bound);
      realized = QuatOrder::generated_by(B, {a, b});
      out["elements"] = {{"alpha", a.to_string()}, {"beta", b.to_string()}};
      out["order"] = order_json(*realized);
    } catch (const Error& ex) {
      std::cerr << "no realization in B_{p,inf} within denominator bound " << cfg.denom_bound << ": " << ex.what()
                << '\n';
    }
    if (r.status == OrderStatus::NonMaximal) {
      superorders = maximal_superorders(order_from_traces(r.ta, r.na, r.tb, r.nb, r.tab), G.p());
      json sup = json::array();
      for (const auto& O : superorders) sup.push_back(order_json(O));
      out["maximal_superorders"] = sup;
      out["superorder_isometry_classes"] = up_to_isometry(superorders).size();
    }
  }
  if (cfg.format == "json") {
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  print_pair_report_table(G, r, std::cout);
  if (out.contains("elements"))
    std::cout << "alpha " << out["elements"]["alpha"].get<std::string>() << "\nbeta "
              << out["elements"]["beta"].get<std::string>() << '\n';
  if (realized) {
    std::cout << "order basis";
    for (const auto& x : realized->basis()) std::cout << " [" << x.to_string() << ']';
    std::cout << '\n';
  }
  if (!superorders.empty())
    std::cout << "maximal superorders " << superorders.size() << " in " << up_to_isometry(superorders).size()
              << " isometry classes\n";
  return 0;
}

int cmd_reproduce(const RunConfig& cfg) {
  const Example& ex = example(cfg.p);
  if (cfg.ell != 2) raise(ErrorKind::BadInput, "the worked examples use ell = 2");
  const IsogenyGraph G = graph_for(cfg);
  const ReproduceReport r = reproduce(G, ex, {bound_of(cfg), cfg.seed});
  if (cfg.format == "json")
    std::cout << reproduce_json(r).dump(2) << '\n';
  else
    print_reproduce_table(r, std::cout);
  return r.passed() ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supersingular isogeny graphs, cycle traces and endomorphism rings"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* graph = app.add_subcommand("graph", "build G(p, ell) and check the vertex count");
  add_common(graph, cfg, {"table", "json", "dot"});

  auto* cycles = app.add_subcommand("cycles", "list cycles without backtracking at a vertex");
  add_common(cycles, cfg, {"table", "json"});
  cycles->add_option("--j", cfg.j, "j-invariant: an integer, or coefficients c0,c1")->required();
  cycles->add_option("--max-len", cfg.max_len, "maximum cycle length")->capture_default_str();
  cycles->add_flag("--traces", cfg.with_traces, "also compute traces");

  auto* tr = app.add_subcommand("trace", "trace of a cycle via the Schoof-style algorithm");
  add_common(tr, cfg, {"table", "json"});
  tr->add_option("--j", cfg.j, "expected base vertex");
  tr->add_option("--cycle", cfg.cycles, "comma-separated edge ids")->required();
  tr->add_flag("--verify", cfg.verify, "cross-check against explicit torsion points");

  auto* endo = app.add_subcommand("endoring", "order generated by two cycles at a vertex");
  add_common(endo, cfg, {"table", "json"});
  endo->add_option("--j", cfg.j, "base vertex")->required();
  endo->add_option("--cycle", cfg.cycles, "comma-separated edge ids, given twice")->required();
  endo->add_option("--denom-bound", cfg.denom_bound, "denominator bound for realized elements")
      ->capture_default_str();

  auto* repro = app.add_subcommand("reproduce", "recompute the worked examples for p = 31, 101, 103");
  add_common(repro, cfg, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*graph) return cmd_graph(cfg);
    if (*cycles) return cmd_cycles(cfg);
    if (*tr) return cmd_trace(cfg);
    if (*endo) return cmd_endoring(cfg);
    return cmd_reproduce(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::BadInput:
      case ErrorKind::BadChain:
      case ErrorKind::NotAVertex:
        return kBadInput;
      default:
        return kMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

#include "reproduce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "isoendo/analysis.hpp"
#include "isoendo/errors.hpp"
#include "isoendo/quaternion.hpp"

namespace isoendo::tools {

std::string vertex_label(const IsogenyGraph& G, int v) {
  const FieldElement& j = G.vertex(v).j;
  return j.is_prime_field() ? j.coeff(0).get_str() : j.encode();
}

int ReproduceReport::tabulated_rows() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.tabulated; }));
}

int ReproduceReport::rows_exact() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.tabulated && r.exact; }));
}

int ReproduceReport::rows_up_to_sign() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.tabulated && r.up_to_sign; }));
}

int ReproduceReport::verdicts_confirmed() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const PairResult& r) { return r.confirmed; }));
}

bool ReproduceReport::passed() const {
  return vertices_ok && rows_exact() == tabulated_rows() && verdicts_confirmed() == static_cast<int>(pairs.size());
}

namespace {

struct Walk {
  Cycle cycle;
  IsogenyChain chain;
  Integer trace;
};

int log_ell(long norm, int ell) {
  int e = 0;
  while (norm > 1 && norm % ell == 0) {
    norm /= ell;
    ++e;
  }
  if (norm != 1) raise(ErrorKind::BadInput, "fixture norm is not a power of ell");
  return e;
}

class Pipeline {
 public:
  Pipeline(const IsogenyGraph& G, const Example& ex, const ReproduceOptions& opt)
      : G_(G), ex_(ex), opt_(opt), B_(b_p_infty(Integer(ex.p))) {}

  // Closed walks of the given length at v, backtracking allowed, with traces.
  const std::vector<Walk>& walks(int v, int length) {
    auto [it, fresh] = walks_.try_emplace({v, length});
    if (!fresh) return it->second;
    std::vector<int> path;
    auto rec = [&](auto&& self, int at) -> void {
      if (static_cast<int>(path.size()) == length) {
        if (at != v) return;
        Walk w{make_cycle_from_edges(G_, path), path_to_chain(G_, path), 0};
        w.trace = trace(w.chain, opt_.bound).trace;
        it->second.push_back(std::move(w));
        return;
      }
      for (int e : G_.vertex(at).out) {
        path.push_back(e);
        self(self, G_.edge(e).to);
        path.pop_back();
      }
    };
    rec(rec, v);
    return it->second;
  }

  GramMatrix fixture_gram(const std::vector<std::string>& basis) const {
    std::vector<QuatElement> elems;
    for (const auto& s : basis) elems.push_back(QuatElement::parse(B_, s));
    return QuatOrder::from_basis(B_, elems).gram();
  }

  RowResult match_row(const PairFixture& pf, const TableRow& row, const std::vector<int>& vs) {
    RowResult r;
    r.vertex = pf.vertex.label;
    r.row = row;
    r.tabulated = pf.tabulated;
    std::set<long> seen;
    for (int v : vs)
      for (const auto& w : walks(v, log_ell(row.norm, G_.ell()))) {
        const long t = w.trace.get_si();
        seen.insert(t);
        r.exact |= t == row.trace;
        r.up_to_sign |= t == row.trace || t == -row.trace;
      }
    if (!row.sign_known) r.exact = r.up_to_sign;
    r.traces.assign(seen.begin(), seen.end());
    return r;
  }

  PairResult judge(const PairFixture& pf, const std::vector<int>& vs) {
    PairResult res;
    res.vertex = pf.vertex.label;
    res.expected = pf.verdict;
    const OrderFixture* end = ex_.order_for(pf.vertex.label);
    const std::optional<GramMatrix> end_gram = end ? std::optional(fixture_gram(end->basis)) : std::nullopt;
    const std::optional<GramMatrix> sub_gram =
        pf.suborder.empty() ? std::nullopt : std::optional(fixture_gram(pf.suborder));
    std::map<std::string, long> outcomes;
    for (int v : vs) {
      const auto& w1 = walks(v, log_ell(pf.first.norm, G_.ell()));
      const auto& w2 = walks(v, log_ell(pf.second.norm, G_.ell()));
      for (const auto& a : w1) {
        if (abs(a.trace) != std::abs(pf.first.trace)) continue;
        for (const auto& b : w2) {
          if (abs(b.trace) != std::abs(pf.second.trace) || a.cycle.edges == b.cycle.edges) continue;
          ++res.pairs_tried;
          // alpha * beta applies beta first
          const Integer tab = trace(b.chain.then(a.chain), opt_.bound).trace;
          const CyclePairReport r = report_from_traces(G_, a.cycle, b.cycle, a.trace, b.trace, tab, opt_.seed);
          std::string why;
          const bool ok = pf.verdict == Verdict::Maximal ? confirms_maximal(r, end_gram, why)
                                                         : confirms_superorder(r, end_gram, sub_gram, why);
          ++outcomes[why];
          if (ok) {
            res.confirmed = true;
            res.cycle1 = a.cycle.edges;
            res.cycle2 = b.cycle.edges;
            res.disc = r.disc->get_str();
            res.detail = why;
            return res;
          }
        }
      }
    }
    if (res.pairs_tried == 0) {
      res.detail = "no closed walks with the listed traces up to sign";
      return res;
    }
    for (const auto& [why, n] : outcomes) {
      if (!res.detail.empty()) res.detail += "; ";
      res.detail += std::to_string(n) + "x " + why;
    }
    return res;
  }

 private:
  bool confirms_maximal(const CyclePairReport& r, const std::optional<GramMatrix>& end, std::string& why) const {
    if (!r.independent) {
      why = "dependent";
      return false;
    }
    why = "disc " + r.disc->get_str();
    if (r.status != OrderStatus::Maximal) return false;
    if (end && !is_isometric(r.gram4, *end)) {
      why += ", not isometric to the listed basis";
      return false;
    }
    why += end ? ", isometric to the listed basis" : "";
    return true;
  }

  bool confirms_superorder(const CyclePairReport& r, const std::optional<GramMatrix>& end,
                           const std::optional<GramMatrix>& sub, std::string& why) const {
    if (!r.independent) {
      why = "dependent";
      return false;
    }
    why = "disc " + r.disc->get_str();
    if (r.status != OrderStatus::NonMaximal) return false;
    const QuatOrder O = order_from_traces(r.ta, r.na, r.tb, r.nb, r.tab);
    const auto sup = maximal_superorders(O, Integer(ex_.p));
    const auto classes = up_to_isometry(sup);
    why += ", " + std::to_string(sup.size()) + " maximal superorders in " + std::to_string(classes.size()) +
           " isometry classes";
    if (classes.size() != 1) return false;
    if (end && !is_isometric(classes.front().gram(), *end)) {
      why += ", not isometric to the listed basis";
      return false;
    }
    if (sub && !is_isometric(r.gram4, *sub)) {
      why += ", order not isometric to the listed suborder";
      return false;
    }
    return true;
  }

  const IsogenyGraph& G_;
  const Example& ex_;
  ReproduceOptions opt_;
  QuatAlgebra B_;
  std::map<std::pair<int, int>, std::vector<Walk>> walks_;
};

}  // namespace

ReproduceReport reproduce(const IsogenyGraph& G, const Example& ex, const ReproduceOptions& opt) {
  if (G.p() != ex.p || G.ell() != 2) raise(ErrorKind::BadInput, "graph does not match the worked example");
  ReproduceReport rep;
  rep.p = ex.p;

  std::vector<long> fp;
  int non_fp = 0;
  for (size_t v = 0; v < G.vertices().size(); ++v) {
    if (G.vertex(v).j.is_prime_field())
      fp.push_back(G.vertex(v).j.coeff(0).get_si());
    else
      ++non_fp;
  }
  std::sort(fp.begin(), fp.end());
  for (long j : ex.fp_vertices) rep.expected_vertices.push_back(std::to_string(j));
  for (long j : fp) rep.found_vertices.push_back(std::to_string(j));
  for (int k = 0; k < ex.non_fp_vertices; ++k) rep.expected_vertices.push_back("non-F_p");
  for (int k = 0; k < non_fp; ++k) rep.found_vertices.push_back("non-F_p");
  rep.vertices_ok = rep.expected_vertices == rep.found_vertices;

  Pipeline pipe(G, ex, opt);
  for (const auto& pf : ex.pairs) {
    const auto vs = pf.vertex.resolve(G);
    rep.rows.push_back(pipe.match_row(pf, pf.first, vs));
    rep.rows.push_back(pipe.match_row(pf, pf.second, vs));
    rep.pairs.push_back(pipe.judge(pf, vs));
  }
  return rep;
}

}  // namespace isoendo::tools

#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "isoendo/analysis.hpp"
#include "isoendo/graph.hpp"
#include "isoendo/quaternion.hpp"
#include "isoendo/schoof.hpp"
#include "reproduce.hpp"

namespace isoendo::tools {

nlohmann::json graph_json(const IsogenyGraph& G);
nlohmann::json cycle_json(const IsogenyGraph& G, const Cycle& c);
nlohmann::json trace_json(const TraceResult& r);
nlohmann::json gram_json(const GramMatrix& g);
nlohmann::json pair_report_json(const IsogenyGraph& G, const CyclePairReport& r);
nlohmann::json order_json(const QuatOrder& O);
nlohmann::json reproduce_json(const ReproduceReport& r);

void print_graph_table(const IsogenyGraph& G, std::ostream& out);
void print_cycle_table(const IsogenyGraph& G, const std::vector<Cycle>& cycles,
                       const std::vector<TraceResult>& traces, std::ostream& out);
void print_pair_report_table(const IsogenyGraph& G, const CyclePairReport& r, std::ostream& out);
void print_reproduce_table(const ReproduceReport& r, std::ostream& out);

}  // namespace isoendo::tools

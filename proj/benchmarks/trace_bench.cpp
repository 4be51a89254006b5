#include <benchmark/benchmark.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <map>

#include "isoendo/graph.hpp"
#include "isoendo/schoof.hpp"

using namespace isoendo;

namespace {

constexpr long kPrime = 103;

const IsogenyGraph& graph() {
  static const IsogenyGraph G = build_graph(kPrime, 2);
  return G;
}

// First non-backtracking cycle of exactly this length, at any vertex.
IsogenyChain cycle_of_length(int length) {
  const IsogenyGraph& G = graph();
  for (size_t v = 0; v < G.vertices().size(); ++v)
    for (const auto& c : enumerate_cycles(G, static_cast<int>(v), length))
      if (static_cast<int>(c.length()) == length) return cycle_to_chain(G, c);
  throw std::runtime_error("no cycle of length " + std::to_string(length));
}

void BM_TraceByLength(benchmark::State& state) {
  const IsogenyChain chain = cycle_of_length(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace(chain));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceByLength)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(state.range(0), 2));
}
BENCHMARK(BM_BuildGraph)->Arg(31)->Arg(101)->Arg(103)->Arg(199)->Unit(benchmark::kMillisecond);

// Collects per-length times and prints the least-squares slope of
// log(time) against log(length).
class ExponentReporter : public benchmark::ConsoleReporter {
 public:
  void ReportRuns(const std::vector<Run>& runs) override {
    for (const auto& r : runs)
      if (r.run_name.function_name == "BM_TraceByLength" && r.run_type == Run::RT_Iteration)
        times_[std::stol(r.run_name.args)] = r.GetAdjustedRealTime();
    ConsoleReporter::ReportRuns(runs);
  }

  void Finalize() override {
    ConsoleReporter::Finalize();
    if (times_.size() < 2) return;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [len, t] : times_) {
      const double x = std::log(static_cast<double>(len)), y = std::log(t);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(times_.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    GetOutputStream() << "trace time ~ length^" << slope << " at p = " << kPrime << " (polynomial sanity bound 8)\n";
  }

 private:
  std::map<long, double> times_;
};

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ExponentReporter reporter;
  benchmark::RunSpecifiedBenchmarks(&reporter);
  benchmark::Shutdown();
  return 0;
}

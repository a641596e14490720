#include <benchmark/benchmark.h>

#include "interfere/catalog.hpp"
#include "interfere/domination.hpp"
#include "interfere/families.hpp"
#include "interfere/index_search.hpp"
#include "interfere/metrics.hpp"

namespace {

using namespace interfere;

// K_n at m = ceil(log2 2n) - 1 has no labeling: the search must exhaust.
void BM_ExhaustKn(benchmark::State& state, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = families::complete(n);
  const auto sets = minimal_dominating_sets(g).sets();
  const std::size_t m = universal_upper_bound(n) - 1;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = parallel ? exists_interference(g, sets, m) : serial::exists_interference(g, sets, m);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.witness);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_IndexCycle(benchmark::State& state, bool parallel) {
  const auto g = families::cycle(static_cast<std::size_t>(state.range(0)));
  const auto sets = minimal_dominating_sets(g).sets();
  const std::size_t m = universal_upper_bound(g.order()) - 1;
  for (auto _ : state) {
    const auto r = parallel ? exists_interference(g, sets, m) : serial::exists_interference(g, sets, m);
    benchmark::DoNotOptimize(r.witness);
  }
}

void BM_AllPairs(benchmark::State& state, bool parallel) {
  const auto g = families::crown(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto d = parallel ? all_pairs_distances(g) : serial::all_pairs_distances(g);
    benchmark::DoNotOptimize(d);
  }
}

void BM_ConnectedCatalog(benchmark::State& state, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    // The parallel path memoises; only the first iteration generates.
    auto graphs = parallel ? connected_graphs(n) : serial::connected_graphs(n);
    benchmark::DoNotOptimize(graphs);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_ExhaustKn, serial, false)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExhaustKn, parallel, true)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_IndexCycle, serial, false)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_IndexCycle, parallel, true)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AllPairs, serial, false)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_AllPairs, parallel, true)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_ConnectedCatalog, serial, false)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConnectedCatalog, parallel, true)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include "tdroute/corpus.hpp"
#include "tdroute/parallel.hpp"

namespace {

using namespace tdroute;

Graph fifo_graph(std::size_t nodes) {
  RandomGraphSpec spec;
  spec.nodes = nodes;
  spec.edge_prob = 4.0 / static_cast<double>(nodes);
  spec.breakpoints = 6;
  spec.seed = nodes;
  return gen_random(spec).graph;
}

Graph mixed_graph(std::size_t nodes) {
  RandomGraphSpec spec;
  spec.nodes = nodes;
  spec.edge_prob = 0.5;
  spec.fifo = false;
  spec.breakpoints = 8;
  spec.seed = nodes;
  return gen_random(spec).graph;
}

std::vector<TdQuery> queries(const Graph& g, std::size_t count) {
  Rng rng(99);
  const auto n = static_cast<Ticks>(g.node_count());
  std::vector<TdQuery> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({static_cast<NodeId>(rng.uniform(0, n - 1)),
                   static_cast<NodeId>(rng.uniform(0, n - 1)), TimePoint{rng.uniform(0, 100)}});
  }
  return out;
}

template <auto Kernel>
void BM_ScanFifo(benchmark::State& state) {
  const Graph g = mixed_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g.edges()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

template <auto Kernel>
void BM_RouteBatch(benchmark::State& state) {
  const Graph g = fifo_graph(static_cast<std::size_t>(state.range(0)));
  const auto qs = queries(g, 256);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, qs, BatchAlgorithm::kTdFifo));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
}

BENCHMARK(BM_ScanFifo<serial::scan_fifo>)->Name("scan_fifo/serial")->Arg(100)->Arg(300);
BENCHMARK(BM_ScanFifo<par::scan_fifo>)->Name("scan_fifo/par")->Arg(100)->Arg(300);
BENCHMARK(BM_RouteBatch<serial::route_batch>)->Name("route_batch/serial")->Arg(500)->Arg(2000);
BENCHMARK(BM_RouteBatch<par::route_batch>)->Name("route_batch/par")->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();

#pragma once

// Test-only generators and oracles. Nothing here calls into the engine's
// search code.

#include <optional>
#include <vector>

#include "tdroute/corpus.hpp"
#include "tdroute/graph.hpp"
#include "tdroute/travel_time.hpp"

namespace tdroute::testing {

/// FIFO by definition: every pair t1 < t2 in [lo, hi] must satisfy
/// t1 + c(t1) <= t2 + c(t2). Quadratic on purpose.
inline std::optional<FifoWitness> fifo_pair_scan(const TravelTimeFunction& f, Ticks lo, Ticks hi) {
  std::vector<Ticks> arrival;
  for (Ticks t = lo; t <= hi; ++t) arrival.push_back(t + f(TimePoint{t}).ticks);
  for (std::size_t i = 0; i < arrival.size(); ++i) {
    for (std::size_t j = i + 1; j < arrival.size(); ++j) {
      if (arrival[i] > arrival[j]) {
        const Ticks t1 = lo + static_cast<Ticks>(i), t2 = lo + static_cast<Ticks>(j);
        return FifoWitness{TimePoint{t1}, TimePoint{t2}, TimePoint{arrival[i]}, TimePoint{arrival[j]}};
      }
    }
  }
  return std::nullopt;
}

/// Scan window covering the breakpoint span plus one tick.
inline Ticks scan_end(const TravelTimeFunction& f) { return f.points().back().at.ticks + 1; }

inline StaticGraph random_static_graph(Rng& rng, std::size_t nodes, std::uint32_t edge_ppm,
                                       Ticks min_cost, Ticks max_cost) {
  std::vector<StaticEdge> edges;
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = 0; v < nodes; ++v) {
      if (rng.chance(edge_ppm)) {
        edges.push_back({u, v, rng.uniform(min_cost, max_cost)});
      }
    }
  }
  return StaticGraph(nodes, std::move(edges));
}

inline Graph constant_graph(const StaticGraph& sg) {
  std::vector<Edge> edges;
  for (const auto& e : sg.edges()) edges.push_back({e.from, e.to, TravelTimeFunction::constant(e.cost)});
  return Graph(sg.node_count(), std::move(edges));
}

/// Generator settings for the FIFO soundness suites: at most 8 nodes and 20 edges,
/// travel times in [1, 30].
inline RandomGraphSpec small_fifo_spec(std::uint64_t seed, bool fifo = true,
                                       std::size_t max_nodes = 8) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  RandomGraphSpec spec;
  spec.nodes = static_cast<std::size_t>(rng.uniform(2, static_cast<Ticks>(max_nodes)));
  spec.edge_prob = 0.35;
  spec.fifo = fifo;
  spec.max_value = 30;
  spec.breakpoints = 4;
  spec.seed = seed;
  spec.max_edges = 20;
  return spec;
}

}  // namespace tdroute::testing

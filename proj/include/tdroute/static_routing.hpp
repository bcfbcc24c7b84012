#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tdroute/graph.hpp"

namespace tdroute {

/// A path x_0 .. x_k with its edges; length is the sum of edge costs.
struct PathResult {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  Ticks length = 0;
};

struct StaticParent {
  NodeId node;
  EdgeId edge;
};

/// Single-source result. An absent distance means unreachable.
struct StaticDistances {
  NodeId source = 0;
  std::vector<std::optional<Ticks>> dist;
  std::vector<std::optional<StaticParent>> parent;

  std::optional<PathResult> path_to(NodeId target) const;
};

/// Optional instrumentation for label-setting searches.
struct SearchTrace {
  struct Update {
    NodeId node;
    std::optional<Ticks> before;
    Ticks after;
  };
  std::vector<NodeId> settled;
  std::vector<Update> updates;
  std::size_t relaxations = 0;
};

class NegativeCostError : public std::invalid_argument {
 public:
  explicit NegativeCostError(EdgeId edge)
      : std::invalid_argument("edge " + std::to_string(edge) + " has a negative cost"),
        edge_(edge) {}
  EdgeId edge() const { return edge_; }

 private:
  EdgeId edge_;
};

class NegativeCycleError : public std::runtime_error {
 public:
  NegativeCycleError(std::vector<NodeId> nodes, std::vector<EdgeId> edges)
      : std::runtime_error("negative cycle reachable from source"),
        nodes_(std::move(nodes)),
        edges_(std::move(edges)) {}
  /// Cycle as a closed node sequence (first == last).
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<EdgeId>& edges() const { return edges_; }

 private:
  std::vector<NodeId> nodes_;
  std::vector<EdgeId> edges_;
};

/// Label-setting search; each node is settled at most once. Equal keys are
/// broken by the smaller NodeId. Throws NegativeCostError.
StaticDistances dijkstra(const StaticGraph& g, NodeId source, SearchTrace* trace = nullptr);

/// At most |V|-1 relaxation rounds plus a detection round. Throws
/// NegativeCycleError when a negative cycle is reachable from source.
StaticDistances bellman_ford(const StaticGraph& g, NodeId source);

/// A* keyed by d(u) + h(u), where h is a per-node table with h(target) = 0.
/// Optimal when h is admissible and consistent. Returns nullopt when the
/// target is unreachable.
std::optional<PathResult> astar(const StaticGraph& g, NodeId source, NodeId target,
                                std::span<const Ticks> heuristic, SearchTrace* trace = nullptr);

/// Forward search on g and backward search on the reversed graph. Stops once
/// the two frontier minima sum to at least the best meeting length.
std::optional<PathResult> bidirectional_dijkstra(const StaticGraph& g, NodeId source,
                                                 NodeId target);

struct HeuristicReport {
  bool admissible = true;
  bool consistent = true;
  std::vector<NodeId> overestimating_nodes;
  std::vector<EdgeId> inconsistent_edges;
};

/// Admissibility against reverse-Dijkstra distances to target, and
/// consistency h(u) <= c(uv) + h(v) on every edge.
HeuristicReport check_heuristic(const StaticGraph& g, NodeId target,
                                std::span<const Ticks> heuristic);

}  // namespace tdroute

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdroute/time.hpp"
#include "tdroute/travel_time.hpp"

namespace tdroute {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  TravelTimeFunction cost;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct FifoViolation {
  EdgeId edge = 0;
  FifoWitness witness;
};

/// Immutable directed graph with a travel-time function per edge.
///
/// Parallel edges and self-loops are allowed. Edges whose endpoints fall
/// outside [0, node_count) are kept for validate_graph() to report but are
/// not indexed, so no search ever follows them. The per-edge FIFO status is
/// computed once at construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<std::string> names = {},
        Ticks tick = 1);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(NodeId v) const;
  std::span<const EdgeId> in_edges(NodeId v) const;

  const std::string& name(NodeId v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<NodeId> find_node(std::string_view name) const;

  /// Abstract time units per tick; metadata carried through file I/O.
  Ticks tick() const { return tick_; }

  bool is_fifo() const { return fifo_violations_.empty(); }
  std::span<const FifoViolation> fifo_violations() const { return fifo_violations_; }
  bool has_negative_duration() const { return has_negative_duration_; }

  /// Sum over edges of the maximum travel time; sizes default horizons.
  Ticks total_max_travel_time() const { return total_max_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ && a.names_ == b.names_ &&
           a.tick_ == b.tick_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  Ticks tick_ = 1;

  // CSR adjacency.
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<EdgeId> out_ids_, in_ids_;

  std::vector<FifoViolation> fifo_violations_;
  bool has_negative_duration_ = false;
  Ticks total_max_ = 0;
};

struct ValidationIssue {
  enum class Kind { kEndpointOutOfRange, kInvalidProfile, kNegativeDuration, kBadNames, kBadTick };
  Kind kind;
  std::optional<EdgeId> edge;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(ValidationIssue::Kind kind) const;
};

ValidationReport validate_graph(const Graph& g);

/// Time-independent view used by the classic algorithms. Costs are signed so
/// that Bellman-Ford can be exercised with negative edges.
struct StaticEdge {
  NodeId from = 0;
  NodeId to = 0;
  Ticks cost = 0;
};

class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::size_t node_count, std::vector<StaticEdge> edges);

  /// Every edge cost frozen at departure time t.
  static StaticGraph at_departure(const Graph& g, TimePoint t);
  /// Every edge cost replaced by its free-flow (minimum) travel time.
  static StaticGraph lower_bounds(const Graph& g);

  /// Same edge ids, every edge reversed.
  StaticGraph reversed() const;

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const StaticEdge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const StaticEdge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(NodeId v) const;

  bool has_negative_cost() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<StaticEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> ids_;
};

}  // namespace tdroute

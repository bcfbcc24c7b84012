#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tdroute/graph.hpp"

namespace tdroute {

struct TdQuery {
  NodeId source = 0;
  std::optional<NodeId> target;
  TimePoint t0;
};

struct TdParent {
  NodeId node;
  EdgeId edge;
  TimePoint depart;
};

struct TdStats {
  std::size_t settled = 0;
  std::size_t relaxations = 0;
};

/// Labels of a time-dependent search: arrival[v] is the earliest arrival
/// found at v when leaving the source at t0.
struct ArrivalTimes {
  NodeId source = 0;
  TimePoint t0;
  std::vector<std::optional<TimePoint>> arrival;
  std::vector<std::optional<TdParent>> parent;
  TdStats stats;
};

struct EdgeEvent {
  EdgeId edge;
  TimePoint depart;
  TimePoint arrive;

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

struct RouteResult {
  std::vector<NodeId> nodes;
  std::vector<EdgeEvent> edge_events;
  TimePoint arrival;
};

class NonFifoEdgeError : public std::runtime_error {
 public:
  NonFifoEdgeError(EdgeId edge, FifoWitness witness)
      : std::runtime_error("edge " + std::to_string(edge) + " violates FIFO"),
        edge_(edge),
        witness_(witness) {}
  EdgeId edge() const { return edge_; }
  FifoReport report() const { return FifoReport{false, witness_}; }

 private:
  EdgeId edge_;
  FifoWitness witness_;
};

class NegativeDurationError : public std::invalid_argument {
 public:
  NegativeDurationError() : std::invalid_argument("graph has a negative travel time") {}
};

/// Settle-once search with relaxation d_v <- min(d_v, d_u + c(uv, d_u)).
///
/// This is the direct time-dependent extension of Bellman's equations. It is
/// NOT sound on graphs with non-FIFO edges: on such inputs it may report an
/// arrival later than the true fastest one. Kept as a reproducible baseline.
/// With a target set, the search stops once the target is settled.
ArrivalTimes naive_td_dijkstra(const Graph& g, const TdQuery& q);

/// Same search, exact under FIFO. Throws NonFifoEdgeError naming the first
/// offending edge, or NegativeDurationError.
ArrivalTimes td_dijkstra_fifo(const Graph& g, const TdQuery& q);

/// A* on a FIFO graph; h(u) is the free-flow distance from u to the target.
/// Requires q.target. Returns nullopt when the target is unreachable.
std::optional<RouteResult> td_astar(const Graph& g, const TdQuery& q, TdStats* stats = nullptr);

/// Walks parent links back from target. Returns nullopt when unreached.
std::optional<RouteResult> extract_route(const ArrivalTimes& a, NodeId target);

/// Throws NonFifoEdgeError / NegativeDurationError when g is unfit for the
/// FIFO algorithms.
void require_fifo(const Graph& g);

}  // namespace tdroute

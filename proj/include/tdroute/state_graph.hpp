#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdroute/graph.hpp"
#include "tdroute/td_routing.hpp"

namespace tdroute {

/// A (node, time) pair. Ordered by time first, then node.
struct State {
  NodeId node = 0;
  TimePoint time;

  friend constexpr bool operator==(const State&, const State&) = default;
  friend constexpr auto operator<=>(const State& a, const State& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    return a.node <=> b.node;
  }
};

/// Edge of the state-transition graph. `via` is absent for a one-tick wait.
struct Transition {
  State from;
  State to;
  std::optional<EdgeId> via;
  Duration cost;
};

struct ExpandStats {
  std::size_t state_count = 0;
  std::size_t transition_count = 0;
  bool truncated = false;
  /// Earliest time of a state discarded by the horizon or the state cap.
  std::optional<TimePoint> earliest_dropped;
};

struct ExpandOptions {
  bool allow_wait = false;
  /// Latest admissible state time; defaults to default_horizon().
  std::optional<TimePoint> horizon;
  std::size_t max_states = 1'000'000;
  /// When set, states are processed in time order and expansion stops at the
  /// earliest arrival at the target: non-target states at or after that time
  /// are dropped, and target states are terminal.
  std::optional<NodeId> target;
};

struct StateGraph {
  State initial;
  /// Sorted by (time, node).
  std::vector<State> states;
  /// Sorted by (from, to, via).
  std::vector<Transition> transitions;
  ExpandStats stats;

  std::optional<std::size_t> index_of(State s) const;
};

/// t0 + 10 * (sum over edges of the maximum travel time).
TimePoint default_horizon(const Graph& g, TimePoint t0);

/// Reachable closure from (source, t0) under the given caps.
StateGraph expand(const Graph& g, NodeId source, TimePoint t0, const ExpandOptions& opts = {});

enum class SolveStatus { kFound, kUnreachable, kTruncated };

const char* to_string(SolveStatus status);

struct StateGraphSolution {
  SolveStatus status = SolveStatus::kUnreachable;
  std::optional<RouteResult> route;
  ExpandStats stats;
};

/// Exact fastest path for arbitrary (including non-FIFO) travel times:
/// static Dijkstra over the target-directed state-transition graph. The
/// target in q is required; opts.target is overridden by it.
StateGraphSolution solve_via_state_graph(const Graph& g, const TdQuery& q,
                                         ExpandOptions opts = {});

/// Nodes s, u, f: s->u and u->s cost 1, s->f costs 2k before time k and 1
/// from time k on. Throws std::invalid_argument for k < 1.
Graph pseudo_poly_family(int k);

/// Graphviz text: one node per state labelled "name,time" and one edge per
/// transition labelled with its cost. Node ids fall back to numbers when
/// names is empty.
std::string export_dot(const StateGraph& sg, std::span<const std::string> names = {});

}  // namespace tdroute

#include "tdroute/oracle.hpp"

#include <map>
#include <tuple>

namespace tdroute {

namespace {

void guard_size(std::size_t node_count, std::size_t max_nodes) {
  if (node_count > max_nodes) {
    throw TooLargeError("graph has " + std::to_string(node_count) +
                        " nodes; brute force is limited to " + std::to_string(max_nodes));
  }
}

std::optional<TimePoint> checked_arrival(TimePoint t, Duration d) {
  try {
    return t + d;
  } catch (const TimeRangeError&) {
    return std::nullopt;
  }
}

struct WalkConfig {
  NodeId node;
  Ticks time;
  Ticks waited;

  friend auto operator<=>(const WalkConfig&, const WalkConfig&) = default;
};

OracleResult enumerate_walks(const Graph& g, NodeId s, NodeId f, TimePoint t0, TimePoint horizon,
                             bool allow_wait, Ticks max_wait) {
  OracleResult result;
  // config -> predecessor config; the root maps to itself.
  std::map<WalkConfig, WalkConfig> seen;
  std::vector<WalkConfig> stack;
  std::optional<WalkConfig> best;

  const WalkConfig root{s, t0.ticks, 0};
  seen.emplace(root, root);
  stack.push_back(root);
  auto push = [&](const WalkConfig& from, const WalkConfig& to) {
    if (seen.emplace(to, from).second) stack.push_back(to);
  };

  while (!stack.empty()) {
    const WalkConfig c = stack.back();
    stack.pop_back();
    // Travel times are non-negative: nothing after `best` can beat it.
    if (best && c.time >= best->time) continue;
    ++result.explored_count;
    if (c.node == f) {
      best = c;
      continue;
    }
    for (const Edge& e : g.edges()) {
      if (e.from != c.node || e.to >= g.node_count()) continue;
      const auto arrive = checked_arrival(TimePoint{c.time}, evaluate(e.cost, TimePoint{c.time}));
      if (!arrive || *arrive > horizon) continue;
      push(c, WalkConfig{e.to, arrive->ticks, 0});
    }
    if (allow_wait && c.waited < max_wait && c.time < horizon.ticks) {
      push(c, WalkConfig{c.node, c.time + 1, c.waited + 1});
    }
  }

  if (best) {
    result.arrival = TimePoint{best->time};
    std::vector<NodeId> nodes;
    // Configs with waited > 0 were entered by waiting, every other one by
    // traversing an edge (or is the root).
    WalkConfig c = *best;
    for (;;) {
      if (c.waited == 0) nodes.push_back(c.node);
      const WalkConfig prev = seen.at(c);
      if (prev == c) break;
      c = prev;
    }
    result.path = std::vector<NodeId>(nodes.rbegin(), nodes.rend());
  }
  return result;
}

struct SimplePathSearch {
  const Graph& g;
  NodeId target;
  TimePoint horizon;
  bool allow_wait;
  Ticks max_wait;

  std::vector<bool> on_path;
  std::vector<NodeId> path;
  OracleResult result;

  void visit(NodeId v, Ticks time) {
    if (result.arrival && time >= result.arrival->ticks) return;
    ++result.explored_count;
    if (v == target) {
      result.arrival = TimePoint{time};
      result.path = path;
      return;
    }
    const Ticks waits = allow_wait ? std::min(max_wait, horizon.ticks - time) : 0;
    for (Ticks w = 0; w <= waits; ++w) {
      const TimePoint depart{time + w};
      for (const Edge& e : g.edges()) {
        if (e.from != v || e.to >= g.node_count() || on_path[e.to]) continue;
        const auto arrive = checked_arrival(depart, evaluate(e.cost, depart));
        if (!arrive || *arrive > horizon) continue;
        on_path[e.to] = true;
        path.push_back(e.to);
        visit(e.to, arrive->ticks);
        path.pop_back();
        on_path[e.to] = false;
      }
    }
  }
};

}  // namespace

OracleResult brute_force_fastest(const Graph& g, NodeId s, NodeId f, TimePoint t0,
                                 const OracleOptions& opts) {
  guard_size(g.node_count(), opts.max_nodes);
  Ticks span = 0;
  if (__builtin_mul_overflow(g.total_max_travel_time(), Ticks{10}, &span)) span = INT64_MAX;
  const TimePoint horizon =
      opts.horizon.value_or(checked_arrival(t0, Duration{span}).value_or(TimePoint{INT64_MAX}));
  const Ticks max_wait = opts.max_wait_ticks.value_or(horizon.ticks - t0.ticks);

  OracleResult result;
  if (opts.mode == OracleMode::kWalks) {
    result = enumerate_walks(g, s, f, t0, horizon, opts.allow_wait, max_wait);
  } else {
    SimplePathSearch search{g, f, horizon, opts.allow_wait, max_wait,
                            std::vector<bool>(g.node_count(), false), {s}, {}};
    search.on_path[s] = true;
    search.visit(s, t0.ticks);
    result = std::move(search.result);
  }
  result.notes = std::string(opts.mode == OracleMode::kWalks ? "walks" : "simple paths") +
                 ", horizon " + std::to_string(horizon.ticks) +
                 (opts.allow_wait ? ", max wait " + std::to_string(max_wait) : ", no waiting");
  return result;
}

OracleResult brute_force_static(const StaticGraph& g, NodeId s, NodeId f, std::size_t max_nodes) {
  guard_size(g.node_count(), max_nodes);
  OracleResult result;
  std::vector<bool> on_path(g.node_count(), false);
  std::vector<NodeId> path{s};
  std::optional<Ticks> best;

  auto visit = [&](auto&& self, NodeId v, Ticks length) -> void {
    ++result.explored_count;
    if (v == f) {
      if (!best || length < *best) {
        best = length;
        result.path = path;
      }
      return;
    }
    for (const StaticEdge& e : g.edges()) {
      if (e.from != v || e.to >= g.node_count() || on_path[e.to]) continue;
      on_path[e.to] = true;
      path.push_back(e.to);
      self(self, e.to, length + e.cost);
      path.pop_back();
      on_path[e.to] = false;
    }
  };
  on_path[s] = true;
  visit(visit, s, 0);
  if (best) result.arrival = TimePoint{*best};
  result.notes = "simple paths";
  return result;
}

}  // namespace tdroute

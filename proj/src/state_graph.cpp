#include "tdroute/state_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "tdroute/static_routing.hpp"

namespace tdroute {

namespace {

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    return std::hash<Ticks>{}(s.time.ticks) * 1000003u ^ std::hash<NodeId>{}(s.node);
  }
};

bool reachable(const Graph& g, NodeId source, NodeId target) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (u == target) return true;
    for (EdgeId id : g.out_edges(u)) {
      const NodeId v = g.edge(id).to;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace

std::optional<std::size_t> StateGraph::index_of(State s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

TimePoint default_horizon(const Graph& g, TimePoint t0) {
  const Ticks total = g.total_max_travel_time();
  Ticks span = 0;
  if (__builtin_mul_overflow(total, Ticks{10}, &span)) span = INT64_MAX;
  Ticks out = 0;
  if (__builtin_add_overflow(t0.ticks, span, &out)) out = INT64_MAX;
  return TimePoint{out};
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kFound:
      return "found";
    case SolveStatus::kUnreachable:
      return "unreachable";
    case SolveStatus::kTruncated:
      return "truncated";
  }
  return "?";
}

StateGraph expand(const Graph& g, NodeId source, TimePoint t0, const ExpandOptions& opts) {
  if (opts.max_states == 0) throw std::invalid_argument("max_states must be positive");
  if (g.has_negative_duration()) throw NegativeDurationError();
  const TimePoint horizon = opts.horizon.value_or(default_horizon(g, t0));
  if (horizon < t0) throw std::invalid_argument("horizon precedes the departure time");

  StateGraph sg;
  sg.initial = State{source, t0};

  std::vector<State> found;
  std::unordered_map<State, std::size_t, StateHash> index;
  std::vector<bool> expanded;
  std::vector<Transition> transitions;

  // Target states sort ahead of other states at equal time.
  using Key = std::tuple<Ticks, int, NodeId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  auto rank = [&](NodeId v) { return opts.target && v == *opts.target ? 0 : 1; };

  auto drop = [&](TimePoint t) {
    sg.stats.truncated = true;
    if (!sg.stats.earliest_dropped || t < *sg.stats.earliest_dropped) sg.stats.earliest_dropped = t;
  };
  auto admit = [&](State s) {
    if (s.time > horizon) {
      drop(s.time);
      return false;
    }
    if (index.contains(s)) return true;
    if (found.size() >= opts.max_states) {
      drop(s.time);
      return false;
    }
    index.emplace(s, found.size());
    found.push_back(s);
    expanded.push_back(false);
    queue.push({s.time.ticks, rank(s.node), s.node});
    return true;
  };
  auto step = [&](State from, NodeId to, Duration cost, std::optional<EdgeId> via) {
    TimePoint arrive;
    try {
      arrive = from.time + cost;
    } catch (const TimeRangeError&) {
      drop(TimePoint{INT64_MAX});
      return;
    }
    const State next{to, arrive};
    if (admit(next)) transitions.push_back({from, next, via, cost});
  };

  admit(sg.initial);
  while (!queue.empty()) {
    const auto [t, r, v] = queue.top();
    queue.pop();
    const State s{v, TimePoint{t}};
    if (opts.target && v == *opts.target) break;
    expanded[index.at(s)] = true;
    for (EdgeId id : g.out_edges(v)) {
      const Edge& e = g.edge(id);
      step(s, e.to, evaluate(e.cost, s.time), id);
    }
    if (opts.allow_wait) step(s, v, Duration{1}, std::nullopt);
  }

  std::vector<bool> keep(found.size(), true);
  if (opts.target) {
    for (std::size_t i = 0; i < found.size(); ++i) {
      keep[i] = expanded[i] || found[i].node == *opts.target;
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (keep[i]) sg.states.push_back(found[i]);
  }
  for (const auto& tr : transitions) {
    if (keep[index.at(tr.from)] && keep[index.at(tr.to)]) sg.transitions.push_back(tr);
  }
  std::sort(sg.states.begin(), sg.states.end());
  std::sort(sg.transitions.begin(), sg.transitions.end(),
            [](const Transition& a, const Transition& b) {
              return std::tie(a.from, a.to, a.via) < std::tie(b.from, b.to, b.via);
            });
  sg.stats.state_count = sg.states.size();
  sg.stats.transition_count = sg.transitions.size();
  return sg;
}

StateGraphSolution solve_via_state_graph(const Graph& g, const TdQuery& q, ExpandOptions opts) {
  if (!q.target) throw std::invalid_argument("state-graph solve requires a target");
  const NodeId target = *q.target;
  StateGraphSolution out;
  if (g.has_negative_duration()) throw NegativeDurationError();
  if (!reachable(g, q.source, target)) {
    out.status = SolveStatus::kUnreachable;
    return out;
  }

  opts.target = target;
  const StateGraph sg = expand(g, q.source, q.t0, opts);
  out.stats = sg.stats;

  // Costs in the state graph are plain non-negative numbers.
  std::vector<StaticEdge> edges;
  edges.reserve(sg.transitions.size());
  for (const auto& tr : sg.transitions) {
    edges.push_back({static_cast<NodeId>(*sg.index_of(tr.from)),
                     static_cast<NodeId>(*sg.index_of(tr.to)), tr.cost.ticks});
  }
  const StaticGraph static_states(sg.states.size(), std::move(edges));
  const NodeId start = static_cast<NodeId>(*sg.index_of(sg.initial));
  const StaticDistances dist = dijkstra(static_states, start);

  std::optional<NodeId> best;
  for (NodeId i = 0; i < sg.states.size(); ++i) {
    if (sg.states[i].node != target || !dist.dist[i]) continue;
    if (!best || sg.states[i].time < sg.states[*best].time) best = i;
  }

  const auto& dropped = sg.stats.earliest_dropped;
  if (!best) {
    out.status = sg.stats.truncated ? SolveStatus::kTruncated : SolveStatus::kUnreachable;
    return out;
  }
  if (dropped && *dropped < sg.states[*best].time) {
    out.status = SolveStatus::kTruncated;
    return out;
  }

  const PathResult path = *dist.path_to(*best);
  RouteResult route;
  route.nodes.push_back(q.source);
  for (EdgeId id : path.edges) {
    const Transition& tr = sg.transitions[id];
    if (!tr.via) continue;
    route.nodes.push_back(tr.to.node);
    route.edge_events.push_back({*tr.via, tr.from.time, tr.to.time});
  }
  route.arrival = sg.states[*best].time;
  out.status = SolveStatus::kFound;
  out.route = std::move(route);
  return out;
}

Graph pseudo_poly_family(int k) {
  if (k < 1) throw std::invalid_argument("pseudo_poly_family requires k >= 1");
  std::vector<Edge> edges{
      {0, 1, TravelTimeFunction::constant(1)},
      {1, 0, TravelTimeFunction::constant(1)},
      {0, 2, TravelTimeFunction::piecewise_constant({{0, 2 * Ticks{k}}, {Ticks{k}, 1}})},
  };
  return Graph(3, std::move(edges), {"s", "u", "f"});
}

std::string export_dot(const StateGraph& sg, std::span<const std::string> names) {
  auto label = [&](const State& s) {
    std::string node = s.node < names.size() ? names[s.node] : std::to_string(s.node);
    return "\"" + node + "," + std::to_string(s.time.ticks) + "\"";
  };
  std::ostringstream out;
  out << "digraph states {\n  rankdir=LR;\n";
  for (const auto& s : sg.states) out << "  " << label(s) << ";\n";
  for (const auto& tr : sg.transitions) {
    out << "  " << label(tr.from) << " -> " << label(tr.to) << " [label=\"" << tr.cost.ticks
        << "\"" << (tr.via ? "" : ", style=dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tdroute

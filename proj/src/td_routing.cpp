#include "tdroute/td_routing.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "tdroute/static_routing.hpp"

namespace tdroute {

namespace {

using Entry = std::pair<Ticks, NodeId>;
using MinQueue = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

ArrivalTimes label_setting(const Graph& g, const TdQuery& q) {
  if (g.has_negative_duration()) throw NegativeDurationError();
  const std::size_t n = g.node_count();
  ArrivalTimes out{q.source, q.t0, std::vector<std::optional<TimePoint>>(n),
                   std::vector<std::optional<TdParent>>(n), {}};
  std::vector<bool> settled(n, false);
  MinQueue queue;

  out.arrival[q.source] = q.t0;
  queue.push({q.t0.ticks, q.source});
  while (!queue.empty()) {
    const auto [key, u] = queue.top();
    queue.pop();
    if (settled[u] || key != out.arrival[u]->ticks) continue;
    settled[u] = true;
    ++out.stats.settled;
    if (q.target && u == *q.target) break;

    const TimePoint depart = *out.arrival[u];
    for (EdgeId id : g.out_edges(u)) {
      const Edge& e = g.edge(id);
      ++out.stats.relaxations;
      const TimePoint arrive = depart + evaluate(e.cost, depart);
      if (!out.arrival[e.to] || arrive < *out.arrival[e.to]) {
        out.arrival[e.to] = arrive;
        out.parent[e.to] = TdParent{u, id, depart};
        queue.push({arrive.ticks, e.to});
      }
    }
  }
  return out;
}

}  // namespace

void require_fifo(const Graph& g) {
  if (g.has_negative_duration()) throw NegativeDurationError();
  if (!g.is_fifo()) {
    const FifoViolation& v = g.fifo_violations().front();
    throw NonFifoEdgeError(v.edge, v.witness);
  }
}

ArrivalTimes naive_td_dijkstra(const Graph& g, const TdQuery& q) { return label_setting(g, q); }

ArrivalTimes td_dijkstra_fifo(const Graph& g, const TdQuery& q) {
  require_fifo(g);
  return label_setting(g, q);
}

std::optional<RouteResult> td_astar(const Graph& g, const TdQuery& q, TdStats* stats) {
  require_fifo(g);
  if (!q.target) throw std::invalid_argument("td_astar requires a target");
  const NodeId target = *q.target;
  const std::size_t n = g.node_count();

  // Free-flow distances to the target never exceed any realised travel time.
  const StaticDistances to_target = dijkstra(StaticGraph::lower_bounds(g).reversed(), target);
  if (!to_target.dist[q.source]) return std::nullopt;
  auto h = [&](NodeId v) { return *to_target.dist[v]; };

  ArrivalTimes labels{q.source, q.t0, std::vector<std::optional<TimePoint>>(n),
                      std::vector<std::optional<TdParent>>(n), {}};
  std::vector<bool> closed(n, false);
  MinQueue queue;
  labels.arrival[q.source] = q.t0;
  queue.push({q.t0.ticks + h(q.source), q.source});

  while (!queue.empty()) {
    const auto [key, u] = queue.top();
    queue.pop();
    if (closed[u] || key != labels.arrival[u]->ticks + h(u)) continue;
    closed[u] = true;
    ++labels.stats.settled;
    if (u == target) break;

    const TimePoint depart = *labels.arrival[u];
    for (EdgeId id : g.out_edges(u)) {
      const Edge& e = g.edge(id);
      // Nodes that cannot reach the target carry no heuristic and are skipped.
      if (closed[e.to] || !to_target.dist[e.to]) continue;
      ++labels.stats.relaxations;
      const TimePoint arrive = depart + evaluate(e.cost, depart);
      if (!labels.arrival[e.to] || arrive < *labels.arrival[e.to]) {
        labels.arrival[e.to] = arrive;
        labels.parent[e.to] = TdParent{u, id, depart};
        queue.push({arrive.ticks + h(e.to), e.to});
      }
    }
  }
  if (stats) *stats = labels.stats;
  return extract_route(labels, target);
}

std::optional<RouteResult> extract_route(const ArrivalTimes& a, NodeId target) {
  if (target >= a.arrival.size() || !a.arrival[target]) return std::nullopt;
  RouteResult route;
  route.arrival = *a.arrival[target];
  NodeId v = target;
  route.nodes.push_back(v);
  while (v != a.source) {
    const TdParent& p = *a.parent[v];
    route.edge_events.push_back({p.edge, p.depart, *a.arrival[v]});
    v = p.node;
    route.nodes.push_back(v);
  }
  std::reverse(route.nodes.begin(), route.nodes.end());
  std::reverse(route.edge_events.begin(), route.edge_events.end());
  return route;
}

}  // namespace tdroute

#include "tdroute/static_routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace tdroute {

namespace {

using Entry = std::pair<Ticks, NodeId>;
using MinQueue = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

void require_non_negative(const StaticGraph& g) {
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (g.edge(id).cost < 0) throw NegativeCostError(id);
  }
}

void record_update(SearchTrace* trace, NodeId v, std::optional<Ticks> before, Ticks after) {
  if (trace) trace->updates.push_back({v, before, after});
}

PathResult walk_parents(const std::vector<std::optional<StaticParent>>& parent,
                        const StaticGraph& g, NodeId source, NodeId target) {
  PathResult path;
  NodeId v = target;
  path.nodes.push_back(v);
  while (v != source) {
    const StaticParent& p = *parent[v];
    path.edges.push_back(p.edge);
    path.length += g.edge(p.edge).cost;
    v = p.node;
    path.nodes.push_back(v);
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

}  // namespace

std::optional<PathResult> StaticDistances::path_to(NodeId target) const {
  if (target >= dist.size() || !dist[target]) return std::nullopt;
  PathResult path;
  path.length = *dist[target];
  NodeId v = target;
  path.nodes.push_back(v);
  while (v != source) {
    const StaticParent& p = *parent[v];
    path.edges.push_back(p.edge);
    v = p.node;
    path.nodes.push_back(v);
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

StaticDistances dijkstra(const StaticGraph& g, NodeId source, SearchTrace* trace) {
  require_non_negative(g);
  const std::size_t n = g.node_count();
  StaticDistances out{source, std::vector<std::optional<Ticks>>(n),
                      std::vector<std::optional<StaticParent>>(n)};
  std::vector<bool> settled(n, false);
  MinQueue queue;

  out.dist[source] = 0;
  record_update(trace, source, std::nullopt, 0);
  queue.push({0, source});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u] || d != *out.dist[u]) continue;
    settled[u] = true;
    if (trace) trace->settled.push_back(u);
    for (EdgeId id : g.out_edges(u)) {
      const StaticEdge& e = g.edge(id);
      if (trace) ++trace->relaxations;
      const Ticks candidate = d + e.cost;
      if (!out.dist[e.to] || candidate < *out.dist[e.to]) {
        record_update(trace, e.to, out.dist[e.to], candidate);
        out.dist[e.to] = candidate;
        out.parent[e.to] = StaticParent{u, id};
        queue.push({candidate, e.to});
      }
    }
  }
  return out;
}

StaticDistances bellman_ford(const StaticGraph& g, NodeId source) {
  const std::size_t n = g.node_count();
  StaticDistances out{source, std::vector<std::optional<Ticks>>(n),
                      std::vector<std::optional<StaticParent>>(n)};
  out.dist[source] = 0;

  auto relax = [&](EdgeId id) {
    const StaticEdge& e = g.edge(id);
    if (e.from >= n || e.to >= n || !out.dist[e.from]) return false;
    const Ticks candidate = *out.dist[e.from] + e.cost;
    if (out.dist[e.to] && candidate >= *out.dist[e.to]) return false;
    out.dist[e.to] = candidate;
    out.parent[e.to] = StaticParent{e.from, id};
    return true;
  };

  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (EdgeId id = 0; id < g.edge_count(); ++id) changed |= relax(id);
    if (!changed) return out;
  }

  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!relax(id)) continue;
    // Walking n parent links from an updated node lands inside the cycle.
    NodeId v = g.edge(id).to;
    for (std::size_t i = 0; i < n; ++i) v = out.parent[v]->node;
    std::vector<NodeId> nodes{v};
    std::vector<EdgeId> edges;
    NodeId x = v;
    do {
      edges.push_back(out.parent[x]->edge);
      x = out.parent[x]->node;
      nodes.push_back(x);
    } while (x != v);
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(edges.begin(), edges.end());
    throw NegativeCycleError(std::move(nodes), std::move(edges));
  }
  return out;
}

std::optional<PathResult> astar(const StaticGraph& g, NodeId source, NodeId target,
                                std::span<const Ticks> heuristic, SearchTrace* trace) {
  require_non_negative(g);
  const std::size_t n = g.node_count();
  std::vector<std::optional<Ticks>> dist(n);
  std::vector<std::optional<StaticParent>> parent(n);
  std::vector<bool> closed(n, false);
  MinQueue queue;

  dist[source] = 0;
  record_update(trace, source, std::nullopt, 0);
  queue.push({heuristic[source], source});
  while (!queue.empty()) {
    const auto [key, u] = queue.top();
    queue.pop();
    if (closed[u] || key != *dist[u] + heuristic[u]) continue;
    closed[u] = true;
    if (trace) trace->settled.push_back(u);
    if (u == target) return walk_parents(parent, g, source, target);
    for (EdgeId id : g.out_edges(u)) {
      const StaticEdge& e = g.edge(id);
      if (closed[e.to]) continue;
      if (trace) ++trace->relaxations;
      const Ticks candidate = *dist[u] + e.cost;
      if (!dist[e.to] || candidate < *dist[e.to]) {
        record_update(trace, e.to, dist[e.to], candidate);
        dist[e.to] = candidate;
        parent[e.to] = StaticParent{u, id};
        queue.push({candidate + heuristic[e.to], e.to});
      }
    }
  }
  return std::nullopt;
}

std::optional<PathResult> bidirectional_dijkstra(const StaticGraph& g, NodeId source,
                                                 NodeId target) {
  require_non_negative(g);
  if (source == target) return PathResult{{source}, {}, 0};

  const std::size_t n = g.node_count();
  const StaticGraph reverse = g.reversed();

  struct Side {
    const StaticGraph* graph;
    std::vector<std::optional<Ticks>> dist;
    std::vector<std::optional<StaticParent>> parent;
    std::vector<bool> settled;
    MinQueue queue;

    std::optional<Ticks> top() {
      while (!queue.empty()) {
        const auto [d, v] = queue.top();
        if (!settled[v] && d == *dist[v]) return d;
        queue.pop();
      }
      return std::nullopt;
    }
  };
  auto make_side = [n](const StaticGraph* graph, NodeId origin) {
    Side side{graph, std::vector<std::optional<Ticks>>(n),
              std::vector<std::optional<StaticParent>>(n), std::vector<bool>(n, false), {}};
    side.dist[origin] = 0;
    side.queue.push({0, origin});
    return side;
  };
  Side fwd = make_side(&g, source);
  Side bwd = make_side(&reverse, target);

  constexpr Ticks kInf = std::numeric_limits<Ticks>::max();
  Ticks best = kInf;
  std::optional<EdgeId> meeting_edge;

  for (;;) {
    const auto top_f = fwd.top();
    const auto top_b = bwd.top();
    if (!top_f || !top_b) break;
    if (best != kInf && *top_f + *top_b >= best) break;

    const bool forward = *top_f <= *top_b;
    Side& side = forward ? fwd : bwd;
    Side& other = forward ? bwd : fwd;
    const NodeId u = side.queue.top().second;
    side.queue.pop();
    side.settled[u] = true;

    for (EdgeId id : side.graph->out_edges(u)) {
      const StaticEdge& e = side.graph->edge(id);
      const Ticks candidate = *side.dist[u] + e.cost;
      if (!side.dist[e.to] || candidate < *side.dist[e.to]) {
        side.dist[e.to] = candidate;
        side.parent[e.to] = StaticParent{u, id};
        side.queue.push({candidate, e.to});
      }
      if (other.dist[e.to] && candidate + *other.dist[e.to] < best) {
        best = candidate + *other.dist[e.to];
        meeting_edge = id;
      }
    }
  }
  if (!meeting_edge) return std::nullopt;

  // Forward half up to the meeting edge's tail, then follow backward parents.
  const StaticEdge& meet = g.edge(*meeting_edge);
  PathResult path;
  if (meet.from == source) {
    path.nodes.push_back(source);
  } else {
    path = walk_parents(fwd.parent, g, source, meet.from);
  }
  path.edges.push_back(*meeting_edge);
  path.length += meet.cost;
  NodeId v = meet.to;
  path.nodes.push_back(v);
  while (v != target) {
    const StaticParent& p = *bwd.parent[v];
    path.edges.push_back(p.edge);
    path.length += g.edge(p.edge).cost;
    v = p.node;
    path.nodes.push_back(v);
  }
  return path;
}

HeuristicReport check_heuristic(const StaticGraph& g, NodeId target,
                                std::span<const Ticks> heuristic) {
  HeuristicReport report;
  const StaticDistances to_target = dijkstra(g.reversed(), target);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (to_target.dist[v] && heuristic[v] > *to_target.dist[v]) {
      report.admissible = false;
      report.overestimating_nodes.push_back(v);
    }
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const StaticEdge& e = g.edge(id);
    if (heuristic[e.from] > e.cost + heuristic[e.to]) {
      report.consistent = false;
      report.inconsistent_edges.push_back(id);
    }
  }
  return report;
}

}  // namespace tdroute

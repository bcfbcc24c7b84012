#include "tdroute/graph.hpp"

#include <algorithm>
#include <set>

#include "tdroute/parallel.hpp"

namespace tdroute {

namespace {

template <typename EdgeT, typename Key>
void build_csr(std::size_t node_count, std::span<const EdgeT> edges, Key key,
               std::vector<std::size_t>& offsets, std::vector<EdgeId>& ids) {
  offsets.assign(node_count + 1, 0);
  for (const auto& e : edges) {
    const NodeId v = key(e);
    if (v < node_count) ++offsets[v + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) offsets[v + 1] += offsets[v];
  ids.assign(offsets.back(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const NodeId v = key(edges[id]);
    if (v < node_count) ids[cursor[v]++] = id;
  }
}

bool endpoints_ok(std::size_t node_count, NodeId from, NodeId to) {
  return from < node_count && to < node_count;
}

}  // namespace

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<std::string> names,
             Ticks tick)
    : node_count_(node_count), edges_(std::move(edges)), names_(std::move(names)), tick_(tick) {
  if (names_.empty()) {
    names_.reserve(node_count_);
    for (std::size_t v = 0; v < node_count_; ++v) names_.push_back(std::to_string(v));
  }
  // Only edges with both endpoints in range are indexed.
  auto from_key = [&](const Edge& e) {
    return endpoints_ok(node_count_, e.from, e.to) ? e.from : static_cast<NodeId>(node_count_);
  };
  auto to_key = [&](const Edge& e) {
    return endpoints_ok(node_count_, e.from, e.to) ? e.to : static_cast<NodeId>(node_count_);
  };
  build_csr<Edge>(node_count_, edges_, from_key, out_offsets_, out_ids_);
  build_csr<Edge>(node_count_, edges_, to_key, in_offsets_, in_ids_);

  fifo_violations_ = par::scan_fifo(edges_);
  for (const auto& e : edges_) {
    if (min_travel_time(e.cost).ticks < 0) has_negative_duration_ = true;
    const Ticks hi = std::max<Ticks>(0, max_travel_time(e.cost).ticks);
    total_max_ = (total_max_ > INT64_MAX - hi) ? INT64_MAX : total_max_ + hi;
  }
}

std::span<const EdgeId> Graph::out_edges(NodeId v) const {
  return std::span<const EdgeId>(out_ids_).subspan(out_offsets_[v],
                                                   out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const EdgeId> Graph::in_edges(NodeId v) const {
  return std::span<const EdgeId>(in_ids_).subspan(in_offsets_[v],
                                                  in_offsets_[v + 1] - in_offsets_[v]);
}

std::optional<NodeId> Graph::find_node(std::string_view name) const {
  for (NodeId v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

bool ValidationReport::has(ValidationIssue::Kind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const ValidationIssue& i) { return i.kind == kind; });
}

ValidationReport validate_graph(const Graph& g) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  if (g.tick() <= 0) report.issues.push_back({Kind::kBadTick, std::nullopt, "tick must be positive"});
  if (g.names().size() != g.node_count()) {
    report.issues.push_back({Kind::kBadNames, std::nullopt, "name count differs from node count"});
  } else {
    std::set<std::string_view> seen;
    for (const auto& n : g.names()) {
      if (!seen.insert(n).second) {
        report.issues.push_back({Kind::kBadNames, std::nullopt, "duplicate node name '" + n + "'"});
      }
    }
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (!endpoints_ok(g.node_count(), e.from, e.to)) {
      report.issues.push_back({Kind::kEndpointOutOfRange, id,
                               "edge " + std::to_string(id) + " endpoint out of range"});
    }
    for (auto& msg : function_issues(e.cost)) {
      const Kind kind =
          msg == "negative travel time" ? Kind::kNegativeDuration : Kind::kInvalidProfile;
      report.issues.push_back({kind, id, "edge " + std::to_string(id) + ": " + msg});
    }
  }
  return report;
}

StaticGraph::StaticGraph(std::size_t node_count, std::vector<StaticEdge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  auto key = [&](const StaticEdge& e) {
    return endpoints_ok(node_count_, e.from, e.to) ? e.from : static_cast<NodeId>(node_count_);
  };
  build_csr<StaticEdge>(node_count_, edges_, key, offsets_, ids_);
}

StaticGraph StaticGraph::at_departure(const Graph& g, TimePoint t) {
  std::vector<StaticEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.from, e.to, evaluate(e.cost, t).ticks});
  return StaticGraph(g.node_count(), std::move(edges));
}

StaticGraph StaticGraph::lower_bounds(const Graph& g) {
  std::vector<StaticEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.from, e.to, min_travel_time(e.cost).ticks});
  return StaticGraph(g.node_count(), std::move(edges));
}

StaticGraph StaticGraph::reversed() const {
  std::vector<StaticEdge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({e.to, e.from, e.cost});
  return StaticGraph(node_count_, std::move(edges));
}

std::span<const EdgeId> StaticGraph::out_edges(NodeId v) const {
  return std::span<const EdgeId>(ids_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool StaticGraph::has_negative_cost() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const StaticEdge& e) { return e.cost < 0; });
}

}  // namespace tdroute

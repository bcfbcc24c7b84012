#include "tdroute/result_document.hpp"

namespace tdroute {

using Json = nlohmann::ordered_json;

Json fifo_violation_json(const Graph& g, const FifoViolation& v) {
  const Edge& e = g.edge(v.edge);
  return Json{{"edge", v.edge},
              {"from", g.name(e.from)},
              {"to", g.name(e.to)},
              {"t1", v.witness.t1.ticks},
              {"t2", v.witness.t2.ticks},
              {"a1", v.witness.a1.ticks},
              {"a2", v.witness.a2.ticks}};
}

ResultDocument::ResultDocument(const Graph& g, std::string graph_label, const TdQuery& q,
                               std::string_view algorithm)
    : graph_(g) {
  doc_["query"] = Json{{"graph", std::move(graph_label)},
                       {"source", g.name(q.source)},
                       {"target", q.target ? Json(g.name(*q.target)) : Json(nullptr)},
                       {"t0", q.t0.ticks}};
  doc_["algorithm"] = algorithm;
  doc_["status"] = "ok";
  doc_["arrival"] = nullptr;
  doc_["length"] = nullptr;
  doc_["nodes"] = Json::array();
  doc_["edge_events"] = Json::array();
  doc_["labels"] = Json::array();
  doc_["stats"] = Json{{"settled", nullptr},
                       {"relaxations", nullptr},
                       {"states", nullptr},
                       {"transitions", nullptr},
                       {"truncated", false}};
  Json violations = Json::array();
  for (const auto& v : g.fifo_violations()) violations.push_back(fifo_violation_json(g, v));
  doc_["fifo"] = Json{{"is_fifo", g.is_fifo()}, {"violations", std::move(violations)}};
}

void ResultDocument::set_route(const RouteResult& route) {
  const Ticks t0 = doc_["query"]["t0"].get<Ticks>();
  doc_["arrival"] = route.arrival.ticks;
  doc_["length"] = route.arrival.ticks - t0;
  Json nodes = Json::array();
  for (NodeId v : route.nodes) nodes.push_back(graph_.name(v));
  doc_["nodes"] = std::move(nodes);
  Json events = Json::array();
  for (const auto& ev : route.edge_events) {
    const Edge& e = graph_.edge(ev.edge);
    events.push_back(Json{{"edge", ev.edge},
                          {"from", graph_.name(e.from)},
                          {"to", graph_.name(e.to)},
                          {"depart", ev.depart.ticks},
                          {"arrive", ev.arrive.ticks}});
  }
  doc_["edge_events"] = std::move(events);
}

void ResultDocument::set_static_path(const PathResult& path, TimePoint t0,
                                     const StaticGraph& view) {
  RouteResult route;
  route.nodes = path.nodes;
  Ticks clock = t0.ticks;
  for (EdgeId id : path.edges) {
    const Ticks next = clock + view.edge(id).cost;
    route.edge_events.push_back({id, TimePoint{clock}, TimePoint{next}});
    clock = next;
  }
  route.arrival = TimePoint{clock};
  set_route(route);
  doc_["length"] = path.length;
}

void ResultDocument::set_labels(const ArrivalTimes& labels) {
  Json out = Json::array();
  for (NodeId v = 0; v < labels.arrival.size(); ++v) {
    if (labels.arrival[v]) out.push_back(Json{{"node", graph_.name(v)}, {"arrival", labels.arrival[v]->ticks}});
  }
  doc_["labels"] = std::move(out);
}

void ResultDocument::set_static_labels(const StaticDistances& dist, TimePoint t0) {
  Json out = Json::array();
  for (NodeId v = 0; v < dist.dist.size(); ++v) {
    if (dist.dist[v]) out.push_back(Json{{"node", graph_.name(v)}, {"arrival", t0.ticks + *dist.dist[v]}});
  }
  doc_["labels"] = std::move(out);
}

void ResultDocument::set_search_stats(std::size_t settled, std::size_t relaxations) {
  doc_["stats"]["settled"] = settled;
  doc_["stats"]["relaxations"] = relaxations;
}

void ResultDocument::set_expand_stats(const ExpandStats& stats) {
  doc_["stats"]["states"] = stats.state_count;
  doc_["stats"]["transitions"] = stats.transition_count;
  doc_["stats"]["truncated"] = stats.truncated;
}

}  // namespace tdroute

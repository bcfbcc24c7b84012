#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "tdroute/graph.hpp"
#include "tdroute/state_graph.hpp"
#include "tdroute/static_routing.hpp"
#include "tdroute/td_routing.hpp"

namespace tdroute {

/// JSON result of one routing query. Keys always appear, in this order:
///
///   query        {graph, source, target, t0}
///   algorithm    name as given on the command line
///   status       "ok" | "unreachable" | "non-fifo" | "truncated"
///   arrival      ticks or null
///   length       arrival - t0 (or static path length) or null
///   nodes        node names along the route
///   edge_events  [{edge, from, to, depart, arrive}]
///   labels       [{node, arrival}] for single-source runs without a target
///   stats        {settled, relaxations, states, transitions, truncated}
///   fifo         {is_fifo, violations: [{edge, from, to, t1, t2, a1, a2}]}
///
/// Every number is an integer tick count.
class ResultDocument {
 public:
  ResultDocument(const Graph& g, std::string graph_label, const TdQuery& q,
                 std::string_view algorithm);

  void set_status(std::string_view status) { doc_["status"] = status; }
  void set_route(const RouteResult& route);
  void set_static_path(const PathResult& path, TimePoint t0, const StaticGraph& view);
  void set_labels(const ArrivalTimes& labels);
  void set_static_labels(const StaticDistances& dist, TimePoint t0);
  void set_search_stats(std::size_t settled, std::size_t relaxations);
  void set_expand_stats(const ExpandStats& stats);

  const nlohmann::ordered_json& json() const { return doc_; }
  /// Two-space indented JSON with a trailing newline.
  std::string dump() const { return doc_.dump(2) + "\n"; }

 private:
  const Graph& graph_;
  nlohmann::ordered_json doc_;
};

nlohmann::ordered_json fifo_violation_json(const Graph& g, const FifoViolation& v);

}  // namespace tdroute

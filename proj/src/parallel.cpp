#include "tdroute/parallel.hpp"

#include <omp.h>

#include <stdexcept>

#include "tdroute/state_graph.hpp"

namespace tdroute {

namespace {

std::vector<FifoViolation> collect(std::span<const FifoReport> reports) {
  std::vector<FifoViolation> out;
  for (EdgeId id = 0; id < reports.size(); ++id) {
    if (!reports[id].is_fifo) out.push_back({id, *reports[id].witness});
  }
  return out;
}

// Never throws; OpenMP regions must not propagate exceptions.
BatchAnswer answer(const Graph& g, const TdQuery& q, BatchAlgorithm algo) noexcept {
  try {
    if (!q.target) return {std::nullopt, "query has no target"};
    std::optional<TimePoint> arrival;
    switch (algo) {
      case BatchAlgorithm::kTdFifo: {
        const auto labels = td_dijkstra_fifo(g, q);
        arrival = labels.arrival[*q.target];
        break;
      }
      case BatchAlgorithm::kTdAstar: {
        if (const auto route = td_astar(g, q)) arrival = route->arrival;
        break;
      }
      case BatchAlgorithm::kStateGraph: {
        const auto solution = solve_via_state_graph(g, q);
        if (solution.status == SolveStatus::kTruncated) return {std::nullopt, "truncated"};
        if (solution.route) arrival = solution.route->arrival;
        break;
      }
    }
    if (!arrival) return {std::nullopt, "unreachable"};
    return {arrival, {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

void check_batch(const Graph& g, BatchAlgorithm algo) {
  if (algo != BatchAlgorithm::kStateGraph) require_fifo(g);
}

}  // namespace

namespace serial {

std::vector<FifoViolation> scan_fifo(std::span<const Edge> edges) {
  std::vector<FifoReport> reports(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) reports[i] = check_fifo(edges[i].cost);
  return collect(reports);
}

std::vector<BatchAnswer> route_batch(const Graph& g, std::span<const TdQuery> queries,
                                     BatchAlgorithm algo) {
  check_batch(g, algo);
  std::vector<BatchAnswer> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) out[i] = answer(g, queries[i], algo);
  return out;
}

}  // namespace serial

namespace par {

std::vector<FifoViolation> scan_fifo(std::span<const Edge> edges) {
  std::vector<FifoReport> reports(edges.size());
  const auto n = static_cast<std::ptrdiff_t>(edges.size());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) reports[i] = check_fifo(edges[i].cost);
  return collect(reports);
}

std::vector<BatchAnswer> route_batch(const Graph& g, std::span<const TdQuery> queries,
                                     BatchAlgorithm algo) {
  check_batch(g, algo);
  std::vector<BatchAnswer> out(queries.size());
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = answer(g, queries[i], algo);
  return out;
}

}  // namespace par

}  // namespace tdroute

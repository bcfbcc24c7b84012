#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdroute/graph.hpp"
#include "tdroute/td_routing.hpp"

namespace tdroute {

/// Data-parallel kernels over independent work items (edges or queries).
/// Each kernel in `par` is OpenMP-parallel; its twin in `serial` is the
/// reference it is tested against. Results are identical and in input order.

enum class BatchAlgorithm { kTdFifo, kTdAstar, kStateGraph };

struct BatchAnswer {
  std::optional<TimePoint> arrival;
  /// Empty on success; otherwise "unreachable", "truncated" or an error text.
  std::string error;

  friend bool operator==(const BatchAnswer&, const BatchAnswer&) = default;
};

namespace serial {

std::vector<FifoViolation> scan_fifo(std::span<const Edge> edges);

/// Every query needs a target. The graph must pass require_fifo() for the
/// FIFO algorithms; that is checked once up front.
std::vector<BatchAnswer> route_batch(const Graph& g, std::span<const TdQuery> queries,
                                     BatchAlgorithm algo);

}  // namespace serial

namespace par {

std::vector<FifoViolation> scan_fifo(std::span<const Edge> edges);

std::vector<BatchAnswer> route_batch(const Graph& g, std::span<const TdQuery> queries,
                                     BatchAlgorithm algo);

}  // namespace par

}  // namespace tdroute

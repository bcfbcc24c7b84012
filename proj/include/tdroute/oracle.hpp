#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdroute/graph.hpp"

namespace tdroute {

/// Brute-force ground truth. Nothing here shares code with the engine's
/// searches; the solvers enumerate explicitly and are only meant for small
/// graphs.

class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OracleMode {
  /// Depth-first enumeration of walks (revisits allowed) up to the horizon.
  kWalks,
  /// Enumeration of simple paths only.
  kSimplePaths,
};

struct OracleOptions {
  OracleMode mode = OracleMode::kWalks;
  bool allow_wait = false;
  /// Longest wait per visit of a node; defaults to the horizon.
  std::optional<Ticks> max_wait_ticks;
  /// Defaults to default_horizon() of the graph.
  std::optional<TimePoint> horizon;
  std::size_t max_nodes = 12;
};

struct OracleResult {
  std::optional<TimePoint> arrival;
  std::optional<std::vector<NodeId>> path;
  std::size_t explored_count = 0;
  std::string notes;
};

/// Earliest arrival at f leaving s at t0, every edge evaluated at its actual
/// departure time. Throws TooLargeError past opts.max_nodes.
OracleResult brute_force_fastest(const Graph& g, NodeId s, NodeId f, TimePoint t0,
                                 const OracleOptions& opts = {});

/// Shortest simple s-f path length; arrival holds the length.
OracleResult brute_force_static(const StaticGraph& g, NodeId s, NodeId f,
                                std::size_t max_nodes = 12);

}  // namespace tdroute

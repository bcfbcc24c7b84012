#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tdroute/graph.hpp"

namespace tdroute {

struct CorpusInstance {
  std::string name;
  Graph graph;
  std::string notes;
};

/// Seeded generator with a portable range mapping, so instances are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  Ticks uniform(Ticks lo, Ticks hi);
  /// True with probability ppm / 1'000'000.
  bool chance(std::uint32_t ppm);

 private:
  std::mt19937_64 engine_;
};

struct RandomGraphSpec {
  std::size_t nodes = 6;
  double edge_prob = 0.3;
  bool fifo = true;
  Ticks max_value = 30;
  /// Upper bound on profile points per time-dependent edge.
  std::size_t breakpoints = 3;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_edges;
};

/// Deterministic random instance. With fifo = true every edge passes
/// check_fifo (rejection sampling per edge); with fifo = false at least one
/// edge is a verified FIFO violator. Travel times lie in [1, max_value].
CorpusInstance gen_random(const RandomGraphSpec& spec);

/// Random function of a random kind; not filtered for FIFO.
TravelTimeFunction random_function(Rng& rng, Ticks min_value, Ticks max_value,
                                   std::size_t max_points, Ticks max_gap = 10);

/// s->u 1, s->v 1, u->v 1, v->f 10 before time 2 and 1 from time 2 on.
Graph fig1_graph();
/// fig1 with v->f replaced by the constant 10.
Graph fig1_fifo_graph();
/// s->a 5, s->b 1, b->a 2.
Graph triangle_graph();

/// "fig1", "fig1-fifo", "fig3-k4", "triangle".
std::vector<CorpusInstance> paper_corpus();

std::optional<CorpusInstance> find_corpus_instance(const std::string& name);

}  // namespace tdroute

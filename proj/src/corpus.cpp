#include "tdroute/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "tdroute/state_graph.hpp"

namespace tdroute {

Ticks Rng::uniform(Ticks lo, Ticks hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<Ticks>(engine_());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<Ticks>(x % range);
}

bool Rng::chance(std::uint32_t ppm) { return uniform(0, 999'999) < static_cast<Ticks>(ppm); }

TravelTimeFunction random_function(Rng& rng, Ticks min_value, Ticks max_value,
                                   std::size_t max_points, Ticks max_gap) {
  const auto kind = rng.uniform(0, 2);
  if (kind == 0 || max_points < 2) return TravelTimeFunction::constant(rng.uniform(min_value, max_value));

  const auto count = static_cast<std::size_t>(rng.uniform(2, static_cast<Ticks>(max_points)));
  std::vector<ProfilePoint> points;
  Ticks at = kind == 1 ? 0 : rng.uniform(0, max_gap);
  for (std::size_t i = 0; i < count; ++i) {
    points.emplace_back(at, rng.uniform(min_value, max_value));
    at += rng.uniform(1, max_gap);
  }
  return kind == 1 ? TravelTimeFunction::piecewise_constant(std::move(points))
                   : TravelTimeFunction::piecewise_linear(std::move(points));
}

CorpusInstance gen_random(const RandomGraphSpec& spec) {
  Rng rng(spec.seed);
  const auto ppm = static_cast<std::uint32_t>(std::lround(std::clamp(spec.edge_prob, 0.0, 1.0) * 1e6));

  auto draw_cost = [&]() {
    if (!spec.fifo) return random_function(rng, 1, spec.max_value, spec.breakpoints);
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto f = random_function(rng, 1, spec.max_value, spec.breakpoints);
      if (check_fifo(f).is_fifo) return f;
    }
    return TravelTimeFunction::constant(rng.uniform(1, spec.max_value));
  };

  std::vector<Edge> edges;
  for (NodeId u = 0; u < spec.nodes; ++u) {
    for (NodeId v = 0; v < spec.nodes; ++v) {
      if (u == v || !rng.chance(ppm)) continue;
      if (spec.max_edges && edges.size() >= *spec.max_edges) continue;
      edges.push_back({u, v, draw_cost()});
    }
  }

  if (!spec.fifo) {
    const bool has_violator = std::any_of(edges.begin(), edges.end(), [](const Edge& e) {
      return !check_fifo(e.cost).is_fifo;
    });
    if (!has_violator) {
      const Ticks high = std::max<Ticks>(spec.max_value, 3);
      const Ticks drop_at = rng.uniform(1, 10);
      auto violator = TravelTimeFunction::piecewise_constant({{0, high}, {drop_at, 1}});
      if (edges.empty()) {
        edges.push_back({0, 1, violator});
      } else {
        edges[static_cast<std::size_t>(rng.uniform(0, static_cast<Ticks>(edges.size()) - 1))].cost =
            violator;
      }
    }
  }

  std::string name = std::string(spec.fifo ? "random-fifo-" : "random-nonfifo-") +
                     std::to_string(spec.seed);
  std::string notes = "gen_random nodes=" + std::to_string(spec.nodes) +
                      " fifo=" + (spec.fifo ? "true" : "false") +
                      " max_value=" + std::to_string(spec.max_value) +
                      " seed=" + std::to_string(spec.seed);
  return {std::move(name), Graph(spec.nodes, std::move(edges)), std::move(notes)};
}

Graph fig1_graph() {
  std::vector<Edge> edges{
      {0, 1, TravelTimeFunction::constant(1)},
      {0, 2, TravelTimeFunction::constant(1)},
      {1, 2, TravelTimeFunction::constant(1)},
      {2, 3, TravelTimeFunction::piecewise_constant({{0, 10}, {2, 1}})},
  };
  return Graph(4, std::move(edges), {"s", "u", "v", "f"});
}

Graph fig1_fifo_graph() {
  const Graph base = fig1_graph();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges[3].cost = TravelTimeFunction::constant(10);
  return Graph(4, std::move(edges), {"s", "u", "v", "f"});
}

Graph triangle_graph() {
  std::vector<Edge> edges{
      {0, 1, TravelTimeFunction::constant(5)},
      {0, 2, TravelTimeFunction::constant(1)},
      {2, 1, TravelTimeFunction::constant(2)},
  };
  return Graph(3, std::move(edges), {"s", "a", "b"});
}

std::vector<CorpusInstance> paper_corpus() {
  std::vector<CorpusInstance> corpus;
  corpus.push_back({"fig1", fig1_graph(),
                    "4-node non-FIFO counterexample: v->f drops from 10 to 1 at time 2"});
  corpus.push_back({"fig1-fifo", fig1_fifo_graph(), "fig1 with v->f held at the constant 10"});
  corpus.push_back({"fig3-k4", pseudo_poly_family(4),
                    "pseudo-polynomial family with k = 4: s->f costs 8 before time 4, then 1"});
  corpus.push_back({"triangle", triangle_graph(), "static triangle; unique shortest s-a path via b"});
  return corpus;
}

std::optional<CorpusInstance> find_corpus_instance(const std::string& name) {
  for (auto& inst : paper_corpus()) {
    if (inst.name == name) return inst;
  }
  return std::nullopt;
}

}  // namespace tdroute

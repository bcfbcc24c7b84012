// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tdroute/cli.hpp"
#include "tdroute/oracle.hpp"
#include "tdroute/state_graph.hpp"
#include "tdroute/static_routing.hpp"
#include "tdroute/td_routing.hpp"

namespace tdroute {
namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kFig1Limit = 1.0;
constexpr double kSweepLimit = 5.0;
constexpr double kFifoSuiteLimit = 30.0;

// Suite sizes.
constexpr int kFifoGraphs = 200;
constexpr int kQueriesPerGraph = 3;
constexpr Ticks kFifoHorizonSpan = 300;
constexpr int kStaticGraphs = 200;
constexpr int kPlantedCycles = 20;
constexpr int kCheckerFunctions = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure reasons for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + " failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string show(const std::optional<TimePoint>& t) {
  return t ? std::to_string(t->ticks) : std::string("none");
}

bool report(int id, const char* title, const Check& c, const std::string& detail) {
  std::cout << "AC" << id << ' ' << (c.ok() ? "PASS" : "FAIL") << "  " << title << "  ["
            << (c.ok() ? detail : c.summary()) << "]\n";
  return c.ok();
}

bool fig1_reproduction() {
  Check c;
  const auto start = Clock::now();
  const Graph g = fig1_graph();
  const NodeId s = *g.find_node("s"), f = *g.find_node("f");
  const TdQuery q{s, f, TimePoint{0}};

  const auto naive = naive_td_dijkstra(g, q);
  c.expect(naive.arrival[f] == TimePoint{11}, "naive-td arrival " + show(naive.arrival[f]));

  const auto sol = solve_via_state_graph(g, q);
  c.expect(sol.status == SolveStatus::kFound, std::string("state-graph ") + to_string(sol.status));
  if (sol.route) {
    c.expect(sol.route->arrival == TimePoint{3}, "state-graph arrival " + show(sol.route->arrival));
    std::vector<std::string> names;
    for (NodeId v : sol.route->nodes) names.push_back(g.name(v));
    c.expect(names == std::vector<std::string>{"s", "u", "v", "f"}, "state-graph path");
  }

  bool refused = false;
  try {
    td_dijkstra_fifo(g, q);
  } catch (const NonFifoEdgeError& e) {
    const Edge& edge = g.edge(e.edge());
    const FifoReport r = e.report();
    refused = g.name(edge.from) == "v" && g.name(edge.to) == "f" && r.witness &&
              r.witness->t1 < r.witness->t2 && r.witness->a1 > r.witness->a2;
  }
  c.expect(refused, "td-fifo did not refuse with a vf witness");

  const double took = seconds_since(start);
  c.expect(took < kFig1Limit, "took " + std::to_string(took) + " s");
  return report(1, "fig1 reproduction", c,
                "naive 11, state-graph 3 via s,u,v,f, td-fifo refuses on vf; " +
                    std::to_string(took) + " s");
}

bool fig1_expansion() {
  Check c;
  const Graph g = fig1_graph();
  const StateGraph sg = expand(g, 0, TimePoint{0});
  std::vector<std::pair<std::string, Ticks>> got;
  for (const auto& s : sg.states) got.emplace_back(g.name(s.node), s.time.ticks);
  std::sort(got.begin(), got.end());
  std::vector<std::pair<std::string, Ticks>> want{{"s", 0}, {"u", 1}, {"v", 1},
                                                  {"f", 11}, {"v", 2}, {"f", 3}};
  std::sort(want.begin(), want.end());
  c.expect(got == want, "state set differs (" + std::to_string(got.size()) + " states)");
  c.expect(sg.transitions.size() == 5, std::to_string(sg.transitions.size()) + " transitions");
  c.expect(!sg.stats.truncated, "truncated");
  return report(2, "fig1 state expansion", c, "6 states, 5 transitions");
}

bool pseudo_poly() {
  Check c;
  const Graph g4 = pseudo_poly_family(4);
  const NodeId f = *g4.find_node("f");
  ExpandOptions targeted;
  targeted.target = f;
  const StateGraph sg = expand(g4, 0, TimePoint{0}, targeted);
  c.expect(sg.states.size() == 8, std::to_string(sg.states.size()) + " states for k=4");
  c.expect(sg.index_of(State{f, TimePoint{5}}).has_value(), "(f,5) missing");
  const auto sol = solve_via_state_graph(g4, {0, f, TimePoint{0}});
  c.expect(sol.route && sol.route->arrival == TimePoint{5},
           "k=4 arrival " + show(sol.route ? std::optional(sol.route->arrival) : std::nullopt));

  // Perfect line through exact integers: every first difference is equal.
  const auto start = Clock::now();
  std::vector<long long> counts;
  for (int k = 2; k <= 100; ++k) {
    counts.push_back(static_cast<long long>(expand(pseudo_poly_family(k), 0, TimePoint{0}).stats.state_count));
  }
  const double took = seconds_since(start);
  const long long slope = counts[1] - counts[0];
  const long long intercept = counts[0] - 2 * slope;
  bool affine = slope > 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    affine = affine && counts[i] == slope * static_cast<long long>(i + 2) + intercept;
  }
  c.expect(affine, "state counts are not affine in k");
  c.expect(took < kSweepLimit, "sweep took " + std::to_string(took) + " s");
  return report(3, "pseudo-polynomial family", c,
                "k=4: 8 states incl (f,5), arrival 5; sweep k=2..100: states = " +
                    std::to_string(slope) + "k + " + std::to_string(intercept) + "; " +
                    std::to_string(took) + " s");
}

std::vector<NodeId> reachable_from(const Graph& g, NodeId s) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{s}, out;
  seen[s] = true;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (EdgeId id : g.out_edges(u)) {
      const NodeId v = g.edge(id).to;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct FifoCase {
  Graph graph;
  TdQuery query;
  std::vector<RouteResult> routes;  // from td-fifo and td-astar
};

bool fifo_soundness(std::vector<FifoCase>& cases) {
  Check c;
  const auto start = Clock::now();
  std::size_t reached = 0, edges_max = 0, nodes_max = 0;
  for (int seed = 1; seed <= kFifoGraphs; ++seed) {
    const CorpusInstance inst = gen_random(testing::small_fifo_spec(static_cast<std::uint64_t>(seed)));
    const Graph& g = inst.graph;
    nodes_max = std::max(nodes_max, g.node_count());
    edges_max = std::max(edges_max, g.edge_count());
    c.expect(g.is_fifo() && g.node_count() <= 8 && g.edge_count() <= 20, inst.name + " outside the size limits");
    Rng rng(static_cast<std::uint64_t>(seed) * 7919);
    for (int k = 0; k < kQueriesPerGraph; ++k) {
      const NodeId s = static_cast<NodeId>(rng.uniform(0, static_cast<Ticks>(g.node_count()) - 1));
      // Targets are drawn from nodes reachable from s so that most queries
      // have a finite answer.
      auto targets = reachable_from(g, s);
      if (targets.size() > 1) std::erase(targets, s);
      const NodeId f = targets[static_cast<std::size_t>(rng.uniform(0, static_cast<Ticks>(targets.size()) - 1))];
      const TimePoint t0{rng.uniform(0, 50)};
      const TimePoint horizon{t0.ticks + kFifoHorizonSpan};
      const TdQuery q{s, f, t0};

      OracleOptions oo;
      oo.horizon = horizon;
      const auto truth = brute_force_fastest(g, s, f, t0, oo).arrival;
      const auto labels = td_dijkstra_fifo(g, q);
      const auto via_astar = td_astar(g, q);
      ExpandOptions eo;
      eo.horizon = horizon;
      const auto sol = solve_via_state_graph(g, q, eo);
      const std::optional<TimePoint> from_states =
          sol.status == SolveStatus::kFound ? std::optional(sol.route->arrival) : std::nullopt;
      const std::optional<TimePoint> from_astar =
          via_astar ? std::optional(via_astar->arrival) : std::nullopt;

      const std::string where = inst.name + " q" + std::to_string(k);
      c.expect(labels.arrival[f] == truth, where + " td-fifo " + show(labels.arrival[f]) +
                                               " oracle " + show(truth));
      c.expect(from_astar == truth, where + " td-astar " + show(from_astar));
      c.expect(from_states == truth, where + " state-graph " + show(from_states));
      if (!truth) continue;
      ++reached;
      FifoCase fc{g, q, {}};
      if (auto r = extract_route(labels, f)) fc.routes.push_back(*r);
      if (via_astar) fc.routes.push_back(*via_astar);
      cases.push_back(std::move(fc));
    }
  }
  const double took = seconds_since(start);
  c.expect(took < kFifoSuiteLimit, "took " + std::to_string(took) + " s");
  return report(4, "FIFO soundness suite", c,
                std::to_string(kFifoGraphs * kQueriesPerGraph) + " queries, " +
                    std::to_string(reached) + " reachable, max " + std::to_string(nodes_max) +
                    " nodes/" + std::to_string(edges_max) + " edges; " + std::to_string(took) + " s");
}

bool subpath_optimality(const std::vector<FifoCase>& cases) {
  Check c;
  std::size_t prefixes = 0;
  for (const auto& fc : cases) {
    const TimePoint horizon{fc.query.t0.ticks + kFifoHorizonSpan};
    OracleOptions oo;
    oo.horizon = horizon;
    for (const auto& r : fc.routes) {
      for (std::size_t k = 0; k < r.edge_events.size(); ++k) {
        const NodeId x = r.nodes[k + 1];
        const auto delta = brute_force_fastest(fc.graph, fc.query.source, x, fc.query.t0, oo).arrival;
        ++prefixes;
        c.expect(delta == r.edge_events[k].arrive,
                 "prefix to node " + std::to_string(x) + " arrives " +
                     std::to_string(r.edge_events[k].arrive.ticks) + ", oracle " + show(delta));
      }
    }
  }

  // On the non-FIFO counterexample the optimum's prefix (s,u,v) is not fastest.
  const Graph g = fig1_graph();
  const NodeId s = *g.find_node("s"), v = *g.find_node("v"), f = *g.find_node("f");
  const auto sol = solve_via_state_graph(g, {s, f, TimePoint{0}});
  const auto delta_v = brute_force_fastest(g, s, v, TimePoint{0}).arrival;
  bool negative_case = false;
  if (sol.route && sol.route->nodes.size() == 4 && sol.route->nodes[2] == v) {
    negative_case = sol.route->edge_events[1].arrive == TimePoint{2} && delta_v == TimePoint{1};
  }
  c.expect(negative_case, "fig1 prefix (s,u,v) case");
  return report(5, "subpath optimality", c,
                std::to_string(prefixes) + " prefixes match the oracle; fig1 prefix (s,u,v) "
                                           "reaches v at 2 while the fastest arrival is 1");
}

bool static_agreement() {
  Check c;
  Rng rng(20240601);
  std::size_t pairs = 0;
  for (int i = 0; i < kStaticGraphs; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 20));
    const auto ppm = static_cast<std::uint32_t>(rng.uniform(50'000, 400'000));
    const StaticGraph sg = testing::random_static_graph(rng, n, ppm, 0, 50);
    const auto d = dijkstra(sg, 0);
    const auto bf = bellman_ford(sg, 0);
    const std::vector<Ticks> zero(n, 0);
    for (NodeId f = 0; f < n; ++f) {
      ++pairs;
      const auto a = astar(sg, 0, f, zero);
      const auto b = bidirectional_dijkstra(sg, 0, f);
      const std::optional<Ticks> la = a ? std::optional(a->length) : std::nullopt;
      const std::optional<Ticks> lb = b ? std::optional(b->length) : std::nullopt;
      c.expect(bf.dist[f] == d.dist[f] && la == d.dist[f] && lb == d.dist[f],
               "graph " + std::to_string(i) + " target " + std::to_string(f));
    }
  }

  int flagged = 0;
  for (int i = 0; i < kPlantedCycles; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(4, 15));
    const StaticGraph base = testing::random_static_graph(rng, n, 200'000, 0, 50);
    std::vector<StaticEdge> edges(base.edges().begin(), base.edges().end());
    // Chain 0 -> 1 -> .. -> len-1 keeps the cycle reachable; the cycle
    // len-1 -> .. -> n-1 -> len-1 sums to -1.
    const auto len = static_cast<NodeId>(rng.uniform(1, static_cast<Ticks>(n) - 2));
    for (NodeId v = 0; v + 1 < len; ++v) edges.push_back({v, v + 1, rng.uniform(0, 50)});
    Ticks total = 0;
    for (NodeId v = len - 1; v + 1 < n; ++v) {
      const Ticks w = rng.uniform(0, 20);
      edges.push_back({v, v + 1, w});
      total += w;
    }
    edges.push_back({static_cast<NodeId>(n - 1), len - 1, -total - 1});
    const StaticGraph sg(n, std::move(edges));
    try {
      bellman_ford(sg, 0);
    } catch (const NegativeCycleError& e) {
      Ticks sum = 0;
      bool closed = e.nodes().size() >= 2 && e.nodes().front() == e.nodes().back() &&
                    e.edges().size() + 1 == e.nodes().size();
      for (std::size_t k = 0; closed && k < e.edges().size(); ++k) {
        const auto& edge = sg.edge(e.edges()[k]);
        closed = edge.from == e.nodes()[k] && edge.to == e.nodes()[k + 1];
        sum += edge.cost;
      }
      if (closed && sum < 0) ++flagged;
    }
  }
  c.expect(flagged == kPlantedCycles,
           std::to_string(flagged) + "/" + std::to_string(kPlantedCycles) + " cycles flagged");
  return report(6, "static agreement", c,
                std::to_string(kStaticGraphs) + " graphs, " + std::to_string(pairs) +
                    " source-target pairs agree 4 ways; " + std::to_string(flagged) + "/" +
                    std::to_string(kPlantedCycles) + " planted negative cycles flagged");
}

bool checker_equivalence() {
  Check c;
  Rng rng(777);
  int non_fifo = 0;
  int kinds[3] = {0, 0, 0};
  for (int i = 0; i < kCheckerFunctions; ++i) {
    const auto f = random_function(rng, 0, 30, 6, 10);
    ++kinds[static_cast<int>(f.kind())];
    const auto oracle = testing::fifo_pair_scan(f, 0, testing::scan_end(f));
    const FifoReport r = check_fifo(f);
    c.expect(r.is_fifo == !oracle.has_value(), "function " + std::to_string(i));
    if (!r.is_fifo) ++non_fifo;
  }
  return report(7, "FIFO checker equivalence", c,
                std::to_string(kCheckerFunctions) + " functions (" + std::to_string(kinds[0]) +
                    " const, " + std::to_string(kinds[1]) + " pwc, " + std::to_string(kinds[2]) +
                    " pwl), " + std::to_string(non_fifo) + " non-FIFO, 0 disagreements");
}

bool determinism() {
  Check c;
  const std::vector<std::vector<std::string>> commands{
      {"route", "--graph", "fig1", "--source", "s", "--target", "f", "--t0", "0", "--algo", "naive-td"},
      {"route", "--graph", "fig1", "--source", "s", "--target", "f", "--t0", "0", "--algo", "state-graph"},
      {"route", "--graph", "fig1", "--source", "s", "--target", "f", "--t0", "0", "--algo", "td-fifo"},
      {"route", "--graph", "fig1-fifo", "--source", "s", "--t0", "0", "--algo", "td-fifo"},
      {"route", "--graph", "fig3-k4", "--source", "s", "--target", "f", "--t0", "0", "--algo", "td-astar"},
      {"expand", "--graph", "fig1", "--source", "s", "--t0", "0", "--dot"},
      {"expand", "--graph", "fig3-k4", "--source", "s", "--target", "f", "--t0", "0", "--dot"},
  };
  for (const auto& args : commands) {
    std::ostringstream out1, out2, err;
    const int code1 = cli::run(args, out1, err);
    const int code2 = cli::run(args, out2, err);
    c.expect(code1 == code2 && out1.str() == out2.str() && !out1.str().empty(),
             args[0] + " " + args.back());
  }
  return report(8, "determinism", c,
                std::to_string(commands.size()) + " commands byte-identical across two runs");
}

}  // namespace
}  // namespace tdroute

int main() {
  using namespace tdroute;
  std::vector<FifoCase> cases;
  bool ok = true;
  ok &= fig1_reproduction();
  ok &= fig1_expansion();
  ok &= pseudo_poly();
  ok &= fifo_soundness(cases);
  ok &= subpath_optimality(cases);
  ok &= static_agreement();
  ok &= checker_equivalence();
  ok &= determinism();
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
  return ok ? 0 : 1;
}

#include "tdroute/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include "tdroute/corpus.hpp"
#include "tdroute/graph_io.hpp"
#include "tdroute/result_document.hpp"
#include "tdroute/state_graph.hpp"
#include "tdroute/static_routing.hpp"
#include "tdroute/td_routing.hpp"

namespace tdroute::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph resolve_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_graph_file(spec);
  if (auto inst = find_corpus_instance(spec)) return std::move(inst->graph);
  throw UsageError("no graph file or corpus instance named '" + spec + "'");
}

NodeId resolve_node(const Graph& g, const std::string& token) {
  if (auto id = g.find_node(token)) return *id;
  throw UsageError("unknown node '" + token + "'");
}

std::optional<TimePoint> horizon_setting(const std::optional<Ticks>& flag) {
  if (flag) return TimePoint{*flag};
  if (const char* env = std::getenv(kHorizonEnv)) {
    try {
      return TimePoint{std::stoll(env)};
    } catch (const std::exception&) {
      throw UsageError(std::string(kHorizonEnv) + " is not an integer");
    }
  }
  return std::nullopt;
}

struct RouteArgs {
  std::string graph;
  std::string source;
  std::optional<std::string> target;
  Ticks t0 = 0;
  std::string algo;
  bool allow_wait = false;
  std::optional<Ticks> horizon;
  std::size_t max_states = ExpandOptions{}.max_states;
};

ExpandOptions expand_options(bool allow_wait, const std::optional<Ticks>& horizon,
                             std::size_t max_states) {
  ExpandOptions opts;
  opts.allow_wait = allow_wait;
  opts.horizon = horizon_setting(horizon);
  opts.max_states = max_states;
  return opts;
}

int route(const RouteArgs& a, std::ostream& out) {
  const Graph g = resolve_graph(a.graph);
  TdQuery q{resolve_node(g, a.source), std::nullopt, TimePoint{a.t0}};
  if (a.target) q.target = resolve_node(g, *a.target);

  const bool single_source_ok =
      a.algo == "dijkstra" || a.algo == "bellman-ford" || a.algo == "naive-td" || a.algo == "td-fifo";
  if (!q.target && !single_source_ok) throw UsageError("--algo " + a.algo + " requires --target");

  ResultDocument doc(g, a.graph, q, a.algo);
  auto emit = [&](int code, std::string_view status) {
    doc.set_status(status);
    out << doc.dump();
    return code;
  };

  if (a.algo == "dijkstra" || a.algo == "bellman-ford" || a.algo == "astar" || a.algo == "bidir") {
    // Classic algorithms see every edge cost frozen at the departure time.
    const StaticGraph view = StaticGraph::at_departure(g, q.t0);
    std::optional<PathResult> path;
    if (a.algo == "dijkstra" || a.algo == "bellman-ford") {
      SearchTrace trace;
      const StaticDistances dist =
          a.algo == "dijkstra" ? dijkstra(view, q.source, &trace) : bellman_ford(view, q.source);
      if (a.algo == "dijkstra") doc.set_search_stats(trace.settled.size(), trace.relaxations);
      if (!q.target) {
        doc.set_static_labels(dist, q.t0);
        return emit(kOk, "ok");
      }
      path = dist.path_to(*q.target);
    } else if (a.algo == "astar") {
      // Free-flow distances bound every frozen cost from below.
      const StaticDistances lower =
          dijkstra(StaticGraph::lower_bounds(g).reversed(), *q.target);
      std::vector<Ticks> h(g.node_count(), 0);
      for (NodeId v = 0; v < g.node_count(); ++v) h[v] = lower.dist[v].value_or(0);
      SearchTrace trace;
      path = astar(view, q.source, *q.target, h, &trace);
      doc.set_search_stats(trace.settled.size(), trace.relaxations);
    } else {
      path = bidirectional_dijkstra(view, q.source, *q.target);
    }
    if (!path) return emit(kUnreachable, "unreachable");
    doc.set_static_path(*path, q.t0, view);
    return emit(kOk, "ok");
  }

  if (a.algo == "naive-td" || a.algo == "td-fifo") {
    ArrivalTimes labels;
    try {
      labels = a.algo == "naive-td" ? naive_td_dijkstra(g, q) : td_dijkstra_fifo(g, q);
    } catch (const NonFifoEdgeError&) {
      return emit(kNonFifo, "non-fifo");
    }
    doc.set_search_stats(labels.stats.settled, labels.stats.relaxations);
    if (!q.target) {
      doc.set_labels(labels);
      return emit(kOk, "ok");
    }
    const auto r = extract_route(labels, *q.target);
    if (!r) return emit(kUnreachable, "unreachable");
    doc.set_route(*r);
    return emit(kOk, "ok");
  }

  if (a.algo == "td-astar") {
    std::optional<RouteResult> r;
    TdStats stats;
    try {
      r = td_astar(g, q, &stats);
    } catch (const NonFifoEdgeError&) {
      return emit(kNonFifo, "non-fifo");
    }
    doc.set_search_stats(stats.settled, stats.relaxations);
    if (!r) return emit(kUnreachable, "unreachable");
    doc.set_route(*r);
    return emit(kOk, "ok");
  }

  if (a.algo == "state-graph") {
    const auto solution =
        solve_via_state_graph(g, q, expand_options(a.allow_wait, a.horizon, a.max_states));
    doc.set_expand_stats(solution.stats);
    switch (solution.status) {
      case SolveStatus::kFound:
        doc.set_route(*solution.route);
        return emit(kOk, "ok");
      case SolveStatus::kUnreachable:
        return emit(kUnreachable, "unreachable");
      case SolveStatus::kTruncated:
        return emit(kTruncated, "truncated");
    }
  }
  throw UsageError("unknown algorithm '" + a.algo + "'");
}

int check_fifo_command(const std::string& graph_spec, const std::optional<EdgeId>& edge,
                       std::ostream& out) {
  const Graph g = resolve_graph(graph_spec);
  if (edge && *edge >= g.edge_count()) throw UsageError("edge id out of range");

  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : g.fifo_violations()) {
    if (!edge || v.edge == *edge) violations.push_back(fifo_violation_json(g, v));
  }
  const bool fifo = violations.empty();
  nlohmann::ordered_json doc{{"graph", graph_spec},
                             {"checked_edges", edge ? std::size_t{1} : g.edge_count()},
                             {"is_fifo", fifo},
                             {"violations", std::move(violations)}};
  out << doc.dump(2) << "\n";
  return fifo ? kOk : kNonFifo;
}

struct ExpandArgs {
  std::string graph;
  std::string source;
  std::optional<std::string> target;
  Ticks t0 = 0;
  bool allow_wait = false;
  std::optional<Ticks> horizon;
  std::size_t max_states = ExpandOptions{}.max_states;
  bool dot = false;
};

int expand_command(const ExpandArgs& a, std::ostream& out) {
  const Graph g = resolve_graph(a.graph);
  ExpandOptions opts = expand_options(a.allow_wait, a.horizon, a.max_states);
  if (a.target) opts.target = resolve_node(g, *a.target);
  const StateGraph sg = expand(g, resolve_node(g, a.source), TimePoint{a.t0}, opts);

  std::ostringstream stats;
  stats << "stats states=" << sg.stats.state_count << " transitions=" << sg.stats.transition_count
        << " truncated=" << (sg.stats.truncated ? "true" : "false");
  if (a.dot) {
    out << export_dot(sg, g.names()) << "// " << stats.str() << "\n";
  } else {
    for (const auto& s : sg.states) out << "(" << g.name(s.node) << "," << s.time.ticks << ")\n";
    out << stats.str() << "\n";
  }
  return sg.stats.truncated ? kTruncated : kOk;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int bench_command(const std::string& suite, std::optional<std::vector<int>> sizes,
                  std::uint64_t seed, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto micros = [](Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  };
  if (sizes && sizes->empty()) throw UsageError("--sizes must list at least one size");
  for (int s : sizes.value_or(std::vector<int>{})) {
    if (s < 1) throw UsageError("sizes must be positive");
  }

  if (suite == "pseudo-poly") {
    out << "suite=pseudo-poly\n"
        << std::left << std::setw(6) << "k" << std::setw(10) << "states" << std::setw(13)
        << "transitions" << std::setw(15) << "target_states" << std::setw(9) << "arrival"
        << "wall_us\n";
    for (int k : sizes.value_or(std::vector<int>{10, 20, 40})) {
      const auto start = Clock::now();
      const Graph g = pseudo_poly_family(k);
      const StateGraph full = expand(g, 0, TimePoint{0});
      ExpandOptions targeted;
      targeted.target = 2;
      const StateGraph pruned = expand(g, 0, TimePoint{0}, targeted);
      const auto solution = solve_via_state_graph(g, TdQuery{0, 2, TimePoint{0}});
      out << std::setw(6) << k << std::setw(10) << full.stats.state_count << std::setw(13)
          << full.stats.transition_count << std::setw(15) << pruned.stats.state_count
          << std::setw(9) << solution.route->arrival.ticks << micros(start) << "\n";
    }
    return kOk;
  }
  if (suite == "random-fifo") {
    out << "suite=random-fifo seed=" << seed << "\n"
        << std::left << std::setw(7) << "nodes" << std::setw(8) << "edges" << std::setw(19)
        << "checksum" << std::setw(9) << "settled" << std::setw(12) << "relaxations"
        << "wall_us\n";
    for (int n : sizes.value_or(std::vector<int>{8, 16, 32, 64})) {
      RandomGraphSpec spec;
      spec.nodes = static_cast<std::size_t>(n);
      spec.edge_prob = std::min(1.0, 3.0 / n);
      spec.seed = seed * 1000 + static_cast<std::uint64_t>(n);
      const CorpusInstance inst = gen_random(spec);
      std::ostringstream checksum;
      checksum << std::hex << std::setw(16) << std::setfill('0') << fnv1a(serialize_graph(inst.graph));
      const auto start = Clock::now();
      const ArrivalTimes labels = td_dijkstra_fifo(inst.graph, TdQuery{0, std::nullopt, TimePoint{0}});
      const auto wall = micros(start);
      out << std::setw(7) << n << std::setw(8) << inst.graph.edge_count() << std::setw(19)
          << checksum.str() << std::setw(9) << labels.stats.settled << std::setw(12)
          << labels.stats.relaxations << wall << "\n";
    }
    return kOk;
  }
  throw UsageError("unknown suite '" + suite + "'");
}

int export_command(const std::optional<std::string>& name, std::ostream& out) {
  if (!name) {
    for (const auto& inst : paper_corpus()) out << inst.name << "\t" << inst.notes << "\n";
    return kOk;
  }
  const auto inst = find_corpus_instance(*name);
  if (!inst) throw UsageError("no corpus instance named '" + *name + "'");
  out << "# " << inst->name << ": " << inst->notes << "\n" << serialize_graph(inst->graph);
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-dependent routing engine"};
  app.require_subcommand(1);

  RouteArgs route_args;
  auto* route_cmd = app.add_subcommand("route", "Compute a route and print a JSON result document");
  route_cmd->add_option("--graph", route_args.graph, "Graph file or corpus name")->required();
  route_cmd->add_option("--source", route_args.source)->required();
  route_cmd->add_option("--target", route_args.target);
  route_cmd->add_option("--t0", route_args.t0)->required()->check(CLI::NonNegativeNumber);
  route_cmd->add_option("--algo", route_args.algo)
      ->required()
      ->check(CLI::IsMember({"dijkstra", "bellman-ford", "astar", "bidir", "naive-td", "td-fifo",
                             "td-astar", "state-graph"}));
  route_cmd->add_flag("--allow-wait", route_args.allow_wait);
  route_cmd->add_option("--horizon", route_args.horizon);
  route_cmd->add_option("--max-states", route_args.max_states)->check(CLI::PositiveNumber);

  std::string fifo_graph;
  std::optional<EdgeId> fifo_edge;
  auto* fifo_cmd = app.add_subcommand("check-fifo", "Report FIFO violations per edge");
  fifo_cmd->add_option("--graph", fifo_graph)->required();
  fifo_cmd->add_option("--edge", fifo_edge);

  ExpandArgs expand_args;
  auto* expand_cmd = app.add_subcommand("expand", "Print the reachable state-transition graph");
  expand_cmd->add_option("--graph", expand_args.graph)->required();
  expand_cmd->add_option("--source", expand_args.source)->required();
  expand_cmd->add_option("--target", expand_args.target);
  expand_cmd->add_option("--t0", expand_args.t0)->required()->check(CLI::NonNegativeNumber);
  expand_cmd->add_flag("--allow-wait", expand_args.allow_wait);
  expand_cmd->add_option("--horizon", expand_args.horizon);
  expand_cmd->add_option("--max-states", expand_args.max_states)->check(CLI::PositiveNumber);
  expand_cmd->add_flag("--dot", expand_args.dot);

  std::string suite;
  std::optional<std::vector<int>> sizes;
  std::uint64_t seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Timing table over generated instances");
  bench_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"random-fifo", "pseudo-poly"}));
  auto* sizes_opt = bench_cmd->add_option("--sizes", sizes)->delimiter(',')->expected(0, -1);
  bench_cmd->add_option("--seed", seed);

  std::optional<std::string> export_name;
  auto* export_cmd = app.add_subcommand("export", "Print a built-in corpus instance");
  export_cmd->add_option("--name", export_name);

  std::vector<const char*> argv{"tdroute"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*route_cmd) return route(route_args, out);
    if (*fifo_cmd) return check_fifo_command(fifo_graph, fifo_edge, out);
    if (*expand_cmd) return expand_command(expand_args, out);
    if (*bench_cmd) {
      // A bare --sizes leaves the optional unset; treat it as an empty list.
      if (sizes_opt->count() > 0 && !sizes) sizes.emplace();
      return bench_command(suite, sizes, seed, out);
    }
    if (*export_cmd) return export_command(export_name, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace tdroute::cli

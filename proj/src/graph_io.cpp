#include "tdroute/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace tdroute {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

class Parser {
 public:
  Graph run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++line_no_;
      parse_line(tokenize(text.substr(pos, end - pos)));
      pos = end + 1;
    }
    if (!header_) throw ParseError(line_no_, 1, "missing 'p tdsp' header");
    if (edges_.size() != declared_edges_) {
      throw ParseError(header_line_, 1,
                       "header declares " + std::to_string(declared_edges_) + " arcs, found " +
                           std::to_string(edges_.size()));
    }
    finish_names();
    Graph g(node_count_, std::move(edges_), std::move(names_), tick_);
    const ValidationReport report = validate_graph(g);
    if (!report.ok()) {
      const auto& issue = report.issues.front();
      const std::size_t line = issue.edge ? edge_lines_[*issue.edge] : header_line_;
      throw ParseError(line, 1, issue.message);
    }
    return g;
  }

 private:
  void parse_line(const std::vector<Token>& t) {
    if (t.empty()) return;
    const std::string_view kind = t[0].text;
    if (kind == "p") {
      if (header_) fail(t[0], "duplicate header");
      expect(t, 4);
      if (t[1].text != "tdsp") fail(t[1], "expected 'tdsp'");
      node_count_ = static_cast<std::size_t>(number(t[2], 0));
      declared_edges_ = static_cast<std::size_t>(number(t[3], 0));
      header_ = true;
      header_line_ = line_no_;
      return;
    }
    if (!header_) fail(t[0], "expected 'p tdsp' header first");
    if (kind == "tick") {
      expect(t, 2);
      tick_ = number(t[1], 1);
    } else if (kind == "n") {
      expect(t, 2);
      if (names_final_) fail(t[0], "node declarations must precede arcs");
      if (names_.size() >= node_count_) fail(t[1], "more node declarations than nodes");
      if (index_.contains(std::string(t[1].text))) fail(t[1], "duplicate node name");
      index_.emplace(std::string(t[1].text), static_cast<NodeId>(names_.size()));
      names_.emplace_back(t[1].text);
    } else if (kind == "a") {
      finish_names();
      if (t.size() < 4) fail(t.back(), "arc needs: a <from> <to> <kind> [values]");
      const NodeId from = node(t[1]);
      const NodeId to = node(t[2]);
      edges_.push_back({from, to, cost(t)});
      edge_lines_.push_back(line_no_);
    } else {
      fail(t[0], "unknown record '" + std::string(kind) + "'");
    }
  }

  TravelTimeFunction cost(const std::vector<Token>& t) {
    const Token& kind = t[3];
    if (kind.text == "const") {
      expect(t, 5);
      return TravelTimeFunction::constant(number(t[4], 0));
    }
    if (kind.text != "pwc" && kind.text != "pwl") fail(kind, "cost kind must be const, pwc or pwl");
    expect(t, 5);
    std::vector<ProfilePoint> points;
    const Token& list = t[4];
    std::size_t i = 0;
    while (i <= list.text.size()) {
      const std::size_t end = std::min(list.text.find(',', i), list.text.size());
      const std::string_view item = list.text.substr(i, end - i);
      const std::size_t colon = item.find(':');
      const Token item_token{item, list.column + i};
      if (colon == std::string_view::npos) fail(item_token, "expected <time>:<value>");
      const Ticks at = number({item.substr(0, colon), item_token.column}, 0);
      const Ticks value = number({item.substr(colon + 1), item_token.column + colon + 1}, 0);
      points.emplace_back(at, value);
      i = end + 1;
    }
    return kind.text == "pwc" ? TravelTimeFunction::piecewise_constant(std::move(points))
                              : TravelTimeFunction::piecewise_linear(std::move(points));
  }

  void finish_names() {
    if (names_final_) return;
    names_final_ = true;
    if (names_.empty()) {
      for (std::size_t v = 0; v < node_count_; ++v) {
        names_.push_back(std::to_string(v));
        index_.emplace(names_.back(), static_cast<NodeId>(v));
      }
    } else if (names_.size() != node_count_) {
      throw ParseError(line_no_, 1,
                       "declared " + std::to_string(names_.size()) + " node names for " +
                           std::to_string(node_count_) + " nodes");
    }
  }

  NodeId node(const Token& t) const {
    auto it = index_.find(std::string(t.text));
    if (it == index_.end()) fail(t, "unknown node '" + std::string(t.text) + "'");
    return it->second;
  }

  Ticks number(const Token& t, Ticks min) const {
    Ticks value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || t.text.empty()) {
      fail(t, "expected an integer, got '" + std::string(t.text) + "'");
    }
    if (value < min) fail(t, "value must be >= " + std::to_string(min));
    return value;
  }

  void expect(const std::vector<Token>& t, std::size_t count) const {
    if (t.size() < count) fail(t.back(), "too few fields");
    if (t.size() > count) fail(t[count], "unexpected field");
  }

  [[noreturn]] void fail(const Token& t, const std::string& reason) const {
    throw ParseError(line_no_, t.column, reason);
  }

  std::size_t line_no_ = 0;
  bool header_ = false;
  std::size_t header_line_ = 0;
  std::size_t node_count_ = 0;
  std::size_t declared_edges_ = 0;
  Ticks tick_ = 1;
  bool names_final_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> edge_lines_;
};

}  // namespace

Graph parse_graph(std::string_view text) { return Parser().run(text); }

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tdsp " << g.node_count() << ' ' << g.edge_count() << '\n';
  out << "tick " << g.tick() << '\n';
  for (const auto& name : g.names()) out << "n " << name << '\n';
  for (const auto& e : g.edges()) {
    out << "a " << g.name(e.from) << ' ' << g.name(e.to) << ' ' << to_string(e.cost.kind()) << ' ';
    if (e.cost.kind() == ProfileKind::kConstant) {
      out << e.cost.points().front().value.ticks;
    } else {
      bool first = true;
      for (const auto& p : e.cost.points()) {
        out << (first ? "" : ",") << p.at.ticks << ':' << p.value.ticks;
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace tdroute

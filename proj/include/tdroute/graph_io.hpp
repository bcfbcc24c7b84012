#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdroute/graph.hpp"

namespace tdroute {

/// Line-oriented text format, whitespace separated, '#' starts a comment:
///
///   p tdsp <node_count> <edge_count>
///   tick <units>                      optional, default 1
///   n <name>                          optional; all nodes, in id order
///   a <from> <to> const <w>
///   a <from> <to> pwc <t>:<v>,<t>:<v>,...
///   a <from> <to> pwl <t>:<v>,<t>:<v>,...
///
/// Without `n` lines nodes are named 0 .. node_count-1. Node declarations
/// must precede the first arc.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

/// Parses and validates; the result always passes validate_graph().
Graph parse_graph(std::string_view text);

std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::filesystem::path& path);

}  // namespace tdroute

#pragma once

#include <string>
#include <string_view>

#include "odrc/graph.hpp"

namespace odrc {

// Malformed text input; carries the 1-based line number (0 when global).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list format: one "u v" per line, '#' comment lines, optional
// "n <count>" header for trailing isolated vertices.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// "u v" = arc u -> v, one line per edge. Parsing accepts any line order but
// every edge of `g` must appear exactly once.
Orientation parse_orientation(const Graph& g, std::string_view text);
std::string serialize_orientation(const Graph& g, const Orientation& o);

// "u v c" per edge, edge-id order on output.
EdgeColoring parse_coloring(const Graph& g, std::string_view text);
std::string serialize_coloring(const Graph& g, const EdgeColoring& c);

// Formats kInf as "inf".
std::string format_distance(int d);

}  // namespace odrc

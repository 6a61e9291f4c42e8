#include "odrc/io.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace odrc {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Splits into non-blank, non-comment lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

EdgeId lookup_edge(const Graph& g, Vertex u, Vertex v, int line) {
  auto e = g.find_edge(u, v);
  if (!e) {
    throw ParseError(line, "no edge " + std::to_string(u) + " " +
                               std::to_string(v) + " in graph");
  }
  return *e;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  int declared = -1;
  int max_id = -1;
  std::vector<std::pair<Edge, int>> pending;
  for (const auto& line : lines) {
    if (line.tokens.front() == "n") {
      if (line.tokens.size() != 2) throw ParseError(line.number, "bad header");
      if (declared >= 0) throw ParseError(line.number, "repeated n header");
      declared = parse_int(line.tokens[1], line.number);
      continue;
    }
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected two vertex ids");
    }
    Vertex u = parse_int(line.tokens[0], line.number);
    Vertex v = parse_int(line.tokens[1], line.number);
    if (u == v) {
      throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    }
    max_id = std::max({max_id, u, v});
    pending.push_back({{u, v}, line.number});
  }
  int n = max_id + 1;
  if (declared >= 0) {
    if (declared < n) {
      throw ParseError(0, "header declares " + std::to_string(declared) +
                              " vertices but ids reach " + std::to_string(max_id));
    }
    n = declared;
  }
  Graph g(n);
  for (const auto& [edge, number] : pending) {
    if (g.find_edge(edge.u, edge.v)) {
      throw ParseError(number, "duplicate edge " + std::to_string(edge.u) +
                                   " " + std::to_string(edge.v));
    }
    g.add_edge(edge.u, edge.v);
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  int max_id = -1;
  for (const Edge& e : g.edges()) max_id = std::max({max_id, e.u, e.v});
  if (max_id + 1 != g.n()) out += "n " + std::to_string(g.n()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Orientation parse_orientation(const Graph& g, std::string_view text) {
  Orientation o = Orientation::all_forward(g);
  std::vector<char> seen(static_cast<size_t>(g.m()), 0);
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected an arc 'u v'");
    }
    Vertex tail = parse_int(line.tokens[0], line.number);
    Vertex head = parse_int(line.tokens[1], line.number);
    EdgeId e = lookup_edge(g, tail, head, line.number);
    if (seen[static_cast<size_t>(e)]) {
      throw ParseError(line.number, "edge oriented twice");
    }
    seen[static_cast<size_t>(e)] = 1;
    o.set_from(g, e, tail);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ParseError(0, "orientation does not cover every edge");
  }
  return o;
}

std::string serialize_orientation(const Graph& g, const Orientation& o) {
  check_matches(g, o);
  std::string out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    Arc a = o.arc(g, e);
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  return out;
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
  std::vector<int> colors(static_cast<size_t>(g.m()), -1);
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, "expected 'u v color'");
    }
    Vertex u = parse_int(line.tokens[0], line.number);
    Vertex v = parse_int(line.tokens[1], line.number);
    int c = parse_int(line.tokens[2], line.number);
    EdgeId e = lookup_edge(g, u, v, line.number);
    if (colors[static_cast<size_t>(e)] >= 0) {
      throw ParseError(line.number, "edge colored twice");
    }
    colors[static_cast<size_t>(e)] = c;
  }
  if (std::find(colors.begin(), colors.end(), -1) != colors.end()) {
    throw ParseError(0, "coloring does not cover every edge");
  }
  try {
    return EdgeColoring(std::move(colors));
  } catch (const Error& ex) {
    throw ParseError(0, ex.what());
  }
}

std::string serialize_coloring(const Graph& g, const EdgeColoring& c) {
  check_matches(g, c);
  std::string out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    out += std::to_string(ed.u) + " " + std::to_string(ed.v) + " " +
           std::to_string(c.color(e)) + "\n";
  }
  return out;
}

std::string format_distance(int d) {
  return d == kInf ? "inf" : std::to_string(d);
}

}  // namespace odrc

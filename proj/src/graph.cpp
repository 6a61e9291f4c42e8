#include "odrc/graph.hpp"

#include <algorithm>

namespace odrc {

Graph::Graph(int n) {
  if (n < 0) throw Error("negative vertex count");
  adj_.resize(static_cast<size_t>(n));
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw Error("edge endpoint out of range: " + std::to_string(u) + " " +
                std::to_string(v));
  }
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (find_edge(u, v)) {
    throw Error("duplicate edge " + std::to_string(u) + " " +
                std::to_string(v));
  }
  const EdgeId id = m();
  edges_.push_back({u, v});
  auto insert = [&](Vertex a, Vertex b) {
    auto& list = adj_[static_cast<size_t>(a)];
    auto it = std::lower_bound(
        list.begin(), list.end(), b,
        [](const Incidence& inc, Vertex key) { return inc.to < key; });
    list.insert(it, Incidence{b, id});
  };
  insert(u, v);
  insert(v, u);
  return id;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  const auto& list = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Incidence& inc, Vertex key) { return inc.to < key; });
  if (it != list.end() && it->to == v) return it->edge;
  return std::nullopt;
}

EdgeColoring::EdgeColoring(std::vector<int> colors)
    : colors_(std::move(colors)) {
  int max_color = -1;
  for (int c : colors_) {
    if (c < 0) throw Error("negative color id");
    max_color = std::max(max_color, c);
  }
  std::vector<char> seen(static_cast<size_t>(max_color + 1), 0);
  for (int c : colors_) seen[static_cast<size_t>(c)] = 1;
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error("color ids are not contiguous from 0");
  }
  color_count_ = max_color + 1;
}

void check_matches(const Graph& g, const Orientation& o) {
  if (o.size() != g.m()) {
    throw Error("orientation has " + std::to_string(o.size()) +
                " directions for " + std::to_string(g.m()) + " edges");
  }
}

void check_matches(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.m()) {
    throw Error("coloring has " + std::to_string(c.size()) +
                " colors for " + std::to_string(g.m()) + " edges");
  }
}

}  // namespace odrc

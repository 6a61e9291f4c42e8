#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace odrc {

using Vertex = int;
using EdgeId = int;

// Sentinel for unreachable distances and acyclic girth/eta.
inline constexpr int kInf = std::numeric_limits<int>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violated a documented precondition (disconnected, bridged, too large).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. Edge ids are assigned in
// insertion order and never change; adjacency lists are kept sorted by
// neighbor id so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws Error on self-loops, duplicates and out-of-range endpoints.
  EdgeId add_edge(Vertex u, Vertex v);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> neighbors(Vertex v) const {
    return adj_[static_cast<size_t>(v)];
  }
  int degree(Vertex v) const {
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
  }
  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.n() == b.n();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

enum class Direction : std::uint8_t { forward, backward };

struct Arc {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// One direction per edge id; forward means stored u -> v.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<Direction> directions)
      : directions_(std::move(directions)) {}
  static Orientation all_forward(const Graph& g) {
    return Orientation(std::vector<Direction>(static_cast<size_t>(g.m()),
                                              Direction::forward));
  }

  int size() const { return static_cast<int>(directions_.size()); }
  Direction direction(EdgeId e) const {
    return directions_[static_cast<size_t>(e)];
  }
  void set(EdgeId e, Direction d) { directions_[static_cast<size_t>(e)] = d; }
  // Direct e so that it leaves `tail`.
  void set_from(const Graph& g, EdgeId e, Vertex tail) {
    set(e, g.edge(e).u == tail ? Direction::forward : Direction::backward);
  }
  Arc arc(const Graph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return direction(e) == Direction::forward ? Arc{ed.u, ed.v}
                                              : Arc{ed.v, ed.u};
  }
  const std::vector<Direction>& directions() const { return directions_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<Direction> directions_;
};

// Per-edge color ids. Colors in use must be exactly 0..color_count()-1.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<int> colors);

  int size() const { return static_cast<int>(colors_.size()); }
  int color(EdgeId e) const { return colors_[static_cast<size_t>(e)]; }
  int color_count() const { return color_count_; }
  const std::vector<int>& colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<int> colors_;
  int color_count_ = 0;
};

// Throws Error when the value does not belong to `g`.
void check_matches(const Graph& g, const Orientation& o);
void check_matches(const Graph& g, const EdgeColoring& c);

}  // namespace odrc

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "odrc/graph.hpp"

namespace odrc {

// A path u_0..u_k whose interior avoids the hull and whose feet u_0, u_k lie
// in it. Closed when u_0 == u_k. `edges[j]` joins vertices[j] and
// vertices[j+1].
struct Ear {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool closed() const { return vertices.front() == vertices.back(); }
  Vertex first_foot() const { return vertices.front(); }
  Vertex last_foot() const { return vertices.back(); }
  EdgeId first_leg() const { return edges.front(); }
  EdgeId last_leg() const { return edges.back(); }
  std::span<const Vertex> interior() const {
    return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
  }
  Ear reversed() const;

  friend bool operator==(const Ear&, const Ear&) = default;
};

// Throws Error unless `ear` is a valid ear of g relative to `in_hull`.
void validate_ear(const Graph& g, std::span<const char> in_hull, const Ear& ear);

// Edges with exactly one endpoint in `hull`, ascending.
std::vector<EdgeId> legs(const Graph& g, std::span<const Vertex> hull);

// Shortest hull-ear through leg `e`, read from e's hull endpoint, ties broken
// by the lexicographically smallest vertex sequence. Throws PreconditionError
// ("bridge leg") when no ear exists.
Ear optimal_ear(const Graph& g, std::span<const char> in_hull, EdgeId e);
Ear optimal_ear(const Graph& g, std::span<const Vertex> hull, EdgeId e);

// Label an ear would stamp on the edge it crosses from `from` at 1-based
// position `pos` of an ear of length `len`, reading the ear from its first
// foot. Committed labels must match exactly.
using EdgeLabeler =
    std::function<int(const Graph& g, EdgeId e, Vertex from, int pos, int len)>;

// Direction label: 0 when the edge is crossed u -> v as stored, else 1.
int direction_label(const Graph& g, EdgeId e, Vertex from, int pos, int len);
// Symmetric-coloring slot: +j for alpha_j, -j for beta_j.
int symmetric_slot_label(const Graph& g, EdgeId e, Vertex from, int pos, int len);
int symmetric_slot(int pos, int len);

// The growing hull plus the labels already fixed by earlier ears.
class EarContext {
 public:
  EarContext(const Graph& g, std::span<const Vertex> hull);

  const Graph& graph() const { return *g_; }
  bool in_hull(Vertex v) const { return in_hull_[static_cast<size_t>(v)] != 0; }
  std::span<const char> hull_flags() const { return in_hull_; }
  std::optional<int> committed(EdgeId e) const {
    int l = labels_[static_cast<size_t>(e)];
    return l == kNone ? std::nullopt : std::optional<int>(l);
  }
  // Ears committed since construction, in order, read in committed direction.
  const std::vector<Ear>& ears() const { return ears_; }
  // Index of the first committed ear having v as an interior vertex, or -1.
  int ear_of_interior(Vertex v) const {
    return interior_owner_[static_cast<size_t>(v)];
  }

  // Records `ear` with one label per edge. Throws Error when a label
  // disagrees with an earlier commitment.
  void commit(const Ear& ear, std::span<const int> labels);

  // Adds every interior vertex of the committed ears to the hull.
  std::vector<Vertex> absorb_interiors();

 private:
  static constexpr int kNone = std::numeric_limits<int>::min();

  const Graph* g_;
  std::vector<char> in_hull_;
  std::vector<int> labels_;
  std::vector<int> interior_owner_;
  std::vector<Ear> ears_;
};

struct CompatibleEar {
  Ear ear;                  // read in the direction its labels were computed
  std::vector<int> labels;  // one per edge of `ear`
  EdgeId seed_leg = -1;
  bool used_fallback = false;
};

struct CompatibleEarOptions {
  // Disable to exercise the segment-splicing fallback on its own.
  bool mixed_search = true;
};

// An ear of the same length as optimal_ear(e) that agrees with every
// committed label under one of its two readings. The primary mechanism
// searches all shortest ears through e under the label constraints; the
// fallback splices the ear onto the committed ear it first touches. Throws
// Error("ear consistency violated") if neither yields a consistent ear.
CompatibleEar compatible_ear(const EarContext& ctx, EdgeId e,
                             const EdgeLabeler& labeler,
                             CompatibleEarOptions options = {});

// Fallback rewrite: keep `ear` up to the first vertex interior to a committed
// ear, then follow that ear to one of its feet with the same remaining
// length. nullopt when no splice produces a consistent ear.
std::optional<CompatibleEar> splice_onto_committed(const EarContext& ctx,
                                                   const Ear& ear,
                                                   const EdgeLabeler& labeler);

// Labels of `ear` read forward, or nullopt when they conflict with `ctx`.
std::optional<std::vector<int>> consistent_labels(const EarContext& ctx,
                                                  const Ear& ear,
                                                  const EdgeLabeler& labeler);

}  // namespace odrc

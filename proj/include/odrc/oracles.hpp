#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "odrc/graph.hpp"

namespace odrc {

bool is_strongly_connected(const Graph& g, const Orientation& o);

// All-source directed BFS; row s holds d(s, .) with kInf for unreachable.
std::vector<std::vector<int>> directed_distances(const Graph& g,
                                                 const Orientation& o,
                                                 int threads = 1);

struct DirectedRadDiam {
  int radius = 0;    // min over v of max(out-ecc(v), in-ecc(v))
  int diameter = 0;  // max d(x, y)
  std::vector<int> eccentricity;  // two-way eccentricity per vertex
};

// nullopt when o is not strong.
std::optional<DirectedRadDiam> directed_rad_diam(const Graph& g,
                                                 const Orientation& o,
                                                 int threads = 1);

struct OrientationSearchResult {
  int best_diam = kInf;
  int best_rad = kInf;
  Orientation best_orientation;  // smallest bitmask attaining best_diam
  long long strong_count = 0;
  long long enumerated = 0;
};

// Exhaustive search over all 2^m orientations; bit e of the mask set means
// edge e is reversed. Throws PreconditionError("use bounds instead") when
// m > max_edges.
OrientationSearchResult optimal_oriented_diameter(const Graph& g,
                                                  int max_edges = 20,
                                                  int threads = 1);

struct RainbowCheck {
  bool connected = false;
  // One rainbow path per pair x < y in lexicographic order, when requested
  // and connected.
  std::vector<std::vector<Vertex>> witnesses;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;  // smallest failure
};

// Exact search over (vertex, used colors) states. Throws
// PreconditionError("use certificates") when c has more than max_colors
// colors.
RainbowCheck is_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                  int max_colors = 18,
                                  bool with_witnesses = false, int threads = 1);

// Smallest k admitting a rainbow connected k-coloring. Throws
// PreconditionError when m > max_edges or g is disconnected.
int exact_rc(const Graph& g, int max_edges = 8, int threads = 1);

}  // namespace odrc

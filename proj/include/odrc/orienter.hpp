#pragma once

#include <optional>
#include <vector>

#include "odrc/ears.hpp"
#include "odrc/graph.hpp"

namespace odrc {

struct OrientationBounds {
  int radius = 0;    // sum_{i=1..rad} min{2i, eta-1}
  int diameter = 0;  // twice the radius bound
  friend bool operator==(const OrientationBounds&, const OrientationBounds&) = default;
};

// Throws Error when rad < 0 or eta < 3.
OrientationBounds orientation_bounds(int rad, int eta);

struct TraceEar {
  Ear ear;  // in arc order: every edge runs vertices[j] -> vertices[j+1]
  EdgeId seed_leg = -1;
  bool used_fallback = false;
};

struct OrientLayer {
  int index = 0;
  int length_cap = 0;
  std::vector<TraceEar> ears;
  std::vector<Vertex> absorbed;
};

struct OrientTrace {
  Vertex center = 0;
  int radius = 0;
  int eta = 0;
  std::vector<OrientLayer> layers;
  std::vector<EdgeId> completed_edges;
  OrientationBounds bounds;
  int fallback_count = 0;
};

struct OrientResult {
  Orientation orientation;
  OrientTrace trace;
};

// Layered ear orientation around a center. Throws PreconditionError when g is
// disconnected ("not connected") or has bridges (message lists them).
OrientResult orient(const Graph& g);

struct OrientationReport {
  bool strong = false;
  int directed_radius = kInf;    // min over v of max(d(v,x), d(x,v))
  int directed_diameter = kInf;
  std::optional<int> center_eccentricity;  // only with a trace
  OrientationBounds bounds;
  bool radius_ok = false;
  bool diameter_ok = false;
  bool pass = false;
};

// Never throws for orientation failures; those are report content. When
// `trace` is given the center's two-way eccentricity is checked as well.
OrientationReport verify_orientation_bounds(const Graph& g, const Orientation& o,
                                            const OrientTrace* trace = nullptr,
                                            int threads = 1);

}  // namespace odrc

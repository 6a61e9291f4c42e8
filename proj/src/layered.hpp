#pragma once

#include <vector>

#include "odrc/ears.hpp"
#include "odrc/graph.hpp"

namespace odrc::detail {

struct LayerEars {
  int index = 0;       // 1-based distance layer around the center
  int length_cap = 0;  // min{2(rad-i+1)+1, eta}
  std::vector<CompatibleEar> ears;
  std::vector<Vertex> absorbed;
};

struct LayeredEars {
  Vertex center = 0;
  int radius = 0;
  int eta = 0;
  std::vector<int> depth;  // BFS distance from the center
  std::vector<LayerEars> layers;
  std::vector<char> on_ear;  // per edge
};

// Grows the hull from the smallest-id center one distance layer at a time,
// covering every new layer vertex with compatible ears labelled by
// `labeler`. Throws PreconditionError on disconnected or bridged input and
// Error if an ear exceeds its layer's length cap.
LayeredEars build_layered_ears(const Graph& g, const EdgeLabeler& labeler);

}  // namespace odrc::detail

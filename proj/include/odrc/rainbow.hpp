#pragma once

#include <span>
#include <vector>

#include "odrc/ears.hpp"
#include "odrc/graph.hpp"

namespace odrc {

// sum_{i=1..rad} min{2i+1, eta}. Throws Error when rad < 0 or eta < 3.
int rainbow_color_bound(int rad, int eta);

// Colors ear edge j (1-based from the first foot) alpha_j while
// j <= ceil(len/2) and beta_{len+1-j} afterwards. `committed` is indexed by
// edge id with -1 for uncolored edges; any colored ear edge must already
// carry its pattern color. Throws Error on a short pool or a mismatch.
std::vector<int> symmetric_color(const Ear& ear, std::span<const int> alpha,
                                 std::span<const int> beta,
                                 std::span<const int> committed = {});

struct ColoredEar {
  Ear ear;                  // alpha half starts at vertices.front()
  std::vector<int> colors;  // one per edge of `ear`
  EdgeId seed_leg = -1;
  bool used_fallback = false;
};

struct ColorLayer {
  int index = 0;
  int pool_capacity = 0;  // min{2(rad-i+1)+1, eta}
  std::vector<int> pool_alpha;
  std::vector<int> pool_beta;
  std::vector<ColoredEar> ears;
  std::vector<Vertex> absorbed;
};

struct ColorTrace {
  Vertex center = 0;
  int radius = 0;
  int eta = 0;
  std::vector<ColorLayer> layers;
  int completion_color = 0;
  std::vector<EdgeId> completed_edges;
  int total_colors = 0;
  int bound = 0;
  int fallback_count = 0;
};

struct RainbowResult {
  EdgeColoring coloring;
  ColorTrace trace;
};

// Layered symmetric ear coloring with a fresh pool per layer. Throws
// PreconditionError on disconnected or bridged input.
RainbowResult rainbow_color(const Graph& g);

struct RainbowCertificate {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> path;
  std::vector<int> colors;
};

// Routes x to y through the layered ears of `trace`. Throws Error when the
// trace does not describe g.
class CertificateBuilder {
 public:
  CertificateBuilder(const Graph& g, const ColorTrace& trace);

  RainbowCertificate build(Vertex x, Vertex y) const;

 private:
  struct Home {
    int layer = 0;  // 0 for the center
    int ear = -1;   // index into ears_
    int pos = 0;    // position along the ear
  };
  struct EarRef {
    const ColoredEar* ear;
    int layer;
  };

  std::vector<Vertex> walk(Vertex x, Vertex y) const;
  std::vector<Vertex> to_foot(Vertex x, bool front) const;

  const Graph& g_;
  const ColorTrace& trace_;
  std::vector<EarRef> ears_;
  std::vector<Home> home_;
};

RainbowCertificate extract_certificate(const Graph& g, const ColorTrace& trace,
                                       Vertex x, Vertex y);

// True when `cert` is a path of g from x to y with pairwise distinct colors
// under `c`, and cert.colors lists those colors.
bool valid_certificate(const Graph& g, const EdgeColoring& c,
                       const RainbowCertificate& cert);

}  // namespace odrc

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "odrc/graph.hpp"

namespace odrc {

// Seeded generator with a portable bounded-integer draw (the standard
// distributions are implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int uniform(int lo, int hi);
  double unit();  // uniform in [0, 1)
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Two rooted copies of the recursive triangle tree of the given depth glued at
// their roots (vertex 0). Radius equals depth and every edge is on a
// triangle. Throws Error unless 1 <= depth <= 8.
Graph gen_triangle_tree(int depth);

// Chain x_0..x_r with edge x_{i-1}x_i plus a parallel path of length
// min{2i, eta-1}; `copies` copies glued at x_0 = vertex 0. The default copy
// count is s^r + 1 with s = sum_{i<=r} min{2i+1, eta}. Throws Error unless
// 3 <= eta <= 2r+1 and the result stays under `max_vertices`.
Graph gen_extremal_rc(int r, int eta, std::optional<int> copies = std::nullopt,
                      int max_vertices = 200000);
int extremal_rc_default_copies(int r, int eta);

// Wheel on k rim vertices (hub 0), each spoke subdivided by r-1 inner
// vertices, then a triangle apex added over every edge. Throws Error unless
// r >= 3 and k >= 2r.
Graph gen_wheel_example(int r, int k);

// Random cycle grown by random ears until all n vertices are used, then
// `extra_ears` random chords. Bridgeless by construction. Throws Error when
// n < 3.
Graph gen_random_bridgeless(int n, int extra_ears, std::uint64_t seed);

// Bipartite graph with left part 0..n-1 and right part n..n+m-1, every left
// degree > ceil(m/2) and every right degree > ceil(n/2). Throws Error when
// n < 2 or m < 2.
Graph gen_bipartite_dense(int n, int m, std::uint64_t seed);

// Two disjoint copies of K_{n/2,m/2}. Throws Error unless n, m are even and
// positive.
Graph gen_disconnected_counterexample(int n, int m);

struct FamilySpec {
  std::string family;  // triangle_tree, extremal_rc, wheel_example,
                       // random_bridgeless, bipartite_dense,
                       // disconnected_counterexample
  std::map<std::string, int> params;
  std::uint64_t seed = 0;
};

// Dispatches on spec.family; throws Error on unknown families or missing or
// out-of-range parameters.
Graph generate(const FamilySpec& spec);

}  // namespace odrc

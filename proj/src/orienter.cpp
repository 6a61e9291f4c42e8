#include "odrc/orienter.hpp"

#include <algorithm>

#include "layered.hpp"
#include "odrc/cycles.hpp"
#include "odrc/metrics.hpp"
#include "odrc/oracles.hpp"

namespace odrc {

OrientationBounds orientation_bounds(int rad, int eta) {
  if (rad < 0 || eta < 3) throw Error("orientation bounds need rad >= 0 and eta >= 3");
  OrientationBounds b;
  for (int i = 1; i <= rad; ++i) b.radius += std::min(2 * i, eta - 1);
  b.diameter = 2 * b.radius;
  return b;
}

OrientResult orient(const Graph& g) {
  auto layered = detail::build_layered_ears(g, direction_label);
  OrientResult res{Orientation::all_forward(g), {}};
  OrientTrace& t = res.trace;
  t.center = layered.center;
  t.radius = layered.radius;
  t.eta = layered.eta;
  t.bounds = t.radius == 0 ? OrientationBounds{} : orientation_bounds(t.radius, t.eta);

  for (auto& layer : layered.layers) {
    OrientLayer out{layer.index, layer.length_cap, {}, layer.absorbed};
    for (auto& ce : layer.ears) {
      const Ear& ear = ce.ear;
      for (size_t j = 0; j < ear.edges.size(); ++j) {
        res.orientation.set_from(g, ear.edges[j], ear.vertices[j]);
      }
      if (ce.used_fallback) ++t.fallback_count;
      out.ears.push_back({ear, ce.seed_leg, ce.used_fallback});
    }
    t.layers.push_back(std::move(out));
  }

  const auto& depth = layered.depth;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (layered.on_ear[static_cast<size_t>(e)]) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    int da = depth[static_cast<size_t>(a)], db = depth[static_cast<size_t>(b)];
    Vertex tail = (da < db || (da == db && a < b)) ? a : b;
    res.orientation.set_from(g, e, tail);
    t.completed_edges.push_back(e);
  }
  return res;
}

OrientationReport verify_orientation_bounds(const Graph& g, const Orientation& o,
                                            const OrientTrace* trace,
                                            int threads) {
  check_matches(g, o);
  OrientationReport r;
  auto rd = radius_diameter_centers(g, threads);
  int e = eta(g, threads);
  if (rd.radius > 0 && e != kInf) r.bounds = orientation_bounds(rd.radius, e);
  auto d = directed_rad_diam(g, o, threads);
  if (!d) return r;
  r.strong = true;
  r.directed_radius = d->radius;
  r.directed_diameter = d->diameter;
  r.radius_ok = r.directed_radius <= r.bounds.radius;
  if (trace && g.has_vertex(trace->center)) {
    int c = d->eccentricity[static_cast<size_t>(trace->center)];
    r.center_eccentricity = c;
    r.radius_ok = r.radius_ok && c <= r.bounds.radius;
  }
  r.diameter_ok = r.directed_diameter <= r.bounds.diameter;
  r.pass = r.radius_ok && r.diameter_ok;
  return r;
}

}  // namespace odrc

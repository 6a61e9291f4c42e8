#include "layered.hpp"

#include <algorithm>
#include <string>

#include "odrc/cycles.hpp"
#include "odrc/metrics.hpp"

namespace odrc::detail {

LayeredEars build_layered_ears(const Graph& g, const EdgeLabeler& labeler) {
  if (g.n() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("not connected");
  auto cut = bridges(g);
  if (!cut.empty()) {
    std::string msg = "graph has bridges:";
    for (EdgeId e : cut) {
      msg += " " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
    }
    throw PreconditionError(msg);
  }

  LayeredEars out;
  auto rd = radius_diameter_centers(g);
  out.center = rd.centers.front();
  out.radius = rd.radius;
  out.eta = eta(g);
  out.depth = bfs(g, out.center).dist;
  out.on_ear.assign(static_cast<size_t>(g.m()), 0);

  std::vector<Vertex> hull{out.center};
  EarContext ctx(g, hull);
  for (int i = 1; i <= out.radius; ++i) {
    LayerEars layer;
    layer.index = i;
    layer.length_cap = std::min(2 * (out.radius - i + 1) + 1, out.eta);
    for (Vertex x = 0; x < g.n(); ++x) {
      if (out.depth[static_cast<size_t>(x)] != i || ctx.in_hull(x)) continue;
      bool touched = false;
      for (const Incidence& inc : g.neighbors(x)) {
        if (ctx.committed(inc.edge)) touched = true;
      }
      if (touched) continue;
      EdgeId leg = -1;
      for (const Incidence& inc : g.neighbors(x)) {
        if (ctx.in_hull(inc.to)) {
          leg = inc.edge;
          break;
        }
      }
      if (leg < 0) throw Error("layer vertex without hull neighbor");
      CompatibleEar ce = compatible_ear(ctx, leg, labeler);
      if (ce.ear.length() > layer.length_cap) {
        throw Error("ear of length " + std::to_string(ce.ear.length()) +
                    " exceeds layer cap " + std::to_string(layer.length_cap));
      }
      ctx.commit(ce.ear, ce.labels);
      for (EdgeId e : ce.ear.edges) out.on_ear[static_cast<size_t>(e)] = 1;
      layer.ears.push_back(std::move(ce));
    }
    layer.absorbed = ctx.absorb_interiors();
    out.layers.push_back(std::move(layer));
  }
  return out;
}

}  // namespace odrc::detail

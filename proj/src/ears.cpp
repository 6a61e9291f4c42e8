#include "odrc/ears.hpp"

#include <algorithm>

namespace odrc {
namespace {

struct LegEnds {
  Vertex foot;   // hull endpoint
  Vertex outer;  // the other endpoint
};

LegEnds leg_ends(const Graph& g, std::span<const char> in_hull, EdgeId e) {
  if (e < 0 || e >= g.m()) throw Error("edge id out of range");
  const Edge& ed = g.edge(e);
  bool hu = in_hull[static_cast<size_t>(ed.u)] != 0;
  bool hv = in_hull[static_cast<size_t>(ed.v)] != 0;
  if (hu == hv) throw Error("edge " + std::to_string(e) + " is not a leg");
  return hu ? LegEnds{ed.u, ed.v} : LegEnds{ed.v, ed.u};
}

// Distance from every outside vertex to the hull, moving through outside
// vertices only and never using edge `e`.
std::vector<int> distance_to_hull(const Graph& g, std::span<const char> in_hull,
                                  EdgeId e) {
  std::vector<int> dist(static_cast<size_t>(g.n()), kInf);
  std::vector<Vertex> queue;
  for (Vertex h = 0; h < g.n(); ++h) {
    if (!in_hull[static_cast<size_t>(h)]) continue;
    for (const Incidence& inc : g.neighbors(h)) {
      if (inc.edge == e || in_hull[static_cast<size_t>(inc.to)]) continue;
      if (dist[static_cast<size_t>(inc.to)] == kInf) {
        dist[static_cast<size_t>(inc.to)] = 1;
        queue.push_back(inc.to);
      }
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (const Incidence& inc : g.neighbors(x)) {
      if (inc.edge == e || in_hull[static_cast<size_t>(inc.to)]) continue;
      if (dist[static_cast<size_t>(inc.to)] == kInf) {
        dist[static_cast<size_t>(inc.to)] = dist[static_cast<size_t>(x)] + 1;
        queue.push_back(inc.to);
      }
    }
  }
  return dist;
}

bool agrees(const EarContext& ctx, EdgeId e, int label) {
  auto c = ctx.committed(e);
  return !c || *c == label;
}

// Shortest-ear search constrained by committed labels under one reading.
// Returns the lexicographically smallest consistent ear read from the leg's
// hull endpoint, or nullopt.
std::optional<Ear> constrained_search(const EarContext& ctx, EdgeId e,
                                      const LegEnds& ends,
                                      const std::vector<int>& dist,
                                      const EdgeLabeler& labeler,
                                      bool reversed) {
  const Graph& g = ctx.graph();
  const int len = 1 + dist[static_cast<size_t>(ends.outer)];

  // Label of stepping cur -> next where cur sits at forward position p.
  auto step_ok = [&](EdgeId edge, Vertex cur, Vertex next, int p) {
    int label = reversed ? labeler(g, edge, next, len - p, len)
                         : labeler(g, edge, cur, p + 1, len);
    return agrees(ctx, edge, label);
  };
  if (!step_ok(e, ends.foot, ends.outer, 0)) return std::nullopt;

  // feasible[v]: a consistent shortest continuation from v to the hull exists.
  const int top = dist[static_cast<size_t>(ends.outer)];
  std::vector<std::vector<Vertex>> by_dist(static_cast<size_t>(top + 1));
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = dist[static_cast<size_t>(v)];
    if (d != kInf && d <= top) by_dist[static_cast<size_t>(d)].push_back(v);
  }
  std::vector<char> feasible(static_cast<size_t>(g.n()), 0);
  auto next_ok = [&](Vertex cur, const Incidence& inc) {
    const int d = dist[static_cast<size_t>(cur)];
    if (inc.edge == e) return false;
    const bool hull = ctx.in_hull(inc.to);
    if (d == 1 ? !hull
               : (hull || dist[static_cast<size_t>(inc.to)] != d - 1 ||
                  !feasible[static_cast<size_t>(inc.to)])) {
      return false;
    }
    return step_ok(inc.edge, cur, inc.to, len - d);
  };
  for (int d = 1; d <= top; ++d) {
    for (Vertex v : by_dist[static_cast<size_t>(d)]) {
      for (const Incidence& inc : g.neighbors(v)) {
        if (next_ok(v, inc)) {
          feasible[static_cast<size_t>(v)] = 1;
          break;
        }
      }
    }
  }
  if (!feasible[static_cast<size_t>(ends.outer)]) return std::nullopt;

  Ear ear;
  ear.vertices = {ends.foot, ends.outer};
  ear.edges = {e};
  Vertex cur = ends.outer;
  while (!ctx.in_hull(cur)) {
    for (const Incidence& inc : g.neighbors(cur)) {  // ascending neighbor id
      if (next_ok(cur, inc)) {
        ear.vertices.push_back(inc.to);
        ear.edges.push_back(inc.edge);
        cur = inc.to;
        break;
      }
    }
  }
  return ear;
}

std::vector<int> labels_of(const Graph& g, const Ear& ear,
                           const EdgeLabeler& labeler) {
  std::vector<int> labels;
  labels.reserve(ear.edges.size());
  for (int j = 0; j < ear.length(); ++j) {
    labels.push_back(labeler(g, ear.edges[static_cast<size_t>(j)],
                             ear.vertices[static_cast<size_t>(j)], j + 1,
                             ear.length()));
  }
  return labels;
}

}  // namespace

Ear Ear::reversed() const {
  Ear r;
  r.vertices.assign(vertices.rbegin(), vertices.rend());
  r.edges.assign(edges.rbegin(), edges.rend());
  return r;
}

void validate_ear(const Graph& g, std::span<const char> in_hull, const Ear& ear) {
  if (ear.vertices.size() != ear.edges.size() + 1 || ear.length() < 2) {
    throw Error("ear too short");
  }
  if (ear.closed() && ear.length() < 3) throw Error("closed ear shorter than 3");
  if (!in_hull[static_cast<size_t>(ear.first_foot())] ||
      !in_hull[static_cast<size_t>(ear.last_foot())]) {
    throw Error("ear foot outside hull");
  }
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  for (Vertex v : ear.interior()) {
    if (in_hull[static_cast<size_t>(v)]) throw Error("ear interior meets hull");
    if (seen[static_cast<size_t>(v)]++) throw Error("ear repeats a vertex");
  }
  if (!ear.closed() && ear.first_foot() == ear.last_foot()) {
    throw Error("ear repeats a vertex");
  }
  for (int j = 0; j < ear.length(); ++j) {
    auto e = g.find_edge(ear.vertices[static_cast<size_t>(j)],
                         ear.vertices[static_cast<size_t>(j) + 1]);
    if (!e || *e != ear.edges[static_cast<size_t>(j)]) {
      throw Error("ear edge list does not match its vertices");
    }
  }
}

std::vector<EdgeId> legs(const Graph& g, std::span<const Vertex> hull) {
  std::vector<char> in(static_cast<size_t>(g.n()), 0);
  for (Vertex v : hull) in[static_cast<size_t>(v)] = 1;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[static_cast<size_t>(ed.u)] != in[static_cast<size_t>(ed.v)]) {
      out.push_back(e);
    }
  }
  return out;
}

Ear optimal_ear(const Graph& g, std::span<const char> in_hull, EdgeId e) {
  LegEnds ends = leg_ends(g, in_hull, e);
  auto dist = distance_to_hull(g, in_hull, e);
  if (dist[static_cast<size_t>(ends.outer)] == kInf) {
    throw PreconditionError("bridge leg " + std::to_string(e));
  }
  Ear ear;
  ear.vertices = {ends.foot, ends.outer};
  ear.edges = {e};
  Vertex cur = ends.outer;
  while (!in_hull[static_cast<size_t>(cur)]) {
    const int d = dist[static_cast<size_t>(cur)];
    for (const Incidence& inc : g.neighbors(cur)) {
      if (inc.edge == e) continue;
      const bool hull = in_hull[static_cast<size_t>(inc.to)] != 0;
      if (d == 1 ? hull : (!hull && dist[static_cast<size_t>(inc.to)] == d - 1)) {
        ear.vertices.push_back(inc.to);
        ear.edges.push_back(inc.edge);
        cur = inc.to;
        break;
      }
    }
  }
  return ear;
}

Ear optimal_ear(const Graph& g, std::span<const Vertex> hull, EdgeId e) {
  std::vector<char> in(static_cast<size_t>(g.n()), 0);
  for (Vertex v : hull) in[static_cast<size_t>(v)] = 1;
  return optimal_ear(g, in, e);
}

int direction_label(const Graph& g, EdgeId e, Vertex from, int, int) {
  return g.edge(e).u == from ? 0 : 1;
}

int symmetric_slot(int pos, int len) {
  return pos <= (len + 1) / 2 ? pos : -(len + 1 - pos);
}

int symmetric_slot_label(const Graph&, EdgeId, Vertex, int pos, int len) {
  return symmetric_slot(pos, len);
}

EarContext::EarContext(const Graph& g, std::span<const Vertex> hull)
    : g_(&g),
      in_hull_(static_cast<size_t>(g.n()), 0),
      labels_(static_cast<size_t>(g.m()), kNone),
      interior_owner_(static_cast<size_t>(g.n()), -1) {
  for (Vertex v : hull) in_hull_[static_cast<size_t>(v)] = 1;
}

void EarContext::commit(const Ear& ear, std::span<const int> labels) {
  if (labels.size() != ear.edges.size()) throw Error("label count mismatch");
  validate_ear(*g_, in_hull_, ear);
  for (size_t j = 0; j < labels.size(); ++j) {
    int& slot = labels_[static_cast<size_t>(ear.edges[j])];
    if (slot != kNone && slot != labels[j]) {
      throw Error("ear consistency violated on edge " +
                  std::to_string(ear.edges[j]));
    }
  }
  for (size_t j = 0; j < labels.size(); ++j) {
    labels_[static_cast<size_t>(ear.edges[j])] = labels[j];
  }
  const int index = static_cast<int>(ears_.size());
  for (Vertex v : ear.interior()) {
    int& owner = interior_owner_[static_cast<size_t>(v)];
    if (owner < 0) owner = index;
  }
  ears_.push_back(ear);
}

std::vector<Vertex> EarContext::absorb_interiors() {
  std::vector<Vertex> added;
  for (Vertex v = 0; v < g_->n(); ++v) {
    if (!in_hull_[static_cast<size_t>(v)] &&
        interior_owner_[static_cast<size_t>(v)] >= 0) {
      in_hull_[static_cast<size_t>(v)] = 1;
      added.push_back(v);
    }
  }
  return added;
}

std::optional<std::vector<int>> consistent_labels(const EarContext& ctx,
                                                  const Ear& ear,
                                                  const EdgeLabeler& labeler) {
  auto labels = labels_of(ctx.graph(), ear, labeler);
  for (size_t j = 0; j < labels.size(); ++j) {
    if (!agrees(ctx, ear.edges[j], labels[j])) return std::nullopt;
  }
  return labels;
}

std::optional<CompatibleEar> splice_onto_committed(const EarContext& ctx,
                                                   const Ear& ear,
                                                   const EdgeLabeler& labeler) {
  const Graph& g = ctx.graph();
  auto accept = [&](const Ear& candidate,
                    bool spliced) -> std::optional<CompatibleEar> {
    try {
      validate_ear(g, ctx.hull_flags(), candidate);
    } catch (const Error&) {
      return std::nullopt;
    }
    for (const Ear& reading : {candidate, candidate.reversed()}) {
      if (auto labels = consistent_labels(ctx, reading, labeler)) {
        return CompatibleEar{reading, std::move(*labels), ear.first_leg(),
                             spliced};
      }
    }
    return std::nullopt;
  };

  size_t contact = 0;
  for (size_t j = 1; j + 1 < ear.vertices.size(); ++j) {
    if (ctx.ear_of_interior(ear.vertices[j]) >= 0) {
      contact = j;
      break;
    }
  }
  if (contact == 0) return accept(ear, false);

  const Ear& host =
      ctx.ears()[static_cast<size_t>(ctx.ear_of_interior(ear.vertices[contact]))];
  const auto pos = static_cast<size_t>(
      std::find(host.vertices.begin() + 1, host.vertices.end() - 1,
                ear.vertices[contact]) -
      host.vertices.begin());
  const size_t remaining = ear.edges.size() - contact;

  // Toward the host's last foot, then toward its first foot.
  for (bool toward_last : {true, false}) {
    size_t route_len = toward_last ? host.edges.size() - pos : pos;
    if (route_len != remaining) continue;
    Ear candidate;
    candidate.vertices.assign(ear.vertices.begin(),
                              ear.vertices.begin() + static_cast<long>(contact) + 1);
    candidate.edges.assign(ear.edges.begin(),
                           ear.edges.begin() + static_cast<long>(contact));
    for (size_t step = 0; step < route_len; ++step) {
      if (toward_last) {
        candidate.edges.push_back(host.edges[pos + step]);
        candidate.vertices.push_back(host.vertices[pos + step + 1]);
      } else {
        candidate.edges.push_back(host.edges[pos - step - 1]);
        candidate.vertices.push_back(host.vertices[pos - step - 1]);
      }
    }
    if (auto ok = accept(candidate, true)) return ok;
  }
  return std::nullopt;
}

CompatibleEar compatible_ear(const EarContext& ctx, EdgeId e,
                             const EdgeLabeler& labeler,
                             CompatibleEarOptions options) {
  const Graph& g = ctx.graph();
  LegEnds ends = leg_ends(g, ctx.hull_flags(), e);
  auto dist = distance_to_hull(g, ctx.hull_flags(), e);
  if (dist[static_cast<size_t>(ends.outer)] == kInf) {
    throw PreconditionError("bridge leg " + std::to_string(e));
  }

  if (options.mixed_search) {
    auto fwd = constrained_search(ctx, e, ends, dist, labeler, false);
    auto rev = constrained_search(ctx, e, ends, dist, labeler, true);
    if (fwd || rev) {
      bool use_rev = !fwd || (rev && rev->vertices < fwd->vertices);
      Ear ear = use_rev ? rev->reversed() : *fwd;
      auto labels = labels_of(g, ear, labeler);
      return CompatibleEar{std::move(ear), std::move(labels), e, false};
    }
  }

  Ear shortest = optimal_ear(g, ctx.hull_flags(), e);
  if (auto spliced = splice_onto_committed(ctx, shortest, labeler)) {
    spliced->seed_leg = e;
    return *spliced;
  }
  throw Error("ear consistency violated for leg " + std::to_string(e));
}

}  // namespace odrc

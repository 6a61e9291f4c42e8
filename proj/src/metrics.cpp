#include "odrc/metrics.hpp"

#include <algorithm>
#include <thread>

#include "parallel.hpp"

namespace odrc {

DistanceProfile bfs(const Graph& g, Vertex s) {
  if (!g.has_vertex(s)) throw Error("bfs source out of range");
  DistanceProfile p;
  p.source = s;
  p.dist.assign(static_cast<size_t>(g.n()), kInf);
  p.parent.assign(static_cast<size_t>(g.n()), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<size_t>(g.n()));
  p.dist[static_cast<size_t>(s)] = 0;
  queue.push_back(s);
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (const Incidence& inc : g.neighbors(x)) {
      auto& d = p.dist[static_cast<size_t>(inc.to)];
      if (d == kInf) {
        d = p.dist[static_cast<size_t>(x)] + 1;
        p.parent[static_cast<size_t>(inc.to)] = x;
        queue.push_back(inc.to);
      }
    }
  }
  return p;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto p = bfs(g, 0);
  return std::none_of(p.dist.begin(), p.dist.end(),
                      [](int d) { return d == kInf; });
}

std::vector<int> eccentricities(const Graph& g, int threads) {
  std::vector<int> ecc(static_cast<size_t>(g.n()), 0);
  detail::parallel_for(g.n(), threads, [&](int s) {
    auto p = bfs(g, s);
    ecc[static_cast<size_t>(s)] = *std::max_element(p.dist.begin(), p.dist.end());
  });
  return ecc;
}

RadiusDiameter radius_diameter_centers(const Graph& g, int threads) {
  if (g.n() == 0) throw PreconditionError("empty graph");
  auto ecc = eccentricities(g, threads);
  RadiusDiameter r;
  r.radius = *std::min_element(ecc.begin(), ecc.end());
  r.diameter = *std::max_element(ecc.begin(), ecc.end());
  if (r.diameter == kInf) throw PreconditionError("not connected");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (ecc[static_cast<size_t>(v)] == r.radius) r.centers.push_back(v);
  }
  return r;
}

std::vector<Vertex> k_step_neighborhood(const Graph& g, Vertex u, int k,
                                        bool closed) {
  if (k < 0) throw Error("negative neighborhood radius");
  auto p = bfs(g, u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = p.dist[static_cast<size_t>(v)];
    if (d == kInf) continue;
    if (closed ? d <= k : d == k) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> bridges(const Graph& g) {
  // Iterative low-link DFS; the parent edge is skipped by id so the check
  // stays correct without relying on simple-graph uniqueness.
  const int n = g.n();
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<EdgeId> result;
  struct Frame {
    Vertex v;
    EdgeId via;
    size_t next;
  };
  std::vector<Frame> stack;
  int tick = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] >= 0) continue;
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = tick++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Incidence inc = nbrs[f.next++];
        if (inc.edge == f.via) continue;
        auto to = static_cast<size_t>(inc.to);
        if (disc[to] < 0) {
          disc[to] = low[to] = tick++;
          stack.push_back({inc.to, inc.edge, 0});
        } else {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[to]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto parent = static_cast<size_t>(stack.back().v);
        auto child = static_cast<size_t>(done.v);
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] > disc[parent]) result.push_back(done.via);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

int girth(const Graph& g) {
  int best = kInf;
  for (Vertex s = 0; s < g.n(); ++s) {
    auto p = bfs(g, s);
    for (const Edge& e : g.edges()) {
      int du = p.dist[static_cast<size_t>(e.u)];
      int dv = p.dist[static_cast<size_t>(e.v)];
      if (du == kInf) continue;
      // Non-tree edges close a cycle through s of length at most du+dv+1;
      // the minimum over all sources is exact.
      if (p.parent[static_cast<size_t>(e.u)] == e.v ||
          p.parent[static_cast<size_t>(e.v)] == e.u) {
        continue;
      }
      best = std::min(best, du + dv + 1);
    }
  }
  return best;
}

int min_degree(const Graph& g) {
  int d = g.n() == 0 ? 0 : kInf;
  for (Vertex v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

Bipartition bipartition(const Graph& g) {
  Bipartition b;
  std::vector<int> side(static_cast<size_t>(g.n()), -1);
  std::vector<Vertex> parent(static_cast<size_t>(g.n()), -1);
  for (Vertex root = 0; root < g.n(); ++root) {
    if (side[static_cast<size_t>(root)] >= 0) continue;
    side[static_cast<size_t>(root)] = 0;
    std::vector<Vertex> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (const Incidence& inc : g.neighbors(x)) {
        auto& s = side[static_cast<size_t>(inc.to)];
        if (s < 0) {
          s = 1 - side[static_cast<size_t>(x)];
          parent[static_cast<size_t>(inc.to)] = x;
          queue.push_back(inc.to);
        } else if (s == side[static_cast<size_t>(x)]) {
          // Odd cycle: x .. lca .. inc.to plus the edge back to x.
          std::vector<Vertex> up_x{x}, up_y{inc.to};
          while (up_x.back() != -1) up_x.push_back(parent[static_cast<size_t>(up_x.back())]);
          while (up_y.back() != -1) up_y.push_back(parent[static_cast<size_t>(up_y.back())]);
          up_x.pop_back();
          up_y.pop_back();
          while (up_x.size() > 1 && up_y.size() > 1 &&
                 up_x[up_x.size() - 2] == up_y[up_y.size() - 2]) {
            up_x.pop_back();
            up_y.pop_back();
          }
          b.odd_cycle = up_x;
          for (auto it = up_y.rbegin() + 1; it != up_y.rend(); ++it) {
            b.odd_cycle.push_back(*it);
          }
          b.odd_cycle.push_back(x);
          b.bipartite = false;
          return b;
        }
      }
    }
  }
  b.bipartite = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    (side[static_cast<size_t>(v)] == 0 ? b.left : b.right).push_back(v);
  }
  return b;
}

}  // namespace odrc

#include "odrc/cycles.hpp"

#include <algorithm>

#include "odrc/metrics.hpp"
#include "parallel.hpp"

namespace odrc {
namespace {

// BFS from e.u to e.v avoiding edge e; returns the parent array (or empty
// when v is unreachable).
std::vector<Vertex> bfs_without_edge(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::vector<Vertex> parent(static_cast<size_t>(g.n()), -2);
  std::vector<Vertex> queue{ed.u};
  parent[static_cast<size_t>(ed.u)] = -1;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (const Incidence& inc : g.neighbors(x)) {
      if (inc.edge == e || parent[static_cast<size_t>(inc.to)] != -2) continue;
      parent[static_cast<size_t>(inc.to)] = x;
      if (inc.to == ed.v) return parent;
      queue.push_back(inc.to);
    }
  }
  return {};
}

std::vector<std::vector<int>> all_pairs(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<size_t>(g.n()));
  for (Vertex s = 0; s < g.n(); ++s) d.push_back(bfs(g, s).dist);
  return d;
}

struct CycleSearch {
  const Graph& g;
  const std::vector<std::vector<int>>& dist;
  int max_len;
  std::vector<Vertex> path;
  std::vector<char> on_path;
  std::vector<Vertex> best;

  int d(Vertex a, Vertex b) const {
    return dist[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }

  // Every subpath of an isometric cycle of length L that is no longer than
  // floor(L/2) is a shortest path; L > current edge count bounds L from below.
  bool prefix_feasible() const {
    const int k = static_cast<int>(path.size()) - 1;
    const int limit = (k + 1) / 2;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b <= k && b - a <= limit; ++b) {
        if (d(path[static_cast<size_t>(a)], path[static_cast<size_t>(b)]) != b - a) {
          return false;
        }
      }
    }
    return true;
  }

  bool closes_isometric() const {
    const int len = static_cast<int>(path.size());
    for (int a = 0; a < len; ++a) {
      for (int b = a + 1; b < len; ++b) {
        int along = std::min(b - a, len - (b - a));
        if (d(path[static_cast<size_t>(a)], path[static_cast<size_t>(b)]) != along) {
          return false;
        }
      }
    }
    return true;
  }

  void extend() {
    const Vertex start = path.front();
    const Vertex last = path.back();
    const int k = static_cast<int>(path.size()) - 1;
    if (k >= 2 && path[1] < last && g.find_edge(last, start) &&
        k + 1 > static_cast<int>(best.size()) && closes_isometric()) {
      best = path;
    }
    if (k + 1 >= max_len) return;
    for (const Incidence& inc : g.neighbors(last)) {
      if (inc.to <= start || on_path[static_cast<size_t>(inc.to)]) continue;
      path.push_back(inc.to);
      if (prefix_feasible()) {
        on_path[static_cast<size_t>(inc.to)] = 1;
        extend();
        on_path[static_cast<size_t>(inc.to)] = 0;
      }
      path.pop_back();
    }
  }
};

}  // namespace

int shortest_cycle_through_edge(const Graph& g, EdgeId e) {
  auto parent = bfs_without_edge(g, e);
  if (parent.empty()) return kInf;
  int len = 1;
  for (Vertex x = g.edge(e).v; parent[static_cast<size_t>(x)] != -1;
       x = parent[static_cast<size_t>(x)]) {
    ++len;
  }
  return len;
}

std::vector<Vertex> shortest_cycle_witness(const Graph& g, EdgeId e) {
  auto parent = bfs_without_edge(g, e);
  if (parent.empty()) return {};
  std::vector<Vertex> chain;  // v, ..., u along the BFS tree of G - e
  for (Vertex x = g.edge(e).v; x != -1; x = parent[static_cast<size_t>(x)]) {
    chain.push_back(x);
  }
  std::vector<Vertex> cycle{chain.back()};
  cycle.insert(cycle.end(), chain.begin(), chain.end() - 1);
  return cycle;
}

CycleCoverReport cycle_cover(const Graph& g, bool with_witnesses, int threads) {
  CycleCoverReport r;
  r.per_edge.assign(static_cast<size_t>(g.m()), kInf);
  if (with_witnesses) r.witnesses.resize(static_cast<size_t>(g.m()));
  detail::parallel_for(g.m(), threads, [&](EdgeId e) {
    if (with_witnesses) {
      auto w = shortest_cycle_witness(g, e);
      r.per_edge[static_cast<size_t>(e)] =
          w.empty() ? kInf : static_cast<int>(w.size());
      r.witnesses[static_cast<size_t>(e)] = std::move(w);
    } else {
      r.per_edge[static_cast<size_t>(e)] = shortest_cycle_through_edge(g, e);
    }
  });
  r.eta = r.per_edge.empty()
              ? 0
              : *std::max_element(r.per_edge.begin(), r.per_edge.end());
  return r;
}

int eta(const Graph& g, int threads) { return cycle_cover(g, false, threads).eta; }

bool is_isometric_cycle(const Graph& g, std::span<const Vertex> cycle) {
  std::vector<Vertex> c(cycle.begin(), cycle.end());
  if (c.size() > 1 && c.front() == c.back()) c.pop_back();
  if (c.size() < 3) throw Error("not a cycle: fewer than 3 vertices");
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (!g.has_vertex(c[i])) throw Error("not a cycle: vertex out of range");
    if (seen[static_cast<size_t>(c[i])]++) {
      throw Error("not a cycle: repeated vertex");
    }
    if (!g.find_edge(c[i], c[(i + 1) % c.size()])) {
      throw Error("not a cycle: missing edge");
    }
  }
  const int len = static_cast<int>(c.size());
  for (int a = 0; a < len; ++a) {
    auto p = bfs(g, c[static_cast<size_t>(a)]);
    for (int b = a + 1; b < len; ++b) {
      int along = std::min(b - a, len - (b - a));
      if (p.dist[static_cast<size_t>(c[static_cast<size_t>(b)])] != along) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Vertex> longest_isometric_cycle(const Graph& g, int max_n) {
  if (g.n() > max_n) throw PreconditionError("too large for exact zeta");
  auto dist = all_pairs(g);
  int diameter = 0;
  for (const auto& row : dist) {
    for (int d : row) {
      if (d != kInf) diameter = std::max(diameter, d);
    }
  }
  CycleSearch search{g, dist, 2 * diameter + 1, {}, {}, {}};
  search.on_path.assign(static_cast<size_t>(g.n()), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    search.path = {s};
    search.on_path[static_cast<size_t>(s)] = 1;
    search.extend();
    search.on_path[static_cast<size_t>(s)] = 0;
  }
  return search.best;
}

int zeta_bruteforce(const Graph& g, int max_n) {
  return static_cast<int>(longest_isometric_cycle(g, max_n).size());
}

}  // namespace odrc

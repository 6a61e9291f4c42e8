#include "odrc/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>

#include "odrc/metrics.hpp"
#include "parallel.hpp"

namespace odrc {
namespace {

std::vector<std::vector<Vertex>> out_lists(const Graph& g, const Orientation& o,
                                           bool reverse) {
  std::vector<std::vector<Vertex>> adj(static_cast<size_t>(g.n()));
  for (EdgeId e = 0; e < g.m(); ++e) {
    Arc a = o.arc(g, e);
    if (reverse) std::swap(a.tail, a.head);
    adj[static_cast<size_t>(a.tail)].push_back(a.head);
  }
  return adj;
}

std::vector<int> directed_bfs(const std::vector<std::vector<Vertex>>& adj,
                              Vertex s) {
  std::vector<int> dist(adj.size(), kInf);
  std::vector<Vertex> queue{s};
  dist[static_cast<size_t>(s)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : adj[static_cast<size_t>(x)]) {
      if (dist[static_cast<size_t>(y)] != kInf) continue;
      dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

// Orientation search on bitmask adjacency (n <= 64).
struct MaskSearch {
  const Graph& g;
  int n;
  std::vector<uint64_t> out, in;
  std::vector<int> out_ecc, in_ecc;

  explicit MaskSearch(const Graph& graph)
      : g(graph),
        n(graph.n()),
        out(static_cast<size_t>(n)),
        in(static_cast<size_t>(n)),
        out_ecc(static_cast<size_t>(n)),
        in_ecc(static_cast<size_t>(n)) {}

  void load(uint64_t mask) {
    std::fill(out.begin(), out.end(), 0);
    std::fill(in.begin(), in.end(), 0);
    for (EdgeId e = 0; e < g.m(); ++e) {
      Vertex a = g.edge(e).u, b = g.edge(e).v;
      if ((mask >> e) & 1U) std::swap(a, b);
      out[static_cast<size_t>(a)] |= uint64_t{1} << b;
      in[static_cast<size_t>(b)] |= uint64_t{1} << a;
    }
  }

  uint64_t full() const { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

  uint64_t closure(const std::vector<uint64_t>& adj, Vertex s) const {
    uint64_t reach = uint64_t{1} << s, frontier = reach;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f; f &= f - 1) {
        next |= adj[static_cast<size_t>(std::countr_zero(f))];
      }
      frontier = next & ~reach;
      reach |= frontier;
    }
    return reach;
  }

  bool strong() const {
    return closure(out, 0) == full() && closure(in, 0) == full();
  }

  // Fills out_ecc and in_ecc; assumes strong.
  void eccentricities() {
    std::fill(in_ecc.begin(), in_ecc.end(), 0);
    for (Vertex s = 0; s < n; ++s) {
      uint64_t reach = uint64_t{1} << s, frontier = reach;
      int d = 0;
      while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) {
          next |= out[static_cast<size_t>(std::countr_zero(f))];
        }
        frontier = next & ~reach;
        reach |= frontier;
        if (frontier) {
          ++d;
          for (uint64_t f = frontier; f; f &= f - 1) {
            int t = std::countr_zero(f);
            in_ecc[static_cast<size_t>(t)] = std::max(in_ecc[static_cast<size_t>(t)], d);
          }
        }
      }
      out_ecc[static_cast<size_t>(s)] = d;
    }
  }
};

struct ChunkResult {
  int best_diam = kInf;
  int best_rad = kInf;
  uint64_t best_mask = 0;
  long long strong = 0;
};

// Exact (vertex, used colors) search from one source.
class RainbowSearcher {
 public:
  RainbowSearcher(const Graph& g, std::span<const int> colors, int k)
      : g_(g), colors_(colors), k_(k),
        visited_((static_cast<size_t>(g.n()) << k) / 64 + 1) {}

  // Searches from x towards every y > x. Returns the first unreachable
  // target, or -1. When `paths` is given, fills paths[y] for reached y.
  Vertex run(Vertex x, std::vector<std::vector<Vertex>>* paths) {
    std::fill(visited_.begin(), visited_.end(), 0);
    queue_.clear();
    const int n = g_.n();
    std::vector<int> hit(static_cast<size_t>(n), -1);
    int remaining = n - 1 - x;
    visit(x, 0);
    queue_.push_back({x, 0, -1});
    for (size_t head = 0; head < queue_.size() && remaining > 0; ++head) {
      const State s = queue_[head];
      for (const Incidence& inc : g_.neighbors(s.v)) {
        uint32_t bit = uint32_t{1} << colors_[static_cast<size_t>(inc.edge)];
        if (s.mask & bit) continue;
        uint32_t mask = s.mask | bit;
        if (!visit(inc.to, mask)) continue;
        queue_.push_back({inc.to, mask, static_cast<int>(head)});
        if (inc.to > x && hit[static_cast<size_t>(inc.to)] < 0) {
          hit[static_cast<size_t>(inc.to)] = static_cast<int>(queue_.size()) - 1;
          --remaining;
        }
      }
    }
    Vertex failing = -1;
    for (Vertex y = x + 1; y < n; ++y) {
      if (hit[static_cast<size_t>(y)] < 0) {
        if (failing < 0) failing = y;
        continue;
      }
      if (!paths) continue;
      std::vector<Vertex> p;
      for (int q = hit[static_cast<size_t>(y)]; q >= 0; q = queue_[static_cast<size_t>(q)].parent) {
        p.push_back(queue_[static_cast<size_t>(q)].v);
      }
      std::reverse(p.begin(), p.end());
      (*paths)[static_cast<size_t>(y)] = std::move(p);
    }
    return failing;
  }

 private:
  struct State {
    Vertex v;
    uint32_t mask;
    int parent;
  };

  bool visit(Vertex v, uint32_t mask) {
    size_t idx = (static_cast<size_t>(v) << k_) | mask;
    uint64_t& word = visited_[idx / 64];
    uint64_t bit = uint64_t{1} << (idx % 64);
    if (word & bit) return false;
    word |= bit;
    return true;
  }

  const Graph& g_;
  std::span<const int> colors_;
  int k_;
  std::vector<uint64_t> visited_;
  std::vector<State> queue_;
};

bool rainbow_connected(const Graph& g, std::span<const int> colors, int k) {
  RainbowSearcher search(g, colors, k);
  for (Vertex x = 0; x + 1 < g.n(); ++x) {
    if (search.run(x, nullptr) >= 0) return false;
  }
  return true;
}

// Canonical colorings of edges [pos, m) with exactly k colors, given `used`
// colors so far. Stops early once `found` is set.
bool extend_coloring(const Graph& g, std::vector<int>& colors, int pos, int used,
                     int k, const std::atomic<bool>& found) {
  const int m = g.m();
  if (found.load(std::memory_order_relaxed)) return false;
  if (k - used > m - pos) return false;
  if (pos == m) return used == k && rainbow_connected(g, colors, k);
  for (int c = 0; c <= std::min(used, k - 1); ++c) {
    colors[static_cast<size_t>(pos)] = c;
    if (extend_coloring(g, colors, pos + 1, std::max(used, c + 1), k, found)) {
      return true;
    }
  }
  return false;
}

void collect_prefixes(int m, int depth, int k, std::vector<int>& cur, int used,
                      std::vector<std::pair<std::vector<int>, int>>& out) {
  if (static_cast<int>(cur.size()) == depth) {
    out.emplace_back(cur, used);
    return;
  }
  for (int c = 0; c <= std::min(used, k - 1); ++c) {
    cur.push_back(c);
    collect_prefixes(m, depth, k, cur, std::max(used, c + 1), out);
    cur.pop_back();
  }
}

}  // namespace

bool is_strongly_connected(const Graph& g, const Orientation& o) {
  check_matches(g, o);
  if (g.n() <= 1) return true;
  for (bool rev : {false, true}) {
    auto d = directed_bfs(out_lists(g, o, rev), 0);
    if (std::find(d.begin(), d.end(), kInf) != d.end()) return false;
  }
  return true;
}

std::vector<std::vector<int>> directed_distances(const Graph& g,
                                                 const Orientation& o,
                                                 int threads) {
  check_matches(g, o);
  auto adj = out_lists(g, o, false);
  std::vector<std::vector<int>> d(static_cast<size_t>(g.n()));
  detail::parallel_for(g.n(), threads, [&](int s) {
    d[static_cast<size_t>(s)] = directed_bfs(adj, s);
  });
  return d;
}

std::optional<DirectedRadDiam> directed_rad_diam(const Graph& g,
                                                 const Orientation& o,
                                                 int threads) {
  auto d = directed_distances(g, o, threads);
  const size_t n = d.size();
  DirectedRadDiam r;
  r.eccentricity.assign(n, 0);
  for (size_t s = 0; s < n; ++s) {
    for (size_t t = 0; t < n; ++t) {
      int x = d[s][t];
      if (x == kInf) return std::nullopt;
      r.diameter = std::max(r.diameter, x);
      r.eccentricity[s] = std::max(r.eccentricity[s], x);
      r.eccentricity[t] = std::max(r.eccentricity[t], x);
    }
  }
  r.radius = n == 0 ? 0 : *std::min_element(r.eccentricity.begin(), r.eccentricity.end());
  return r;
}

OrientationSearchResult optimal_oriented_diameter(const Graph& g, int max_edges,
                                                  int threads) {
  if (g.m() > max_edges || g.m() > 40) {
    throw PreconditionError("use bounds instead");
  }
  if (g.n() > 64) throw PreconditionError("use bounds instead");
  OrientationSearchResult res;
  const uint64_t total = uint64_t{1} << g.m();
  res.enumerated = static_cast<long long>(total);
  if (g.n() <= 1) {
    res.best_diam = 0;
    res.best_rad = 0;
    res.best_orientation = Orientation::all_forward(g);
    res.strong_count = static_cast<long long>(total);
    return res;
  }
  const int chunks = static_cast<int>(std::min<uint64_t>(total, 256));
  std::vector<ChunkResult> parts(static_cast<size_t>(chunks));
  detail::parallel_for(chunks, threads, [&](int c) {
    MaskSearch ms(g);
    ChunkResult& r = parts[static_cast<size_t>(c)];
    uint64_t lo = total * static_cast<uint64_t>(c) / static_cast<uint64_t>(chunks);
    uint64_t hi = total * static_cast<uint64_t>(c + 1) / static_cast<uint64_t>(chunks);
    for (uint64_t mask = lo; mask < hi; ++mask) {
      ms.load(mask);
      if (!ms.strong()) continue;
      ++r.strong;
      ms.eccentricities();
      int diam = *std::max_element(ms.out_ecc.begin(), ms.out_ecc.end());
      int rad = kInf;
      for (size_t v = 0; v < ms.out_ecc.size(); ++v) {
        rad = std::min(rad, std::max(ms.out_ecc[v], ms.in_ecc[v]));
      }
      r.best_rad = std::min(r.best_rad, rad);
      if (diam < r.best_diam) {
        r.best_diam = diam;
        r.best_mask = mask;
      }
    }
  });
  uint64_t best_mask = 0;
  for (const ChunkResult& r : parts) {
    res.strong_count += r.strong;
    res.best_rad = std::min(res.best_rad, r.best_rad);
    if (r.best_diam < res.best_diam) {
      res.best_diam = r.best_diam;
      best_mask = r.best_mask;
    }
  }
  if (res.strong_count == 0) throw PreconditionError("no strong orientation");
  std::vector<Direction> dirs(static_cast<size_t>(g.m()));
  for (EdgeId e = 0; e < g.m(); ++e) {
    dirs[static_cast<size_t>(e)] =
        (best_mask >> e) & 1U ? Direction::backward : Direction::forward;
  }
  res.best_orientation = Orientation(std::move(dirs));
  return res;
}

RainbowCheck is_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                  int max_colors, bool with_witnesses,
                                  int threads) {
  check_matches(g, c);
  if (c.color_count() > max_colors || c.color_count() > 24) {
    throw PreconditionError("use certificates");
  }
  const int n = g.n();
  const int k = c.color_count();
  std::vector<Vertex> failing(static_cast<size_t>(n), -1);
  std::vector<std::vector<std::vector<Vertex>>> paths(
      with_witnesses ? static_cast<size_t>(n) : 0);
  const int workers = std::max(1, std::min(threads, n));
  detail::parallel_for(n, workers, [&](int x) {
    RainbowSearcher search(g, c.colors(), k);
    std::vector<std::vector<Vertex>>* out = nullptr;
    if (with_witnesses) {
      paths[static_cast<size_t>(x)].resize(static_cast<size_t>(n));
      out = &paths[static_cast<size_t>(x)];
    }
    failing[static_cast<size_t>(x)] = search.run(x, out);
  });
  RainbowCheck res;
  res.connected = true;
  for (Vertex x = 0; x < n; ++x) {
    if (failing[static_cast<size_t>(x)] >= 0) {
      res.connected = false;
      res.failing_pair = std::make_pair(x, failing[static_cast<size_t>(x)]);
      break;
    }
  }
  if (with_witnesses && res.connected) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        res.witnesses.push_back(
            std::move(paths[static_cast<size_t>(x)][static_cast<size_t>(y)]));
      }
    }
  }
  return res;
}

int exact_rc(const Graph& g, int max_edges, int threads) {
  if (g.m() > max_edges || g.m() > 24) {
    throw PreconditionError("too large for exact rainbow connection");
  }
  auto rd = radius_diameter_centers(g);
  if (g.n() <= 1) return 0;
  for (int k = std::max(1, rd.diameter); k < g.m(); ++k) {
    const int depth = std::min(g.m(), 8);
    std::vector<std::pair<std::vector<int>, int>> prefixes;
    std::vector<int> cur;
    collect_prefixes(g.m(), depth, k, cur, 0, prefixes);
    std::atomic<bool> found{false};
    detail::parallel_for(static_cast<int>(prefixes.size()), threads, [&](int i) {
      if (found.load(std::memory_order_relaxed)) return;
      auto& [prefix, used] = prefixes[static_cast<size_t>(i)];
      std::vector<int> colors(static_cast<size_t>(g.m()), 0);
      std::copy(prefix.begin(), prefix.end(), colors.begin());
      if (extend_coloring(g, colors, depth, used, k, found)) found = true;
    });
    if (found) return k;
  }
  // Distinct colors on every edge make every path rainbow.
  return g.m();
}

}  // namespace odrc

#include "odrc/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace odrc {
namespace {

struct EdgeList {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  Vertex add_vertex() { return n++; }
  void add(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  Graph build() const {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }
};

void add_triangle_tree(EdgeList& out, Vertex root, int depth) {
  Vertex a = out.add_vertex();
  Vertex b = out.add_vertex();
  out.add(root, a);
  out.add(root, b);
  out.add(a, b);
  if (depth > 1) {
    add_triangle_tree(out, a, depth - 1);
    add_triangle_tree(out, b, depth - 1);
  }
}

int param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw Error("family " + spec.family + " needs parameter " + key);
  }
  return it->second;
}

}  // namespace

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw Error("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = engine_.max() - engine_.max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Graph gen_triangle_tree(int depth) {
  if (depth < 1 || depth > 8) throw Error("triangle tree depth must be in 1..8");
  EdgeList out;
  Vertex root = out.add_vertex();
  add_triangle_tree(out, root, depth);
  add_triangle_tree(out, root, depth);
  return out.build();
}

int extremal_rc_default_copies(int r, int eta) {
  long long s = 0;
  for (int i = 1; i <= r; ++i) s += std::min(2 * i + 1, eta);
  long long copies = 1;
  for (int i = 0; i < r; ++i) {
    copies *= s;
    if (copies > 1000000000LL) throw Error("default copy count too large");
  }
  return static_cast<int>(copies + 1);
}

Graph gen_extremal_rc(int r, int eta, std::optional<int> copies, int max_vertices) {
  if (r < 1 || eta < 3 || eta > 2 * r + 1) {
    throw Error("extremal_rc needs r >= 1 and 3 <= eta <= 2r+1");
  }
  const int count = copies ? *copies : extremal_rc_default_copies(r, eta);
  if (count < 1) throw Error("copies must be positive");
  long long per_copy = r;
  for (int i = 1; i <= r; ++i) per_copy += std::min(2 * i, eta - 1) - 1;
  if (1 + per_copy * count > max_vertices) {
    throw Error("extremal_rc instance too large; pass a smaller copy count");
  }
  EdgeList out;
  Vertex hub = out.add_vertex();
  for (int c = 0; c < count; ++c) {
    Vertex prev = hub;
    for (int i = 1; i <= r; ++i) {
      Vertex next = out.add_vertex();
      out.add(prev, next);
      const int len = std::min(2 * i, eta - 1);
      Vertex at = prev;
      for (int j = 1; j < len; ++j) {
        Vertex w = out.add_vertex();
        out.add(at, w);
        at = w;
      }
      out.add(at, next);
      prev = next;
    }
  }
  return out.build();
}

Graph gen_wheel_example(int r, int k) {
  if (r < 3 || k < 2 * r) throw Error("wheel_example needs r >= 3 and k >= 2r");
  EdgeList base;
  Vertex hub = base.add_vertex();
  std::vector<Vertex> rim(static_cast<size_t>(k));
  for (auto& v : rim) v = base.add_vertex();
  for (int i = 0; i < k; ++i) {
    base.add(rim[static_cast<size_t>(i)], rim[static_cast<size_t>((i + 1) % k)]);
  }
  for (Vertex tip : rim) {
    Vertex at = hub;
    for (int j = 1; j < r; ++j) {
      Vertex w = base.add_vertex();
      base.add(at, w);
      at = w;
    }
    base.add(at, tip);
  }
  EdgeList out = base;
  for (auto [a, b] : base.edges) {
    Vertex apex = out.add_vertex();
    out.add(a, apex);
    out.add(b, apex);
  }
  return out.build();
}

Graph gen_random_bridgeless(int n, int extra_ears, std::uint64_t seed) {
  if (n < 3) throw Error("random_bridgeless needs n >= 3");
  Rng rng(seed);
  std::vector<Vertex> label(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<size_t>(i)] = i;
  rng.shuffle(label);

  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto add = [&](Vertex a, Vertex b) {
    a = label[static_cast<size_t>(a)];
    b = label[static_cast<size_t>(b)];
    present.insert(std::minmax(a, b));
    edges.emplace_back(a, b);
  };

  int used = rng.uniform(3, std::min(n, 6));
  for (int i = 0; i < used; ++i) add(i, (i + 1) % used);
  while (used < n) {
    const int len = rng.uniform(2, std::min(5, n - used + 1));
    Vertex a = rng.uniform(0, used - 1);
    Vertex b = rng.uniform(0, used - 1);
    if (len == 2 && a == b) continue;
    Vertex at = a;
    for (int j = 1; j < len; ++j) {
      add(at, used);
      at = used++;
    }
    add(at, b);
  }
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  for (int i = 0; i < extra_ears && static_cast<long long>(edges.size()) < max_edges;) {
    Vertex a = rng.uniform(0, n - 1);
    Vertex b = rng.uniform(0, n - 1);
    if (a == b || present.count(std::minmax(label[static_cast<size_t>(a)],
                                            label[static_cast<size_t>(b)]))) {
      continue;
    }
    add(a, b);
    ++i;
  }
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph gen_bipartite_dense(int n, int m, std::uint64_t seed) {
  if (n < 2 || m < 2) throw Error("bipartite_dense needs n, m >= 2");
  Rng rng(seed);
  std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                     std::vector<char>(static_cast<size_t>(m), 0));
  const int need_left = (m + 1) / 2 + 1;
  const int need_right = (n + 1) / 2 + 1;
  for (int a = 0; a < n; ++a) {
    std::vector<int> right(static_cast<size_t>(m));
    for (int b = 0; b < m; ++b) right[static_cast<size_t>(b)] = b;
    rng.shuffle(right);
    for (int j = 0; j < std::min(need_left, m); ++j) {
      adj[static_cast<size_t>(a)][static_cast<size_t>(right[static_cast<size_t>(j)])] = 1;
    }
  }
  for (int b = 0; b < m; ++b) {
    std::vector<int> left;
    for (int a = 0; a < n; ++a) {
      if (!adj[static_cast<size_t>(a)][static_cast<size_t>(b)]) left.push_back(a);
    }
    rng.shuffle(left);
    int deg = n - static_cast<int>(left.size());
    for (size_t j = 0; deg < need_right && j < left.size(); ++j, ++deg) {
      adj[static_cast<size_t>(left[j])][static_cast<size_t>(b)] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      char& cell = adj[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (!cell && rng.unit() < 0.1) cell = 1;
    }
  }
  Graph g(n + m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      if (adj[static_cast<size_t>(a)][static_cast<size_t>(b)]) g.add_edge(a, n + b);
    }
  }
  return g;
}

Graph gen_disconnected_counterexample(int n, int m) {
  if (n < 2 || m < 2 || n % 2 || m % 2) {
    throw Error("disconnected_counterexample needs even n, m >= 2");
  }
  const int a = n / 2, b = m / 2;
  Graph g(n + m);
  for (int copy = 0; copy < 2; ++copy) {
    const int base = copy * (a + b);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) g.add_edge(base + i, base + a + j);
    }
  }
  return g;
}

Graph generate(const FamilySpec& spec) {
  const auto& f = spec.family;
  if (f == "triangle_tree") return gen_triangle_tree(param(spec, "depth"));
  if (f == "extremal_rc") {
    std::optional<int> copies;
    if (spec.params.count("copies")) copies = param(spec, "copies");
    return gen_extremal_rc(param(spec, "r"), param(spec, "eta"), copies);
  }
  if (f == "wheel_example") return gen_wheel_example(param(spec, "r"), param(spec, "k"));
  if (f == "random_bridgeless") {
    int extra = spec.params.count("extra_ears") ? param(spec, "extra_ears") : 0;
    return gen_random_bridgeless(param(spec, "n"), extra, spec.seed);
  }
  if (f == "bipartite_dense") {
    return gen_bipartite_dense(param(spec, "n"), param(spec, "m"), spec.seed);
  }
  if (f == "disconnected_counterexample") {
    return gen_disconnected_counterexample(param(spec, "n"), param(spec, "m"));
  }
  throw Error("unknown family: " + f);
}

}  // namespace odrc

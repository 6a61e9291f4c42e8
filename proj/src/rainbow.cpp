#include "odrc/rainbow.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "layered.hpp"

namespace odrc {

int rainbow_color_bound(int rad, int eta) {
  if (rad < 0 || eta < 3) throw Error("color bound needs rad >= 0 and eta >= 3");
  int total = 0;
  for (int i = 1; i <= rad; ++i) total += std::min(2 * i + 1, eta);
  return total;
}

std::vector<int> symmetric_color(const Ear& ear, std::span<const int> alpha,
                                 std::span<const int> beta,
                                 std::span<const int> committed) {
  const int len = ear.length();
  const int half_up = (len + 1) / 2;
  if (static_cast<int>(alpha.size()) < half_up ||
      static_cast<int>(beta.size()) < len / 2) {
    throw Error("color pool too small for ear of length " + std::to_string(len));
  }
  std::vector<int> colors(static_cast<size_t>(len));
  for (int pos = 1; pos <= len; ++pos) {
    int slot = symmetric_slot(pos, len);
    int c = slot > 0 ? alpha[static_cast<size_t>(slot - 1)]
                     : beta[static_cast<size_t>(-slot - 1)];
    EdgeId e = ear.edges[static_cast<size_t>(pos - 1)];
    if (!committed.empty() && committed[static_cast<size_t>(e)] >= 0 &&
        committed[static_cast<size_t>(e)] != c) {
      throw Error("ear consistency violated on edge " + std::to_string(e));
    }
    colors[static_cast<size_t>(pos - 1)] = c;
  }
  return colors;
}

RainbowResult rainbow_color(const Graph& g) {
  auto layered = detail::build_layered_ears(g, symmetric_slot_label);
  ColorTrace t;
  t.center = layered.center;
  t.radius = layered.radius;
  t.eta = layered.eta;
  t.bound = t.radius == 0 ? 0 : rainbow_color_bound(t.radius, t.eta);

  std::vector<int> colors(static_cast<size_t>(g.m()), -1);
  int base = 0;
  for (auto& layer : layered.layers) {
    ColorLayer out;
    out.index = layer.index;
    out.pool_capacity = layer.length_cap;
    out.absorbed = layer.absorbed;
    int longest = 0;
    for (const auto& ce : layer.ears) longest = std::max(longest, ce.ear.length());
    for (int j = 1; j <= (longest + 1) / 2; ++j) out.pool_alpha.push_back(base + 2 * (j - 1));
    for (int j = 1; j <= longest / 2; ++j) out.pool_beta.push_back(base + 2 * j - 1);
    for (auto& ce : layer.ears) {
      auto c = symmetric_color(ce.ear, out.pool_alpha, out.pool_beta, colors);
      for (size_t j = 0; j < c.size(); ++j) {
        colors[static_cast<size_t>(ce.ear.edges[j])] = c[j];
      }
      if (ce.used_fallback) ++t.fallback_count;
      out.ears.push_back({ce.ear, std::move(c), ce.seed_leg, ce.used_fallback});
    }
    base += longest;
    t.layers.push_back(std::move(out));
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (colors[static_cast<size_t>(e)] >= 0) continue;
    colors[static_cast<size_t>(e)] = t.completion_color;
    t.completed_edges.push_back(e);
  }
  t.total_colors = base;
  return {EdgeColoring(std::move(colors)), std::move(t)};
}

CertificateBuilder::CertificateBuilder(const Graph& g, const ColorTrace& trace)
    : g_(g), trace_(trace), home_(static_cast<size_t>(g.n())) {
  if (!g.has_vertex(trace.center)) throw Error("trace does not match graph: center");
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  seen[static_cast<size_t>(trace.center)] = 1;
  for (const ColorLayer& layer : trace.layers) {
    for (const ColoredEar& ce : layer.ears) {
      const Ear& ear = ce.ear;
      if (ear.vertices.size() != ear.edges.size() + 1 ||
          ce.colors.size() != ear.edges.size() || ear.edges.empty()) {
        throw Error("trace does not match graph: malformed ear");
      }
      for (size_t j = 0; j < ear.edges.size(); ++j) {
        auto e = g.find_edge(ear.vertices[j], ear.vertices[j + 1]);
        if (!e || *e != ear.edges[j]) {
          throw Error("trace does not match graph: ear edge");
        }
      }
      const int idx = static_cast<int>(ears_.size());
      ears_.push_back({&ce, layer.index});
      for (size_t j = 1; j + 1 < ear.vertices.size(); ++j) {
        Vertex v = ear.vertices[j];
        if (seen[static_cast<size_t>(v)]) continue;
        seen[static_cast<size_t>(v)] = 1;
        home_[static_cast<size_t>(v)] = {layer.index, idx, static_cast<int>(j)};
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error("trace does not match graph: uncovered vertex");
  }
}

std::vector<Vertex> CertificateBuilder::to_foot(Vertex x, bool front) const {
  const Home& h = home_[static_cast<size_t>(x)];
  const auto& vs = ears_[static_cast<size_t>(h.ear)].ear->ear.vertices;
  std::vector<Vertex> out;
  if (front) {
    for (int j = h.pos; j >= 0; --j) out.push_back(vs[static_cast<size_t>(j)]);
  } else {
    for (size_t j = static_cast<size_t>(h.pos); j < vs.size(); ++j) out.push_back(vs[j]);
  }
  return out;
}

std::vector<Vertex> CertificateBuilder::walk(Vertex x, Vertex y) const {
  if (x == y) return {x};
  const Home& hx = home_[static_cast<size_t>(x)];
  const Home& hy = home_[static_cast<size_t>(y)];
  if (hx.layer < hy.layer) {
    auto w = walk(y, x);
    std::reverse(w.begin(), w.end());
    return w;
  }
  const auto& px = ears_[static_cast<size_t>(hx.ear)].ear->ear;
  if (hx.layer > hy.layer) {
    // Either half of a symmetric ear is rainbow; take the shorter one.
    bool front = hx.pos <= px.length() - hx.pos;
    auto w = to_foot(x, front);
    auto rest = walk(w.back(), y);
    w.insert(w.end(), rest.begin() + 1, rest.end());
    return w;
  }
  if (hx.ear == hy.ear) {
    std::vector<Vertex> w;
    int step = hx.pos < hy.pos ? 1 : -1;
    for (int j = hx.pos;; j += step) {
      w.push_back(px.vertices[static_cast<size_t>(j)]);
      if (j == hy.pos) break;
    }
    return w;
  }
  // Same layer, different ears sharing one pool. The endpoint nearer to its
  // ear's foot walks there through one class (alpha at the front, beta at
  // the back); the other endpoint leaves through the opposite class, whose
  // indices then start beyond the first one's.
  const auto& qy = ears_[static_cast<size_t>(hy.ear)].ear->ear;
  int dx = std::min(hx.pos, px.length() - hx.pos);
  int dy = std::min(hy.pos, qy.length() - hy.pos);
  if (dy < dx) {
    auto w = walk(y, x);
    std::reverse(w.begin(), w.end());
    return w;
  }
  bool x_front = hx.pos <= px.length() - hx.pos;
  auto head = to_foot(x, x_front);
  auto tail = to_foot(y, !x_front);
  std::reverse(tail.begin(), tail.end());
  auto mid = walk(head.back(), tail.front());
  head.insert(head.end(), mid.begin() + 1, mid.end());
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

RainbowCertificate CertificateBuilder::build(Vertex x, Vertex y) const {
  if (!g_.has_vertex(x) || !g_.has_vertex(y) || x == y) {
    throw PreconditionError("certificate needs two distinct vertices");
  }
  auto w = walk(x, y);
  // Loop erasure keeps a subset of the walk's edges, so colors stay distinct.
  std::vector<Vertex> path;
  std::vector<int> at(static_cast<size_t>(g_.n()), -1);
  for (Vertex v : w) {
    int& slot = at[static_cast<size_t>(v)];
    if (slot >= 0) {
      while (static_cast<int>(path.size()) > slot + 1) {
        at[static_cast<size_t>(path.back())] = -1;
        path.pop_back();
      }
      continue;
    }
    slot = static_cast<int>(path.size());
    path.push_back(v);
  }
  RainbowCertificate cert{x, y, std::move(path), {}};
  std::vector<int> color_of(static_cast<size_t>(g_.m()), trace_.completion_color);
  for (const EarRef& ref : ears_) {
    for (size_t j = 0; j < ref.ear->ear.edges.size(); ++j) {
      color_of[static_cast<size_t>(ref.ear->ear.edges[j])] = ref.ear->colors[j];
    }
  }
  for (size_t j = 0; j + 1 < cert.path.size(); ++j) {
    EdgeId e = *g_.find_edge(cert.path[j], cert.path[j + 1]);
    cert.colors.push_back(color_of[static_cast<size_t>(e)]);
  }
  return cert;
}

RainbowCertificate extract_certificate(const Graph& g, const ColorTrace& trace,
                                       Vertex x, Vertex y) {
  return CertificateBuilder(g, trace).build(x, y);
}

bool valid_certificate(const Graph& g, const EdgeColoring& c,
                       const RainbowCertificate& cert) {
  const auto& p = cert.path;
  if (p.size() < 2 || p.front() != cert.x || p.back() != cert.y) return false;
  if (cert.colors.size() + 1 != p.size()) return false;
  std::unordered_set<Vertex> verts;
  std::unordered_set<int> cols;
  for (size_t j = 0; j < p.size(); ++j) {
    if (!g.has_vertex(p[j]) || !verts.insert(p[j]).second) return false;
    if (j + 1 == p.size()) break;
    auto e = g.find_edge(p[j], p[j + 1]);
    if (!e || c.color(*e) != cert.colors[j] || !cols.insert(cert.colors[j]).second) {
      return false;
    }
  }
  return true;
}

}  // namespace odrc

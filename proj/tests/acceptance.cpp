// One line per acceptance criterion. Exit status is nonzero only for failures
// not listed in kKnownRed (each of those is analysed in the project notes).
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "odrc/cycles.hpp"
#include "odrc/generators.hpp"
#include "odrc/harness.hpp"
#include "odrc/metrics.hpp"
#include "odrc/oracles.hpp"
#include "odrc/orienter.hpp"
#include "odrc/rainbow.hpp"
#include "support/corpus.hpp"

using namespace odrc;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 60, kLimit2 = 120, kLimit3 = 30, kLimit4 = 5, kLimit5 = 10,
                 kLimit6 = 120, kLimit7 = 60, kLimit8 = 60, kLimit9 = 120;

// Sub-checks whose failure is expected: the literal construction or the stated
// value disagrees with what the oracles measure.
const std::set<std::string> kKnownRed = {"5.radius", "5.diameter", "5.colors",
                                         "9.k4_best_diameter"};

const int kThreads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failed;
  std::vector<std::string> notes;
  std::mutex mu;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check(bool ok, const std::string& key, const std::string& what) {
    if (ok) return;
    std::lock_guard lock(mu);
    if (failed.size() < 64) failed.push_back(std::to_string(id) + "." + key + " " + what);
  }
  void note(const std::string& s) { notes.push_back(s); }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int g_unexpected = 0;

void finish(Criterion& c, double limit) {
  const double t = c.elapsed();
  c.check(t < limit, "time", std::to_string(t) + "s over " + std::to_string(limit) + "s");
  std::set<std::string> seen;
  for (const auto& f : c.failed) {
    const std::string key = f.substr(0, f.find(' '));
    if (!kKnownRed.count(key)) ++g_unexpected;
    seen.insert(key);
  }
  std::printf("criterion %d %s: %s (%.2fs)\n", c.id, c.title.c_str(),
              c.failed.empty() ? "PASS" : "FAIL", t);
  for (const auto& f : c.failed) {
    const std::string key = f.substr(0, f.find(' '));
    std::printf("    %s%s\n", kKnownRed.count(key) ? "[known] " : "", f.c_str());
  }
  for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
  for (const auto& k : kKnownRed) {
    if (k.rfind(std::to_string(c.id) + ".", 0) == 0 && !seen.count(k)) {
      std::printf("    note: %s is listed as known-red but passed\n", k.c_str());
    }
  }
  std::fflush(stdout);
}

void parallel(int count, const std::function<void(int)>& fn) {
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string at(int i) { return "instance " + std::to_string(i); }

// Seeded corpus shared by criteria 1, 2 and 9: n <= 60, m <= 150.
std::vector<Graph> random_corpus() {
  std::vector<Graph> out;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 5 + static_cast<int>(seed * 7 % 56);
    int extra = static_cast<int>(seed % 25);
    Graph g = gen_random_bridgeless(n, extra, seed);
    while (g.m() > 150 && extra > 0) g = gen_random_bridgeless(n, --extra, seed);
    out.push_back(std::move(g));
  }
  return out;
}

void criterion1(const std::vector<Graph>& corpus) {
  Criterion c{1, "orientation bound suite"};
  int max_n = 0, max_m = 0;
  for (const auto& g : corpus) {
    max_n = std::max(max_n, g.n());
    max_m = std::max(max_m, g.m());
  }
  c.check(max_n <= 60 && max_m <= 150, "corpus", "corpus exceeds n <= 60, m <= 150");
  parallel(static_cast<int>(corpus.size()), [&](int i) {
    const Graph& g = corpus[static_cast<size_t>(i)];
    auto res = orient(g);
    auto dd = directed_rad_diam(g, res.orientation);
    c.check(dd.has_value(), "strong", at(i) + " not strong");
    const int rad = radius_diameter_centers(g).radius;
    const int bound = orientation_bounds(rad, eta(g)).diameter;
    if (dd) c.check(dd->diameter <= bound, "diameter", at(i) + " diameter over bound");
  });
  c.note(std::to_string(corpus.size()) + " graphs, max n " + std::to_string(max_n) +
         ", max m " + std::to_string(max_m));
  finish(c, kLimit1);
}

void criterion2(const std::vector<Graph>& corpus) {
  Criterion c{2, "rainbow bound suite"};
  std::atomic<int> exact_checked{0};
  std::vector<int> small;
  std::mutex mu;
  parallel(static_cast<int>(corpus.size()), [&](int i) {
    const Graph& g = corpus[static_cast<size_t>(i)];
    auto res = rainbow_color(g);
    const int bound = rainbow_color_bound(radius_diameter_centers(g).radius, eta(g));
    c.check(res.coloring.color_count() <= bound, "colors", at(i) + " colors over bound");
    CertificateBuilder builder(g, res.trace);
    for (Vertex x = 0; x < g.n(); ++x)
      for (Vertex y = x + 1; y < g.n(); ++y)
        c.check(valid_certificate(g, res.coloring, builder.build(x, y)), "certificate",
                at(i) + " pair " + std::to_string(x) + "," + std::to_string(y));
    if (res.coloring.color_count() <= 18) {
      std::lock_guard lock(mu);
      small.push_back(i);
    }
  });
  // The exact oracle is parallel internally, so run it one instance at a time.
  for (int i : small) {
    const Graph& g = corpus[static_cast<size_t>(i)];
    auto res = rainbow_color(g);
    c.check(is_rainbow_connected(g, res.coloring, 18, false, kThreads).connected, "exact",
            at(i) + " exact oracle disagrees");
    ++exact_checked;
  }
  c.note("exact oracle run on " + std::to_string(exact_checked.load()) + " instances");
  finish(c, kLimit2);
}

void criterion3() {
  Criterion c{3, "triangle tree reproduction"};
  const int r = 2;
  Graph g = gen_triangle_tree(r);
  c.check(g.n() == 13 && g.m() == 18, "size", "depth-2 tree is not 13/18");
  auto best = optimal_oriented_diameter(g, 18, kThreads);
  c.check(best.best_rad == 2 * r, "radius", "exhaustive radius " + std::to_string(best.best_rad));
  c.check(best.best_diam == 4 * r, "diameter",
          "exhaustive diameter " + std::to_string(best.best_diam));
  auto res = orient(g);
  auto dd = directed_rad_diam(g, res.orientation);
  c.check(dd && dd->radius == best.best_rad && dd->diameter == best.best_diam, "construction",
          "construction does not match the optimum");
  Graph g3 = gen_triangle_tree(3);
  auto res3 = orient(g3);
  c.check(verify_orientation_bounds(g3, res3.orientation, &res3.trace).pass, "depth3",
          "depth 3 construction over bound");
  c.note("depth 3 checked against the construction bound only; 2^" + std::to_string(g3.m()) +
         " orientations not enumerated");
  finish(c, kLimit3);
}

void criterion4() {
  Criterion c{4, "extremal rainbow reproduction"};
  Graph g = gen_extremal_rc(1, 3, 4);
  const int formula = rainbow_color_bound(1, 3);
  const int rc = exact_rc(g, 12, kThreads);
  c.check(rc == formula, "exact", "exact rc " + std::to_string(rc));
  auto res = rainbow_color(g);
  c.check(res.coloring.color_count() == formula, "construction",
          "construction uses " + std::to_string(res.coloring.color_count()));
  // Larger instance: upper bound and structure only.
  Graph big = gen_extremal_rc(2, 5, 3);
  auto rb = rainbow_color(big);
  const int big_rad = radius_diameter_centers(big).radius;
  c.check(eta(big) == 5 && bridges(big).empty(), "structure", "r=2 instance has wrong eta");
  c.check(rb.coloring.color_count() <= rainbow_color_bound(big_rad, 5), "upper",
          "r=2 instance over bound");
  c.note("r=2, eta=5 instance: measured radius " + std::to_string(big_rad) + ", stated r=2");
  c.note("full-scale lower bound (s^r+1 copies, r >= 2) not checked exactly");
  finish(c, kLimit4);
}

void criterion5() {
  Criterion c{5, "wheel example reproduction"};
  const int r = 3, k = 6;
  Graph g = gen_wheel_example(r, k);
  auto rd = radius_diameter_centers(g, kThreads);
  c.check(rd.radius == r, "radius", "measured rad " + std::to_string(rd.radius));
  c.check(rd.diameter == 2 * r, "diameter", "measured diam " + std::to_string(rd.diameter));
  c.check(eta(g) == 3, "eta", "measured eta " + std::to_string(eta(g)));
  auto res = rainbow_color(g);
  c.check(res.coloring.color_count() <= 3 * r, "colors",
          "construction uses " + std::to_string(res.coloring.color_count()));
  // What the face-length argument gives with the measured radius.
  c.check(res.coloring.color_count() <= 3 * rd.radius, "colors_measured_rad",
          "construction over 3*rad");
  c.check(res.coloring.color_count() <= rainbow_color_bound(rd.radius, 3), "colors_bound",
          "construction over the layered bound");
  c.note("n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + " colors=" +
         std::to_string(res.coloring.color_count()));
  if (g.n() > 14) c.note("zeta check skipped: n > 14");
  finish(c, kLimit5);
}

void criterion6() {
  Criterion c{6, "eta versus zeta"};
  std::vector<Graph> graphs;
  for (int n = 3; n <= 6; ++n) {
    auto all = testsupport::all_bridgeless(n);
    graphs.insert(graphs.end(), all.begin(), all.end());
  }
  const size_t exhaustive = graphs.size();
  for (uint64_t s = 0; s < 500; ++s)
    graphs.push_back(testsupport::random_bridgeless_by_rejection(7, 0.3 + 0.5 * (s % 10) / 10.0, s));
  for (uint64_t s = 0; s < 100; ++s)
    graphs.push_back(testsupport::random_bridgeless_by_rejection(
        8 + static_cast<int>(s % 5), 0.25 + 0.05 * static_cast<double>(s % 7), 1000 + s));
  std::atomic<int> violations{0};
  parallel(static_cast<int>(graphs.size()), [&](int i) {
    const Graph& g = graphs[static_cast<size_t>(i)];
    if (eta(g) > zeta_bruteforce(g)) {
      ++violations;
      c.check(false, "violation", at(i));
    }
  });
  // Every labeled graph on 7 vertices, streamed.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) pairs.emplace_back(a, b);
  std::atomic<long long> seven{0};
  constexpr int kChunks = 64;
  constexpr uint64_t kMasks = uint64_t{1} << 21;
  parallel(kChunks, [&](int chunk) {
    for (uint64_t mask = kMasks / kChunks * chunk; mask < kMasks / kChunks * (chunk + 1); ++mask) {
      int deg[7] = {};
      for (size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) ++deg[pairs[i].first], ++deg[pairs[i].second];
      if (*std::min_element(deg, deg + 7) < 2) continue;
      Graph g(7);
      for (size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
      if (!is_connected(g) || !bridges(g).empty()) continue;
      ++seven;
      if (eta(g) > zeta_bruteforce(g)) {
        ++violations;
        c.check(false, "violation", "mask " + std::to_string(mask));
      }
    }
  });
  c.note(std::to_string(exhaustive) + " labeled graphs n <= 6, " + std::to_string(seven.load()) +
         " labeled graphs n = 7, 500 random n = 7, 100 random n <= 12; " +
         std::to_string(violations.load()) + " violations");
  finish(c, kLimit6);
}

void criterion7() {
  Criterion c{7, "bipartite suite"};
  parallel(50, [&](int i) {
    const int n = 3 + i % 10, m = 3 + (i * 3) % 11;
    Graph g = gen_bipartite_dense(n, m, static_cast<uint64_t>(i));
    c.check(radius_diameter_centers(g).radius <= 3, "radius", at(i));
    c.check(eta(g) <= 4, "eta", at(i));
    auto o = orient(g);
    auto dd = directed_rad_diam(g, o.orientation);
    c.check(dd && dd->radius <= 9, "oriented_radius", at(i));
    c.check(rainbow_color(g).coloring.color_count() <= 12, "colors", at(i));
    for (const auto& e : check_bipartite_theorem(g))
      c.check(e.hypotheses == Hypotheses::hold && e.status == Status::pass, "harness",
              at(i) + " " + e.name);
  });
  finish(c, kLimit7);
}

void criterion8() {
  Criterion c{8, "dense graph suite"};
  parallel(50, [&](int i) {
    Graph g = testsupport::dense_half_degree(6 + i % 19, static_cast<uint64_t>(i));
    c.check(2 * min_degree(g) > g.n(), "hypothesis", at(i));
    auto o = orient(g);
    auto dd = directed_rad_diam(g, o.orientation);
    c.check(dd && dd->radius <= 4, "oriented_radius", at(i));
    c.check(dd && dd->diameter <= 8, "oriented_diameter", at(i));
    c.check(rainbow_color(g).coloring.color_count() <= 6, "colors", at(i));
  });
  for (const auto& e : check_girth_corollary(testsupport::petersen())) {
    if (e.name != "girth_growth_oriented_radius") continue;
    c.check(e.status == Status::pass && e.bound && *e.bound == 16, "petersen",
            "girth entry " + to_string(e.status));
  }
  finish(c, kLimit8);
}

void criterion9(const std::vector<Graph>& corpus) {
  Criterion c{9, "oracle consistency"};
  std::vector<Graph> graphs;
  for (const auto& g : corpus)
    if (g.m() <= 14) graphs.push_back(g);
  const size_t from_corpus = graphs.size();
  for (int n = 3; n <= 5; ++n) {
    auto all = testsupport::all_bridgeless(n);
    graphs.insert(graphs.end(), all.begin(), all.end());
  }
  for (int n = 3; n <= 8; ++n) graphs.push_back(testsupport::cycle(n));
  std::atomic<int> rc_checked{0};
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    auto res = orient(g);
    auto dd = directed_rad_diam(g, res.orientation);
    auto best = optimal_oriented_diameter(g, 14, kThreads);
    c.check(dd && best.best_diam <= dd->diameter, "orientation", at(static_cast<int>(i)));
    const int colors = rainbow_color(g).coloring.color_count();
    c.check(exact_rc(g, 14, kThreads) <= colors, "rc", at(static_cast<int>(i)));
    ++rc_checked;
  }
  c.note(std::to_string(graphs.size()) + " graphs (" + std::to_string(from_corpus) +
         " from the random corpus)");

  using testsupport::cycle;
  const int rc4 = exact_rc(cycle(4), 14, kThreads), rc6 = exact_rc(cycle(6), 14, kThreads);
  c.check(rc4 == testsupport::naive_rc(cycle(4)) && rc4 == 2, "c4_rc", "rc(C4) " + std::to_string(rc4));
  c.check(rc6 == testsupport::naive_rc(cycle(6)) && rc6 == 3, "c6_rc", "rc(C6) " + std::to_string(rc6));
  const Graph k4 = testsupport::complete(4);
  const int best = optimal_oriented_diameter(k4).best_diam;
  const int naive = testsupport::naive_best_orientation(k4).diam;
  c.check(best == naive, "k4_oracles", "enumerators disagree on K4");
  c.check(best == 2, "k4_best_diameter",
          "best K4 oriented diameter is " + std::to_string(best) + " (naive " +
              std::to_string(naive) + "), stated value 2");
  finish(c, kLimit9);
}

}  // namespace

int main() {
  std::printf("threads %d\n", kThreads);
  const auto corpus = random_corpus();
  criterion1(corpus);
  criterion2(corpus);
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(corpus);
  std::printf("unexpected failures: %d\n", g_unexpected);
  return g_unexpected == 0 ? 0 : 1;
}

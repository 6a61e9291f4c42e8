#include <doctest.h>

#include "odrc/cycles.hpp"
#include "odrc/generators.hpp"
#include "odrc/metrics.hpp"
#include "odrc/oracles.hpp"
#include "odrc/orienter.hpp"
#include "support/corpus.hpp"

using namespace odrc;
using testsupport::cycle;

TEST_CASE("orientation bounds") {
  CHECK(orientation_bounds(1, 3) == OrientationBounds{2, 4});
  CHECK(orientation_bounds(2, 4) == OrientationBounds{5, 10});
  CHECK(orientation_bounds(3, 3) == OrientationBounds{6, 12});
  CHECK(orientation_bounds(0, 3) == OrientationBounds{0, 0});
  CHECK_THROWS_AS(orientation_bounds(2, 2), Error);
  CHECK_THROWS_AS(orientation_bounds(-1, 3), Error);
}

TEST_CASE("cycles orient as directed cycles") {
  auto res = orient(cycle(4));
  auto naive = testsupport::naive_directed(4, testsupport::arcs_of(cycle(4), res.orientation));
  CHECK(naive.strong);
  CHECK(naive.diam == 3);
  CHECK(res.trace.bounds.diameter == 10);

  auto c5 = cycle(5);
  auto r5 = orient(c5);
  auto rep = verify_orientation_bounds(c5, r5.orientation, &r5.trace);
  CHECK(rep.strong);
  CHECK(rep.directed_diameter == 4);
  CHECK(rep.bounds.diameter == 12);
  CHECK(rep.pass);
}

TEST_CASE("complete graph on four vertices") {
  auto g = testsupport::complete(4);
  auto res = orient(g);
  auto rep = verify_orientation_bounds(g, res.orientation, &res.trace);
  CHECK(rep.strong);
  CHECK(rep.directed_diameter <= 4);
  CHECK(optimal_oriented_diameter(g).best_diam == testsupport::naive_best_orientation(g).diam);
}

TEST_CASE("petersen") {
  auto g = testsupport::petersen();
  auto res = orient(g);
  CHECK(is_strongly_connected(g, res.orientation));
  auto rep = verify_orientation_bounds(g, res.orientation, &res.trace);
  CHECK(rep.directed_diameter <= 12);
  CHECK(rep.pass);
}

TEST_CASE("orient rejects bridged and disconnected graphs") {
  auto path = testsupport::from_edges(3, {{0, 1}, {1, 2}});
  try {
    orient(path);
    FAIL("expected an error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("0-1") != std::string::npos);
    CHECK(std::string(e.what()).find("1-2") != std::string::npos);
  }
  CHECK_THROWS_AS(orient(testsupport::from_edges(2, {{0, 1}})), PreconditionError);
  try {
    orient(gen_disconnected_counterexample(4, 4));
    FAIL("expected an error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "not connected");
  }
  auto single = orient(Graph(1));
  CHECK(single.orientation.size() == 0);
  CHECK(single.trace.bounds == OrientationBounds{0, 0});
}

TEST_CASE("verify reports a non-strong orientation") {
  auto g = cycle(3);
  auto o = Orientation::all_forward(g);
  o.set(0, Direction::backward);
  auto rep = verify_orientation_bounds(g, o);
  CHECK_FALSE(rep.strong);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("trace invariants on the random corpus") {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    auto g = gen_random_bridgeless(4 + static_cast<int>(seed % 27), static_cast<int>(seed % 9), seed);
    auto res = orient(g);
    const auto& t = res.trace;
    CHECK(t.fallback_count == 0);
    auto rd = radius_diameter_centers(g);
    CHECK(t.center == rd.centers.front());
    CHECK(static_cast<int>(t.layers.size()) == rd.radius);

    std::vector<int> on_ear(static_cast<size_t>(g.m()), 0);
    std::vector<std::pair<int, int>> ear_arcs;
    for (const auto& layer : t.layers) {
      CHECK(layer.length_cap == std::min(2 * (t.radius - layer.index + 1) + 1, t.eta));
      for (const auto& te : layer.ears) {
        CHECK(te.ear.length() <= layer.length_cap);
        for (size_t j = 0; j < te.ear.edges.size(); ++j) {
          EdgeId e = te.ear.edges[j];
          ++on_ear[static_cast<size_t>(e)];
          // Arc order along the ear is the final direction.
          CHECK(res.orientation.arc(g, e) == Arc{te.ear.vertices[j], te.ear.vertices[j + 1]});
          ear_arcs.emplace_back(te.ear.vertices[j], te.ear.vertices[j + 1]);
        }
      }
    }
    std::vector<char> completed(static_cast<size_t>(g.m()), 0);
    for (EdgeId e : t.completed_edges) completed[static_cast<size_t>(e)] = 1;
    for (EdgeId e = 0; e < g.m(); ++e) {
      CHECK((on_ear[static_cast<size_t>(e)] > 0) != (completed[static_cast<size_t>(e)] != 0));
    }

    // Completion arcs only shorten distances.
    if (g.n() <= 30) {
      auto sub = testsupport::floyd(g.n(), ear_arcs);
      auto full = directed_distances(g, res.orientation);
      for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b)
          CHECK(full[static_cast<size_t>(a)][static_cast<size_t>(b)] <= sub[static_cast<size_t>(a)][static_cast<size_t>(b)]);
    }
    auto rep = verify_orientation_bounds(g, res.orientation, &res.trace);
    CHECK(rep.pass);
  }
}

TEST_CASE("every interior vertex is close to its feet along the directed ear") {
  for (uint64_t seed = 200; seed < 240; ++seed) {
    auto g = gen_random_bridgeless(6 + static_cast<int>(seed % 20), 4, seed);
    auto res = orient(g);
    auto d = directed_distances(g, res.orientation);
    for (const auto& layer : res.trace.layers) {
      for (const auto& te : layer.ears) {
        const int len = te.ear.length();
        const Vertex a = te.ear.first_foot(), b = te.ear.last_foot();
        for (Vertex x : te.ear.interior()) {
          CHECK(d[static_cast<size_t>(a)][static_cast<size_t>(x)] <= len - 1);
          CHECK(d[static_cast<size_t>(x)][static_cast<size_t>(b)] <= len - 1);
        }
      }
    }
  }
}

TEST_CASE("adding arcs to a spanning subgraph orientation keeps distances") {
  for (uint64_t seed = 300; seed < 330; ++seed) {
    auto h = gen_random_bridgeless(8 + static_cast<int>(seed % 15), 1, seed);
    Graph g(h.n());
    for (auto e : h.edges()) g.add_edge(e.u, e.v);
    Rng rng(seed);
    for (int extra = 0; extra < 6; ++extra) {
      Vertex a = rng.uniform(0, g.n() - 1), b = rng.uniform(0, g.n() - 1);
      if (a != b && !g.find_edge(a, b)) g.add_edge(a, b);
    }
    auto sub = orient(h);
    auto sub_rd = directed_rad_diam(h, sub.orientation);
    REQUIRE(sub_rd);
    std::vector<Direction> dirs(sub.orientation.directions());
    for (EdgeId e = h.m(); e < g.m(); ++e) {
      dirs.push_back(rng.uniform(0, 1) ? Direction::forward : Direction::backward);
    }
    auto rd = directed_rad_diam(g, Orientation(dirs));
    REQUIRE(rd);
    CHECK(rd->diameter <= sub_rd->diameter);
    CHECK(rd->radius <= sub_rd->radius);
  }
}

TEST_CASE("orient is deterministic") {
  auto g = gen_random_bridgeless(40, 10, 77);
  auto a = orient(g), b = orient(g);
  CHECK(a.orientation == b.orientation);
  CHECK(a.trace.completed_edges == b.trace.completed_edges);
}

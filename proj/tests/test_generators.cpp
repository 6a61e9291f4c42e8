#include <doctest.h>

#include "odrc/cycles.hpp"
#include "odrc/generators.hpp"
#include "odrc/metrics.hpp"
#include "support/corpus.hpp"

using namespace odrc;

TEST_CASE("rng is reproducible and in range") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    int x = a.uniform(-3, 3);
    CHECK(x == b.uniform(-3, 3));
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
  CHECK_THROWS_AS(a.uniform(2, 1), Error);
}

TEST_CASE("triangle tree sizes follow the recurrence") {
  int tv = 3, te = 3;  // one rooted copy at depth 1
  for (int d = 1; d <= 5; ++d) {
    auto g = gen_triangle_tree(d);
    CHECK(g.n() == 2 * tv - 1);
    CHECK(g.m() == 2 * te);
    auto rd = radius_diameter_centers(g);
    CHECK(rd.radius == d);
    CHECK(rd.centers == std::vector<Vertex>{0});
    CHECK(eta(g) == 3);
    tv = 3 + 2 * (tv - 1);
    te = 3 + 2 * te;
  }
  CHECK(gen_triangle_tree(1).n() == 5);
  CHECK(gen_triangle_tree(2).n() == 13);
  CHECK(gen_triangle_tree(2).m() == 18);
  CHECK_THROWS_AS(gen_triangle_tree(0), Error);
  CHECK_THROWS_AS(gen_triangle_tree(9), Error);
}

TEST_CASE("extremal rc composite") {
  auto hub = gen_extremal_rc(1, 3, 4);
  CHECK(hub.n() == 9);
  CHECK(hub.m() == 12);
  CHECK(hub.degree(0) == 8);
  CHECK(extremal_rc_default_copies(1, 3) == 4);
  CHECK(gen_extremal_rc(1, 3).n() == 9);
  CHECK(gen_extremal_rc(1, 3, 1).m() == 3);

  auto h = gen_extremal_rc(2, 3, 1);
  CHECK(eta(h) == 3);
  CHECK(bfs(h, 0).dist == std::vector<int>{0, 1, 1, 2, 2});
  for (int r = 1; r <= 4; ++r) {
    auto g = gen_extremal_rc(r, 3, 3);
    CHECK(radius_diameter_centers(g).radius == r);
  }
  auto five = gen_extremal_rc(2, 5, 2);
  CHECK(eta(five) == 5);
  CHECK(bridges(five).empty());
  CHECK_THROWS_AS(gen_extremal_rc(1, 4), Error);
  CHECK_THROWS_AS(gen_extremal_rc(2, 2, 1), Error);
  CHECK_THROWS_AS(gen_extremal_rc(3, 7, std::nullopt, 10000), Error);
  CHECK(gen_extremal_rc(3, 7).n() == 1 + 12 * extremal_rc_default_copies(3, 7));
}

TEST_CASE("wheel example construction") {
  auto g = gen_wheel_example(3, 6);
  // 1 hub + 6 rim + 12 inner spoke vertices; 6 rim + 18 spoke edges, each
  // gets an apex.
  CHECK(g.n() == 19 + 24);
  CHECK(g.m() == 72);
  CHECK(eta(g) == 3);
  CHECK(bridges(g).empty());
  CHECK_THROWS_AS(gen_wheel_example(2, 6), Error);
  CHECK_THROWS_AS(gen_wheel_example(3, 5), Error);
}

TEST_CASE("random bridgeless graphs") {
  CHECK(gen_random_bridgeless(3, 0, 1).m() == 3);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    int n = 3 + static_cast<int>(seed % 40);
    auto g = gen_random_bridgeless(n, static_cast<int>(seed % 11), seed);
    CHECK(g.n() == n);
    CHECK(is_connected(g));
    CHECK(bridges(g).empty());
    CHECK(g == gen_random_bridgeless(n, static_cast<int>(seed % 11), seed));
  }
  CHECK_THROWS_AS(gen_random_bridgeless(2, 0, 0), Error);
}

TEST_CASE("bipartite dense graphs meet the degree condition") {
  auto c4 = gen_bipartite_dense(2, 2, 3);
  CHECK(c4.m() == 4);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 9), m = 2 + static_cast<int>((seed * 5) % 11);
    auto g = gen_bipartite_dense(n, m, seed);
    CHECK(g.n() == n + m);
    for (Vertex a = 0; a < n; ++a) CHECK(g.degree(a) > (m + 1) / 2);
    for (Vertex b = n; b < n + m; ++b) CHECK(g.degree(b) > (n + 1) / 2);
    for (auto e : g.edges()) CHECK((e.u < n) != (e.v < n));
  }
}

TEST_CASE("disconnected counterexample") {
  auto g = gen_disconnected_counterexample(4, 4);
  CHECK(g.n() == 8);
  CHECK(g.m() == 8);
  CHECK_FALSE(is_connected(g));
  auto two = gen_disconnected_counterexample(2, 2);
  CHECK(two.m() == 2);
  CHECK(bridges(two).size() == 2);
  CHECK_THROWS_AS(radius_diameter_centers(g), PreconditionError);
  CHECK_THROWS_AS(gen_disconnected_counterexample(3, 2), Error);
}

TEST_CASE("family dispatch") {
  CHECK(generate({"triangle_tree", {{"depth", 2}}, 0}).n() == 13);
  CHECK(generate({"random_bridgeless", {{"n", 10}}, 4}) == gen_random_bridgeless(10, 0, 4));
  CHECK(generate({"bipartite_dense", {{"n", 3}, {"m", 3}}, 1}) == gen_bipartite_dense(3, 3, 1));
  CHECK_THROWS_AS(generate({"wheel_example", {{"r", 3}}, 0}), Error);
  CHECK_THROWS_AS(generate({"no_such_family", {}, 0}), Error);
}

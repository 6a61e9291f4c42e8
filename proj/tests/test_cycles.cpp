#include <doctest.h>

#include "odrc/cycles.hpp"
#include "odrc/generators.hpp"
#include "support/corpus.hpp"

using namespace odrc;
using testsupport::cycle;

TEST_CASE("shortest cycle through an edge") {
  auto g = cycle(5);
  CHECK(shortest_cycle_through_edge(g, 0) == 5);
  auto w = shortest_cycle_witness(g, 0);
  CHECK(w == std::vector<Vertex>{0, 1, 2, 3, 4});
  auto path = testsupport::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(shortest_cycle_through_edge(path, 0) == kInf);
  CHECK(shortest_cycle_witness(path, 0).empty());
  CHECK(eta(path) == kInf);
  CHECK(eta(Graph(1)) == 0);
}

TEST_CASE("eta and witnesses agree with path enumeration") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_random_bridgeless(6 + static_cast<int>(seed % 10), 2, seed);
    auto rep = cycle_cover(g, true, 3);
    CHECK(rep.eta == testsupport::naive_eta(g));
    for (EdgeId e = 0; e < g.m(); ++e) {
      const auto& w = rep.witnesses[static_cast<size_t>(e)];
      CHECK(static_cast<int>(w.size()) == rep.per_edge[static_cast<size_t>(e)]);
      CHECK(w[0] == g.edge(e).u);
      CHECK(w[1] == g.edge(e).v);
      for (size_t i = 0; i < w.size(); ++i) {
        CHECK(g.find_edge(w[i], w[(i + 1) % w.size()]));
      }
    }
  }
}

TEST_CASE("isometric cycle checks") {
  auto g = testsupport::petersen();
  CHECK(is_isometric_cycle(g, std::vector<Vertex>{0, 1, 2, 3, 4}));
  CHECK(is_isometric_cycle(g, std::vector<Vertex>{0, 1, 2, 3, 4, 0}));
  CHECK_THROWS_AS(is_isometric_cycle(g, std::vector<Vertex>{0, 1, 3}), Error);
  CHECK_THROWS_AS(is_isometric_cycle(g, std::vector<Vertex>{0, 1}), Error);
  // Square with a diagonal: the 4-cycle is not isometric.
  auto d = testsupport::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK_FALSE(is_isometric_cycle(d, std::vector<Vertex>{0, 1, 2, 3}));
}

TEST_CASE("zeta search agrees with full cycle enumeration") {
  CHECK(zeta_bruteforce(cycle(7)) == 7);
  CHECK(zeta_bruteforce(testsupport::complete(5)) == 3);
  CHECK(zeta_bruteforce(testsupport::from_edges(3, {{0, 1}, {1, 2}})) == 0);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    auto g = testsupport::random_bridgeless_by_rejection(5 + static_cast<int>(seed % 6), 0.45, seed);
    CHECK(zeta_bruteforce(g) == testsupport::naive_zeta(g));
    auto c = longest_isometric_cycle(g);
    if (!c.empty()) CHECK(is_isometric_cycle(g, c));
  }
  CHECK_THROWS_AS(zeta_bruteforce(cycle(15)), PreconditionError);
  CHECK(zeta_bruteforce(cycle(15), 15) == 15);
}

TEST_CASE("eta never exceeds zeta on small bridgeless graphs") {
  for (uint64_t seed = 100; seed < 160; ++seed) {
    auto g = gen_random_bridgeless(4 + static_cast<int>(seed % 9), 3, seed);
    CHECK(eta(g) <= zeta_bruteforce(g));
  }
}

#include <doctest.h>

#include "odrc/generators.hpp"
#include "odrc/harness.hpp"
#include "odrc/serialize.hpp"
#include "support/corpus.hpp"

using namespace odrc;
using testsupport::cycle;

namespace {

const TheoremEntry& entry(const std::vector<TheoremEntry>& es, const std::string& name) {
  for (const auto& e : es)
    if (e.name == name) return e;
  FAIL("missing entry " << name);
  return es.front();
}

Graph octahedron() {
  Graph g(6);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (b != a + 3) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("reference bounds") {
  auto c4 = reference_bounds(cycle(4));
  CHECK(c4.quadratic_radius == 6);
  CHECK(c4.orientation_radius == 5);
  auto c5 = reference_bounds(cycle(5));
  REQUIRE(c5.isometric_color_bound);
  CHECK(*c5.isometric_color_bound == 8);
  CHECK(c5.color_bound == 8);
  auto tt = reference_bounds(gen_triangle_tree(3));
  CHECK(tt.quadratic_diameter == 24);
  CHECK(tt.orientation_diameter == 12);
  CHECK_FALSE(tt.zeta);
  CHECK_THROWS_AS(reference_bounds(testsupport::from_edges(2, {{0, 1}})), PreconditionError);
}

TEST_CASE("bipartite degree condition") {
  Graph k44(8);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) k44.add_edge(a, 4 + b);
  auto es = check_bipartite_theorem(k44);
  for (const auto& e : es) {
    CHECK(e.hypotheses == Hypotheses::hold);
    CHECK(e.status == Status::pass);
  }
  CHECK(*entry(es, "bipartite_dense_eta").measured == 4);
  for (const auto& e : check_bipartite_theorem(cycle(4))) CHECK(e.status == Status::pass);
  for (const auto& e : check_bipartite_theorem(gen_disconnected_counterexample(4, 4))) {
    CHECK(e.hypotheses == Hypotheses::fail);
    CHECK(e.status == Status::skipped);
  }
}

TEST_CASE("general graph conditions") {
  auto k5 = check_general_theorems(testsupport::complete(5), 2);
  CHECK(entry(k5, "min_degree_half_oriented_radius").status == Status::pass);
  CHECK(entry(k5, "min_degree_half_colors").status == Status::pass);
  auto c4 = check_general_theorems(cycle(4), 2);
  CHECK(entry(c4, "neighborhood_growth_radius").hypotheses == Hypotheses::fail);
  CHECK(entry(c4, "neighborhood_growth_radius").status == Status::skipped);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto es = check_general_theorems(testsupport::dense_half_degree(12, seed), 2);
    for (const char* name : {"min_degree_half_oriented_radius", "min_degree_half_oriented_diameter",
                             "min_degree_half_colors"}) {
      CHECK(entry(es, name).status == Status::pass);
    }
  }
}

TEST_CASE("girth corollary") {
  auto p = check_girth_corollary(testsupport::petersen());
  const auto& rad = entry(p, "girth_growth_oriented_radius");
  CHECK(rad.hypotheses == Hypotheses::hold);
  CHECK(*rad.bound == 16);
  CHECK(rad.status == Status::pass);
  CHECK(*entry(p, "girth_growth_colors").bound == 20);

  auto k4 = check_girth_corollary(testsupport::complete(4));
  CHECK(entry(k4, "girth_growth_oriented_radius").status == Status::skipped);
  CHECK(entry(k4, "girth_growth_oriented_radius").note.find("k=1") != std::string::npos);

  auto tree = check_girth_corollary(testsupport::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(entry(tree, "girth_growth_oriented_radius").status == Status::skipped);
}

TEST_CASE("caller-asserted bounds") {
  auto c6 = evaluate_asserted_bounds(cycle(6), std::nullopt, true);
  const auto& colors = entry(c6, "edge_transitive_colors");
  CHECK(colors.hypotheses == Hypotheses::asserted);
  CHECK(*colors.bound == 18);
  CHECK(*colors.measured <= 6);
  CHECK(entry(c6, "face_length").status == Status::skipped);

  auto oct = evaluate_asserted_bounds(octahedron(), 3, false);
  CHECK(*entry(oct, "face_length_oriented_radius").bound == 4);
  CHECK(entry(oct, "face_length_oriented_radius").status == Status::pass);

  for (const auto& e : evaluate_asserted_bounds(cycle(5), std::nullopt, false)) {
    CHECK(e.status == Status::skipped);
  }
}

TEST_CASE("full report and its JSON form") {
  auto report = full_report(testsupport::petersen());
  CHECK(report.ok());
  CHECK(report.graph.girth == 5);
  CHECK(entry(report.theorems, "eta_vs_zeta").status == Status::pass);
  auto j = to_json(report);
  CHECK(j["graph"]["n"] == 10);
  CHECK(j["graph"]["bipartite"] == false);
  for (const auto& t : j["theorems"]) {
    CHECK(t.contains("name"));
    CHECK(t.contains("hypotheses"));
    CHECK(t.contains("bound"));
    CHECK(t.contains("measured"));
    CHECK(t.contains("status"));
  }
  auto table = format_report_table(report);
  CHECK(table.find("layered_oriented_radius") != std::string::npos);

  auto bad = full_report(gen_disconnected_counterexample(4, 4));
  CHECK(bad.ok());
  CHECK(bad.graph.rad == kInf);
  CHECK(to_json(bad)["graph"]["rad"] == "inf");
  for (const auto& e : bad.theorems) CHECK(e.status == Status::skipped);
}

TEST_CASE("constructions respect every applicable bound on the corpus") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    auto g = gen_random_bridgeless(6 + static_cast<int>(seed % 12), static_cast<int>(seed % 6), seed);
    auto report = full_report(g);
    CHECK(report.ok());
  }
}

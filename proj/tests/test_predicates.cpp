#include <doctest.h>

#include "gooddecomp/generators.hpp"
#include "gooddecomp/predicates.hpp"
#include "oracles.hpp"

using namespace gooddecomp;

namespace {
Graph k5() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(5, e);
}
Graph p3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }
}  // namespace

TEST_CASE("degree_class") {
  CHECK(degree_class(complete(4)) == DegreeClass::cubic);
  CHECK(degree_class(p3()) == DegreeClass::subcubic_not_cubic);
  CHECK(degree_class(k5()) == DegreeClass::exceeds_three);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(cycle(5)));
  CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph::from_edge_list(0, {})));
  CHECK(is_connected(Graph::from_edge_list(1, {})));
}

TEST_CASE("bridges fixed cases") {
  CHECK(bridges(p3()) == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});
  CHECK(bridges(cycle(5)).empty());

  // two triangles joined by one edge
  const Graph bowtie =
      Graph::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  CHECK(bridges(bowtie) == oracles::brute_bridges(bowtie));
  CHECK(bridges(bowtie) == std::vector<Edge>{Edge(2, 3)});
}

TEST_CASE("bridges match brute force on random graphs") {
  SplitMix64 rng(42);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Graph g = oracles::random_graph(n, rng);
    CHECK(bridges(g) == oracles::brute_bridges(g));
  }
}

TEST_CASE("is_two_edge_connected") {
  CHECK(is_two_edge_connected(cycle(4)));
  CHECK(is_two_edge_connected(complete(4)));
  CHECK_FALSE(is_two_edge_connected(p3()));
  CHECK_FALSE(is_two_edge_connected(Graph::from_edge_list(1, {})));
}

TEST_CASE("find_claw") {
  const Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  auto w = find_claw(star);
  REQUIRE(w.has_value());
  CHECK(w->center == 0);
  CHECK(w->leaves == std::array<int, 3>{1, 2, 3});

  CHECK_FALSE(find_claw(complete(4)).has_value());

  auto pw = find_claw(petersen());
  REQUIRE(pw.has_value());
  CHECK(oracles::brute_has_claw(petersen()));
  // witness really is an induced claw
  for (int leaf : pw->leaves) CHECK(petersen().has_edge(pw->center, leaf));
  CHECK_FALSE(petersen().has_edge(pw->leaves[0], pw->leaves[1]));
  CHECK_FALSE(petersen().has_edge(pw->leaves[0], pw->leaves[2]));
  CHECK_FALSE(petersen().has_edge(pw->leaves[1], pw->leaves[2]));
}

TEST_CASE("find_claw matches brute force on random subcubic graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const Graph g = random_connected_subcubic(n, seed);
    CHECK(find_claw(g).has_value() == oracles::brute_has_claw(g));
  }
}

TEST_CASE("find_claw generic fallback for degree > 3") {
  CHECK_FALSE(find_claw(k5()).has_value());
  // K_{1,4} has claws through a degree-4 center
  const Graph star4 = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(find_claw(star4).has_value());
}

TEST_CASE("triangles") {
  CHECK(triangles(complete(4)).size() == 4);
  CHECK(triangles(cycle(5)).empty());

  const auto prism_tris = triangles(prism(3));
  REQUIRE(prism_tris.size() == 2);
  CHECK(prism_tris[0].x == 0);
  CHECK(prism_tris[0].y == 1);
  CHECK(prism_tris[0].z == 2);
  CHECK(prism_tris[0].degree_pattern == std::array<int, 3>{3, 3, 3});
  CHECK(prism_tris[1].x == 3);
}

TEST_CASE("find_induced_cycle_longer_than fixed cases") {
  auto w = find_induced_cycle_longer_than(cycle(5), 4);
  REQUIRE(w.has_value());
  CHECK(w->cycle.size() == 5);

  // C4 plus a chord has only 3- and 4-cycles
  const Graph chorded = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK_FALSE(find_induced_cycle_longer_than(chorded, 4).has_value());

  auto pw = find_induced_cycle_longer_than(petersen(), 4);
  REQUIRE(pw.has_value());
  CHECK(pw->cycle.size() == 5);
  CHECK(oracles::brute_has_chordless_cycle_longer_than(petersen(), 4));
}

TEST_CASE("induced cycle witness is chordless") {
  SplitMix64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Graph g = oracles::random_graph(9, rng);
    auto w = find_induced_cycle_longer_than(g, 4);
    if (!w) continue;
    const auto& c = w->cycle;
    REQUIRE(c.size() > 4);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) {
        const bool consecutive = (j == i + 1) || (i == 0 && j == c.size() - 1);
        CHECK(g.has_edge(c[i], c[j]) == consecutive);
      }
  }
}

TEST_CASE("chordless cycle search matches brute force") {
  SplitMix64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Graph g = oracles::random_graph(n, rng);
    for (int k : {3, 4})
      CHECK(find_induced_cycle_longer_than(g, k).has_value() ==
            oracles::brute_has_chordless_cycle_longer_than(g, k));
  }
}

TEST_CASE("chordless cycle search budget is a hard error") {
  CHECK_THROWS_AS(find_induced_cycle_longer_than(petersen(), 4, 1), SearchBudgetError);
  CHECK_THROWS_AS(is_4_chordal(petersen(), 1), SearchBudgetError);
}

TEST_CASE("claw-free triangle-free 2-edge-connected subcubic graphs are cycles") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 9);
    const Graph g = random_connected_subcubic(n, seed);
    if (!is_claw_free(g) || !triangles(g).empty() || !is_two_edge_connected(g)) continue;
    for (int v = 0; v < n; ++v) CHECK(g.degree(v) <= 2);
    CHECK(g.edge_count() == n);
  }
}

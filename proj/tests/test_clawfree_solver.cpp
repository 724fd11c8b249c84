#include <doctest.h>

#include <set>

#include "gooddecomp/clawfree_solver.hpp"
#include "gooddecomp/generators.hpp"
#include "gooddecomp/graph6.hpp"
#include "oracles.hpp"

using namespace gooddecomp;

namespace {
bool trace_has(const CaseTrace& trace, CaseTag tag) {
  for (const auto& e : trace)
    if (e.tag == tag) return true;
  return false;
}
}  // namespace

TEST_CASE("base cases") {
  const auto tri = decompose_clawfree(complete(3));
  CHECK(verify(complete(3), tri.decomposition).ok);
  CHECK(tri.decomposition.tree.size() == 2);
  CHECK(tri.decomposition.matching.size() == 1);
  REQUIRE(tri.trace.size() == 1);
  CHECK(tri.trace[0].tag == CaseTag::BASE_SMALL);

  const auto one = decompose_clawfree(Graph::from_edge_list(1, {}));
  CHECK(one.decomposition == Decomposition{});
  CHECK(one.trace[0].tag == CaseTag::BASE_SMALL);

  const auto c6 = decompose_clawfree(cycle(6));
  CHECK(verify(cycle(6), c6.decomposition).ok);
  CHECK(c6.decomposition.tree.size() == 5);
  CHECK(c6.decomposition.matching.size() == 1);
  REQUIRE(c6.trace.size() == 1);
  CHECK(c6.trace[0].tag == CaseTag::BASE_CYCLE);
}

TEST_CASE("K4 goes through the cubic triangle case") {
  const auto res = decompose_clawfree(complete(4));
  CHECK(verify(complete(4), res.decomposition).ok);
  REQUIRE(res.trace.size() == 2);
  CHECK(res.trace[0].tag == CaseTag::TRI_333);
  CHECK(res.trace[1].tag == CaseTag::BASE_SMALL);
  CHECK(res.decomposition.two_regular.size() == 3);
  // exact solver agrees the graph is good
  CHECK(find_good_decomposition(complete(4)).kind == SearchOutcome::Kind::Good);
}

TEST_CASE("K4 minus an edge") {
  const Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const auto res = decompose_clawfree(diamond);
  CHECK(verify(diamond, res.decomposition).ok);
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].tag == CaseTag::TRI_233_K4_MINUS_EDGE);
  CHECK(res.decomposition.tree.size() == 3);
  CHECK(res.decomposition.matching.size() == 2);
  CHECK(oracles::naive_count_good(diamond) > 0);
}

TEST_CASE("prism starts with the cubic triangle case") {
  const auto res = decompose_clawfree(prism(3));
  CHECK(verify(prism(3), res.decomposition).ok);
  CHECK(res.trace.front().tag == CaseTag::TRI_333);
  CHECK(find_good_decomposition(prism(3)).kind == SearchOutcome::Kind::Good);
}

TEST_CASE("bridge case") {
  // two triangles joined by an edge
  const Graph bowtie =
      Graph::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  const auto res = decompose_clawfree(bowtie);
  CHECK(verify(bowtie, res.decomposition).ok);
  CHECK(trace_has(res.trace, CaseTag::CUT_EDGE));
  CHECK(trace_has(res.trace, CaseTag::BASE_SMALL));
}

TEST_CASE("identify case A1 fires on cycles with an ear") {
  // cycle 0..m-1 plus an extra vertex adjacent to 0 and 1: identifying the
  // ear triangle leaves a cycle whose matching edge lands on the merged
  // vertex, so the lift goes through the one-tree-edge branch
  for (int m = 4; m <= 9; ++m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m, 0);
    edges.emplace_back(m, 1);
    const Graph g = Graph::from_edge_list(m + 1, edges);
    const auto res = decompose_clawfree(g);
    CHECK(verify(g, res.decomposition).ok);
    CHECK(trace_has(res.trace, CaseTag::TRI_233_IDENTIFY_A1));
  }
}

TEST_CASE("identify case A2 fires on a frozen fixture") {
  const Graph g = random_connected_subcubic(8, 115, GenFilter::claw_free);
  CHECK(write_graph6(g) == "GEm@HK");
  const auto res = decompose_clawfree(g);
  CHECK(verify(g, res.decomposition).ok);
  CHECK(trace_has(res.trace, CaseTag::TRI_233_IDENTIFY_A2));
}

TEST_CASE("triangle inflations decompose") {
  for (const Graph& base : {complete(4), complete_bipartite(3, 3), prism(3), petersen()}) {
    const Graph g = triangle_inflation(base);
    const auto res = decompose_clawfree(g);
    CHECK(verify(g, res.decomposition).ok);
    CHECK(find_good_decomposition(g).kind == SearchOutcome::Kind::Good);
  }
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(decompose_clawfree(petersen()), ClawfreeError);
  try {
    decompose_clawfree(petersen());
  } catch (const ClawfreeError& e) {
    CHECK(e.kind == ClawfreeFailure::NOT_CLAWFREE);
    CHECK(e.witness.has_value());
  }
  try {
    decompose_clawfree(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  } catch (const ClawfreeError& e) {
    CHECK(e.kind == ClawfreeFailure::DISCONNECTED);
  }
  try {
    decompose_clawfree(Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  } catch (const ClawfreeError& e) {
    CHECK(e.kind == ClawfreeFailure::NOT_SUBCUBIC);
  }
}

TEST_CASE("random claw-free corpus decomposes and agrees with exact search") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const Graph g = random_connected_subcubic(n, seed, GenFilter::claw_free);
    const auto res = decompose_clawfree(g);
    CHECK(verify(g, res.decomposition).ok);
    // one entry per base component plus one per cut edge
    CHECK(res.trace.size() <= static_cast<size_t>(2 * n));
    CHECK(find_good_decomposition(g).kind == SearchOutcome::Kind::Good);
  }
}

TEST_CASE("trace vertices are original ids") {
  const Graph g = triangle_inflation(complete(4));
  const auto res = decompose_clawfree(g);
  for (const auto& e : res.trace)
    for (int v : e.vertices) {
      CHECK(v >= 0);
      CHECK(v < g.vertex_count());
    }
  // the first TRI_333 names an actual triangle of the original graph
  for (const auto& e : res.trace) {
    if (e.tag != CaseTag::TRI_333) continue;
    REQUIRE(e.vertices.size() == 3);
    CHECK(g.has_edge(e.vertices[0], e.vertices[1]));
    CHECK(g.has_edge(e.vertices[1], e.vertices[2]));
    CHECK(g.has_edge(e.vertices[0], e.vertices[2]));
    break;
  }
}

TEST_CASE("decompose_auto dispatch") {
  const auto pr = decompose_auto(prism(3));
  CHECK(pr.method == "clawfree");
  CHECK(pr.outcome.kind == SearchOutcome::Kind::Good);

  // the cube (prism over C4) has claws, so it goes through exact search
  const auto cube = decompose_auto(prism(4));
  CHECK(cube.method == "exact");
  CHECK(cube.outcome.kind == SearchOutcome::Kind::Good);

  const auto pe = decompose_auto(petersen());
  CHECK(pe.method == "exact");
  CHECK(pe.outcome.kind == SearchOutcome::Kind::Good);

  const auto tiny = decompose_auto(Graph::from_edge_list(1, {}));
  CHECK(tiny.method == "clawfree");
  CHECK(tiny.outcome.decomposition == Decomposition{});
}

#pragma once

#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/exact_solver.hpp"
#include "gooddecomp/graph6.hpp"
#include "gooddecomp/predicates.hpp"

namespace gooddecomp {

enum class CaseTag {
  BASE_SMALL,
  BASE_CYCLE,
  CUT_EDGE,
  TRI_333,
  TRI_233_K4_MINUS_EDGE,
  TRI_233_IDENTIFY_A2,
  TRI_233_IDENTIFY_A1,
};

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::BASE_SMALL: return "BASE_SMALL";
    case CaseTag::BASE_CYCLE: return "BASE_CYCLE";
    case CaseTag::CUT_EDGE: return "CUT_EDGE";
    case CaseTag::TRI_333: return "TRI_333";
    case CaseTag::TRI_233_K4_MINUS_EDGE: return "TRI_233_K4_MINUS_EDGE";
    case CaseTag::TRI_233_IDENTIFY_A2: return "TRI_233_IDENTIFY_A2";
    case CaseTag::TRI_233_IDENTIFY_A1: return "TRI_233_IDENTIFY_A1";
  }
  return "?";
}

/// One recursion step of the constructive decomposition; vertices are in
/// original-graph ids.
struct CaseEntry {
  CaseTag tag;
  std::vector<int> vertices;
};

using CaseTrace = std::vector<CaseEntry>;

enum class ClawfreeFailure {
  NOT_CLAWFREE,
  NOT_SUBCUBIC,
  DISCONNECTED,
  THEOREM_VIOLATION,
};

class ClawfreeError : public std::runtime_error {
 public:
  ClawfreeError(ClawfreeFailure kind, const std::string& msg,
                std::optional<ClawWitness> witness = std::nullopt,
                std::string graph6_dump = {}, CaseTrace trace = {})
      : std::runtime_error(msg),
        kind(kind),
        witness(std::move(witness)),
        graph6_dump(std::move(graph6_dump)),
        trace(std::move(trace)) {}

  ClawfreeFailure kind;
  std::optional<ClawWitness> witness;
  std::string graph6_dump;  // local graph at the point of failure, for triage
  CaseTrace trace;
};

struct ClawfreeResult {
  Decomposition decomposition;
  CaseTrace trace;
};

namespace detail {

class ClawfreeSolver {
 public:
  explicit ClawfreeSolver(const Graph& g) : root_(g) {}

  ClawfreeResult solve() {
    std::vector<int> orig(static_cast<size_t>(root_.vertex_count()));
    for (size_t i = 0; i < orig.size(); ++i) orig[i] = static_cast<int>(i);
    ClawfreeResult res;
    res.decomposition = decompose(root_, orig, res.trace);
    res.decomposition.sort_parts();
    if (!verify(root_, res.decomposition).ok)
      violation(root_, res.trace, "constructed decomposition failed verification");
    return res;
  }

 private:
  [[noreturn]] void violation(const Graph& g, const CaseTrace& trace, const std::string& what) {
    throw ClawfreeError(ClawfreeFailure::THEOREM_VIOLATION,
                        "theorem violation (implementation bug or counterexample): " + what,
                        std::nullopt,
                        g.vertex_count() <= kGraph6MaxVertices ? write_graph6(g) : "",
                        trace);
  }

  static std::vector<int> map_to_orig(const std::vector<int>& orig, const std::vector<int>& vs) {
    std::vector<int> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(orig[static_cast<size_t>(v)]);
    return out;
  }

  static Decomposition lift_through(const Decomposition& d, const std::vector<int>& inv) {
    auto lift_part = [&](const std::vector<Edge>& part) {
      std::vector<Edge> out;
      out.reserve(part.size());
      for (const Edge& e : part)
        out.emplace_back(inv[static_cast<size_t>(e.u)], inv[static_cast<size_t>(e.v)]);
      return out;
    };
    return {lift_part(d.tree), lift_part(d.matching), lift_part(d.two_regular)};
  }

  // Decomposition is returned in g's local ids; trace entries use original ids.
  Decomposition decompose(const Graph& g, const std::vector<int>& orig, CaseTrace& trace) {
    const int n = g.vertex_count();

    if (n <= 3) return base_small(g, orig, trace);

    if (auto cut = bridges(g); !cut.empty()) return cut_edge(g, orig, trace, cut.front());

    // 2-edge-connected from here on
    const auto tris = triangles(g);
    if (tris.empty()) return base_cycle(g, orig, trace);

    const TriangleWitness t = tris.front();  // lexicographically smallest triple
    const auto& pat = t.degree_pattern;
    if (pat == std::array<int, 3>{3, 3, 3}) return tri_333(g, orig, trace, t);
    if (pat == std::array<int, 3>{2, 3, 3}) return tri_233(g, orig, trace, t);
    violation(g, trace,
              "triangle with degree pattern {" + std::to_string(pat[0]) + "," +
                  std::to_string(pat[1]) + "," + std::to_string(pat[2]) +
                  "} in a 2-edge-connected graph");
  }

  Decomposition base_small(const Graph& g, const std::vector<int>& orig, CaseTrace& trace) {
    const int n = g.vertex_count();
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    trace.push_back({CaseTag::BASE_SMALL, map_to_orig(orig, all)});
    Decomposition d;
    const auto es = g.edges();
    if (n <= 1) return d;
    if (n == 2) {
      d.tree = es;  // the single edge
      return d;
    }
    if (es.size() == 2) {  // path on 3 vertices
      d.tree = es;
    } else {  // triangle: two edges span, the third is a matching
      d.tree = {es[0], es[1]};
      d.matching = {es[2]};
    }
    return d;
  }

  Decomposition cut_edge(const Graph& g, const std::vector<int>& orig, CaseTrace& trace,
                         const Edge& e) {
    trace.push_back({CaseTag::CUT_EDGE, map_to_orig(orig, {e.u, e.v})});
    // component sides of g minus e
    const int n = g.vertex_count();
    std::vector<char> side_u(static_cast<size_t>(n), 0);
    std::vector<int> stack{e.u};
    side_u[static_cast<size_t>(e.u)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
        if (!side_u[static_cast<size_t>(w)]) {
          side_u[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> drop_for_h, drop_for_k;
    for (int v = 0; v < n; ++v)
      (side_u[static_cast<size_t>(v)] ? drop_for_k : drop_for_h).push_back(v);
    auto [h, hm] = remove_vertices(g, drop_for_h);  // side of e.u
    auto [k, km] = remove_vertices(g, drop_for_k);  // side of e.v
    auto lift_sub = [&](const Graph& sub, const VertexMap& vm, CaseTrace& tr) {
      const auto inv = vm.inverse(sub.vertex_count());
      std::vector<int> sub_orig;
      sub_orig.reserve(inv.size());
      for (int old : inv) sub_orig.push_back(orig[static_cast<size_t>(old)]);
      return lift_through(decompose(sub, sub_orig, tr), inv);
    };
    Decomposition dh = lift_sub(h, hm, trace);
    Decomposition dk = lift_sub(k, km, trace);
    Decomposition d;
    auto join = [](std::vector<Edge>& dst, const std::vector<Edge>& a, const std::vector<Edge>& b) {
      dst = a;
      dst.insert(dst.end(), b.begin(), b.end());
    };
    join(d.tree, dh.tree, dk.tree);
    d.tree.push_back(e);
    join(d.matching, dh.matching, dk.matching);
    join(d.two_regular, dh.two_regular, dk.two_regular);
    return d;
  }

  Decomposition base_cycle(const Graph& g, const std::vector<int>& orig, CaseTrace& trace) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
      if (g.degree(v) != 2)
        violation(g, trace, "triangle-free 2-edge-connected claw-free graph is not a cycle");
    std::vector<int> cycle{0};
    int prev = -1, cur = 0;
    do {
      const auto& nb = g.neighbors(cur);
      const int next = (nb[0] != prev) ? nb[0] : nb[1];
      prev = cur;
      cur = next;
      if (cur != 0) cycle.push_back(cur);
    } while (cur != 0);
    if (static_cast<int>(cycle.size()) != n)
      violation(g, trace, "degree-2 graph is not a single cycle");
    trace.push_back({CaseTag::BASE_CYCLE, map_to_orig(orig, cycle)});
    Decomposition d;
    const auto es = g.edges();
    d.tree.assign(es.begin(), es.end() - 1);
    d.matching = {es.back()};  // largest canonical edge becomes the matching
    return d;
  }

  Decomposition tri_333(const Graph& g, const std::vector<int>& orig, CaseTrace& trace,
                        const TriangleWitness& t) {
    trace.push_back({CaseTag::TRI_333, map_to_orig(orig, {t.x, t.y, t.z})});
    const std::vector<int> tri{t.x, t.y, t.z};
    std::vector<Edge> external;
    for (int s : tri)
      for (int w : g.neighbors(s))
        if (w != t.x && w != t.y && w != t.z) external.emplace_back(s, w);
    if (external.size() != 3)
      violation(g, trace, "cubic triangle does not have exactly 3 external edges");
    auto [h, vm] = remove_vertices(g, tri);
    if (!is_connected(h))
      violation(g, trace, "removing a cubic triangle disconnected a 2-edge-connected graph");
    const auto inv = vm.inverse(h.vertex_count());
    std::vector<int> sub_orig;
    for (int old : inv) sub_orig.push_back(orig[static_cast<size_t>(old)]);
    Decomposition d = lift_through(decompose(h, sub_orig, trace), inv);
    for (const Edge& e : external) d.tree.push_back(e);
    d.two_regular.emplace_back(t.x, t.y);
    d.two_regular.emplace_back(t.y, t.z);
    d.two_regular.emplace_back(t.x, t.z);
    return d;
  }

  Decomposition tri_233(const Graph& g, const std::vector<int>& orig, CaseTrace& trace,
                        const TriangleWitness& t) {
    // x is the degree-2 corner, y < z the degree-3 corners
    std::vector<int> tri{t.x, t.y, t.z};
    std::stable_partition(tri.begin(), tri.end(), [&](int v) { return g.degree(v) == 2; });
    const int x = tri[0], y = tri[1], z = tri[2];
    if (g.degree(x) != 2 || g.degree(y) != 3 || g.degree(z) != 3)
      violation(g, trace, "triangle degree pattern mismatch in 2-3-3 case");

    std::vector<int> common;
    for (int w : g.neighbors(y))
      if (w != x && w != z && g.has_edge(z, w)) common.push_back(w);

    if (!common.empty()) {
      const int b = common.front();
      if (g.degree(b) != 2)
        violation(g, trace, "shared neighbor of the 2-3-3 triangle has degree 3 (cut-edge case)");
      if (g.vertex_count() != 4)
        violation(g, trace, "2-3-3 triangle with degree-2 shared neighbor in a graph larger than K4 minus an edge");
      trace.push_back({CaseTag::TRI_233_K4_MINUS_EDGE, map_to_orig(orig, {x, y, z, b})});
      Decomposition d;
      d.tree = {Edge(x, y), Edge(y, z), Edge(z, b)};
      d.matching = {Edge(x, z), Edge(y, b)};
      return d;
    }

    // N(y) ∩ N(z) == {x}: identify the triangle and recurse
    auto idr = identify_vertices(g, {x, y, z});
    const int a = idr.merged_vertex;
    if (idr.graph.degree(a) != 2)
      violation(g, trace, "merged triangle vertex does not have degree 2");
    const auto inv = idr.map.inverse(idr.graph.vertex_count());
    std::vector<int> sub_orig;
    for (size_t i = 0; i + 1 < inv.size(); ++i) sub_orig.push_back(orig[static_cast<size_t>(inv[i])]);
    sub_orig.push_back(orig[static_cast<size_t>(x)]);  // stand-in id for the merged vertex

    CaseTrace sub_trace;
    Decomposition sub = decompose(idr.graph, sub_orig, sub_trace);

    auto origin_of = [&](const Edge& e) -> Edge {
      const auto it = idr.origin.originals.find(e);
      if (it == idr.origin.originals.end() || it->second.size() != 1)
        violation(g, trace, "merged-vertex edge has ambiguous origin");
      return it->second.front();
    };
    auto lift_edge = [&](const Edge& e) -> Edge {
      if (e.u == a || e.v == a) return origin_of(e);
      return Edge(inv[static_cast<size_t>(e.u)], inv[static_cast<size_t>(e.v)]);
    };

    std::vector<Edge> a_tree_edges;
    for (const Edge& e : sub.tree)
      if (e.u == a || e.v == a) a_tree_edges.push_back(e);

    Decomposition d;
    for (const Edge& e : sub.tree) d.tree.push_back(lift_edge(e));
    for (const Edge& e : sub.two_regular) d.two_regular.push_back(lift_edge(e));

    if (a_tree_edges.size() == 2) {
      trace.push_back({CaseTag::TRI_233_IDENTIFY_A2, map_to_orig(orig, {x, y, z})});
      for (const Edge& e : sub.matching) d.matching.push_back(lift_edge(e));
      d.tree.emplace_back(x, y);
      d.tree.emplace_back(y, z);
      d.matching.emplace_back(x, z);
    } else if (a_tree_edges.size() == 1) {
      // relabel so the merged vertex's tree edge is the external edge of "z"
      const Edge tree_orig = origin_of(a_tree_edges.front());
      const int z_role = (tree_orig.u == y || tree_orig.v == y) ? y : z;
      const int y_role = (z_role == y) ? z : y;
      // the other a-edge cannot carry 2-regular degree 2; it must be a matching edge
      bool other_in_matching = false;
      for (const Edge& e : sub.matching)
        if (e.u == a || e.v == a) other_in_matching = true;
      if (!other_in_matching)
        violation(g, trace, "second merged-vertex edge is not a matching edge");
      trace.push_back({CaseTag::TRI_233_IDENTIFY_A1, map_to_orig(orig, {x, y_role, z_role})});
      for (const Edge& e : sub.matching) d.matching.push_back(lift_edge(e));
      d.tree.emplace_back(x, y_role);
      d.tree.emplace_back(y_role, z_role);
      d.matching.emplace_back(x, z_role);
    } else {
      violation(g, trace, "merged vertex has tree degree " + std::to_string(a_tree_edges.size()));
    }
    trace.insert(trace.end(), sub_trace.begin(), sub_trace.end());

    if (d.tree.size() != sub.tree.size() + 2)
      violation(g, trace, "identify lift did not add exactly 2 tree edges");
    return d;
  }

  const Graph& root_;
};

}  // namespace detail

/// Theorem-backed constructive decomposition of a connected claw-free
/// subcubic graph, with a per-step case trace in original vertex ids.
inline ClawfreeResult decompose_clawfree(const Graph& g) {
  if (g.vertex_count() > 10'000)
    throw GraphError("decompose_clawfree: graphs are capped at 10000 vertices");
  if (degree_class(g) == DegreeClass::exceeds_three)
    throw ClawfreeError(ClawfreeFailure::NOT_SUBCUBIC, "input has a vertex of degree > 3");
  if (!is_connected(g))
    throw ClawfreeError(ClawfreeFailure::DISCONNECTED, "input graph is disconnected");
  if (auto claw = find_claw(g))
    throw ClawfreeError(ClawfreeFailure::NOT_CLAWFREE, "input graph contains an induced claw",
                        claw);
  return detail::ClawfreeSolver(g).solve();
}

struct AutoResult {
  SearchOutcome outcome;
  std::string method;  // "clawfree" or "exact"
  CaseTrace trace;     // filled only for the clawfree method
};

/// Dispatch: constructive solver on claw-free inputs, exact search otherwise.
inline AutoResult decompose_auto(const Graph& g, const SearchLimits& limits = {}) {
  if (degree_class(g) == DegreeClass::exceeds_three)
    throw GraphError("decompose_auto: maximum degree exceeds 3");
  if (!is_connected(g)) throw GraphError("decompose_auto: graph is disconnected");
  AutoResult res;
  if (is_claw_free(g)) {
    auto [d, trace] = decompose_clawfree(g);
    res.outcome.kind = SearchOutcome::Kind::Good;
    res.outcome.decomposition = std::move(d);
    res.method = "clawfree";
    res.trace = std::move(trace);
  } else {
    res.outcome = find_good_decomposition(g, limits);
    res.method = "exact";
  }
  if (res.outcome.decomposition && !verify(g, *res.outcome.decomposition).ok)
    throw std::logic_error("decompose_auto produced an invalid decomposition");
  return res;
}

}  // namespace gooddecomp

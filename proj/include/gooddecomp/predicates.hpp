#pragma once

#include <cstdint>
#include <array>
#include <optional>

#include "gooddecomp/graph.hpp"

namespace gooddecomp {

/// Thrown when a bounded search runs out of its node budget. Distinct from
/// a negative answer: a budget overrun is never reported as "absent".
class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DegreeClass { cubic, subcubic_not_cubic, exceeds_three };

inline DegreeClass degree_class(const Graph& g) {
  bool all_three = g.vertex_count() > 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d > 3) return DegreeClass::exceeds_three;
    if (d != 3) all_three = false;
  }
  return all_three ? DegreeClass::cubic : DegreeClass::subcubic_not_cubic;
}

inline bool is_subcubic(const Graph& g) {
  return degree_class(g) != DegreeClass::exceeds_three;
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

/// All cut-edges, per component, via iterative DFS low-points.
inline std::vector<Edge> bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<Edge> out;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    size_t next = 0;
    bool parent_edge_skipped = false;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] != -1) continue;
    stack.push_back({root, -1});
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const int w = nb[f.next++];
        if (w == f.parent && !f.parent_edge_skipped) {
          f.parent_edge_skipped = true;  // a second parent edge would be parallel; graphs are simple
          continue;
        }
        if (disc[static_cast<size_t>(w)] != -1) {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
        } else {
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          stack.push_back({w, f.v});
        }
      } else {
        const int v = f.v, p = f.parent;
        stack.pop_back();
        if (p != -1) {
          low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
          if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)]) out.emplace_back(p, v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_two_edge_connected(const Graph& g) {
  return g.vertex_count() >= 2 && is_connected(g) && bridges(g).empty();
}

/// Induced K_{1,3}: a center adjacent to three pairwise non-adjacent leaves.
struct ClawWitness {
  int center = -1;
  std::array<int, 3> leaves{};
};

inline std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    if (nb.size() < 3) continue;
    if (nb.size() == 3) {
      // subcubic fast path: the neighbor triple is unique
      if (!g.has_edge(nb[0], nb[1]) && !g.has_edge(nb[0], nb[2]) && !g.has_edge(nb[1], nb[2]))
        return ClawWitness{v, {nb[0], nb[1], nb[2]}};
      continue;
    }
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        for (size_t k = j + 1; k < nb.size(); ++k)
          if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
            return ClawWitness{v, {nb[i], nb[j], nb[k]}};
  }
  return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

struct TriangleWitness {
  int x = -1, y = -1, z = -1;               // x < y < z
  std::array<int, 3> degree_pattern{};      // sorted degrees in g
};

/// Every triangle once, ascending canonical vertex order.
inline std::vector<TriangleWitness> triangles(const Graph& g) {
  std::vector<TriangleWitness> out;
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y : g.neighbors(x)) {
      if (y <= x) continue;
      for (int z : g.neighbors(y)) {
        if (z <= y) continue;
        if (g.has_edge(x, z)) {
          TriangleWitness t{x, y, z, {g.degree(x), g.degree(y), g.degree(z)}};
          std::sort(t.degree_pattern.begin(), t.degree_pattern.end());
          out.push_back(t);
        }
      }
    }
  return out;
}

struct InducedCycleWitness {
  std::vector<int> cycle;  // consecutive vertices adjacent, cyclically; no chords
};

/// First chordless cycle of length > k found by a deterministic DFS over
/// induced paths (the path stays chordless; extensions adjacent to an
/// interior vertex are pruned). Each expansion costs one budget node.
inline std::optional<InducedCycleWitness> find_induced_cycle_longer_than(
    const Graph& g, int k, std::uint64_t max_nodes = 50'000'000) {
  if (k < 3) throw GraphError("find_induced_cycle_longer_than: k must be >= 3");
  const int n = g.vertex_count();
  std::uint64_t nodes = 0;
  std::vector<int> path;
  std::vector<char> in_path(static_cast<size_t>(n), 0);

  // path[0] is the smallest vertex of any cycle found through it
  auto extend = [&](auto&& self, int last) -> std::optional<InducedCycleWitness> {
    if (++nodes > max_nodes)
      throw SearchBudgetError("induced-cycle search exceeded node budget");
    for (int w : g.neighbors(last)) {
      if (w <= path[0] || in_path[static_cast<size_t>(w)]) continue;
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size() && !chord; ++i)
        if (g.has_edge(w, path[i])) chord = true;
      if (chord) continue;
      const bool closes = g.has_edge(w, path[0]);
      if (closes) {
        if (static_cast<int>(path.size()) + 1 > k) {
          auto cyc = path;
          cyc.push_back(w);
          return InducedCycleWitness{std::move(cyc)};
        }
        continue;  // short chordless cycle; extending past w would create a chord
      }
      path.push_back(w);
      in_path[static_cast<size_t>(w)] = 1;
      if (auto res = self(self, w)) return res;
      in_path[static_cast<size_t>(w)] = 0;
      path.pop_back();
    }
    return std::nullopt;
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    std::fill(in_path.begin(), in_path.end(), 0);
    in_path[static_cast<size_t>(s)] = 1;
    for (int x : g.neighbors(s)) {
      if (x <= s) continue;
      path.push_back(x);
      in_path[static_cast<size_t>(x)] = 1;
      if (auto res = extend(extend, x)) return res;
      in_path[static_cast<size_t>(x)] = 0;
      path.pop_back();
    }
  }
  return std::nullopt;
}

inline bool is_4_chordal(const Graph& g, std::uint64_t max_nodes = 50'000'000) {
  return !find_induced_cycle_longer_than(g, 4, max_nodes).has_value();
}

}  // namespace gooddecomp

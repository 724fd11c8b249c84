#pragma once

#include <cstdint>

#include <set>

#include "gooddecomp/predicates.hpp"

namespace gooddecomp {

class GenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// splitmix64: state advances by 0x9E3779B97F4A7C15; output mixes with
/// shifts and the constants 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB.
/// Portable 64-bit integer arithmetic, identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

inline Graph cycle(int n) {
  if (n < 3) throw GenError("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

inline Graph complete(int n) {
  if (n < 1 || n > 4) throw GenError("complete: n must be in 1..4 (subcubic)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

inline Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1 || m > 3 || n > 3)
    throw GenError("complete_bipartite: parts must be in 1..3 (subcubic)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph::from_edge_list(m + n, edges);
}

/// Outer C5 on 0..4, inner pentagram on 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edge_list(10, edges);
}

/// C_n x K2: outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- n+i.
inline Graph prism(int n) {
  if (n < 3) throw GenError("prism: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph::from_edge_list(2 * n, edges);
}

/// Each vertex v becomes the triangle {3v, 3v+1, 3v+2}; the edge to v's
/// i-th neighbor (ascending) attaches at 3v+i. Cubic input gives a cubic
/// claw-free output on 3n vertices.
inline Graph triangle_inflation(const Graph& g) {
  if (degree_class(g) != DegreeClass::cubic)
    throw GenError("triangle_inflation: input must be cubic");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int w = nb[i];
      if (w < v) continue;
      const auto& wb = g.neighbors(w);
      const size_t j = static_cast<size_t>(
          std::lower_bound(wb.begin(), wb.end(), v) - wb.begin());
      edges.emplace_back(3 * v + static_cast<int>(i), 3 * w + static_cast<int>(j));
    }
  }
  return Graph::from_edge_list(3 * g.vertex_count(), edges);
}

enum class GenFilter { none, claw_free, four_chordal };

/// Rejection sampler, NOT uniform over its class: each attempt grows a
/// random subcubic graph edge by edge to a random target count, then the
/// whole attempt is rejected unless it is connected and passes the filter.
/// Identical (n, seed, filter) always yields the identical graph.
inline Graph random_connected_subcubic(int n, std::uint64_t seed, GenFilter filter = GenFilter::none,
                                       int retry_cap = 100'000) {
  if (n < 1) throw GenError("random_connected_subcubic: n must be >= 1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    const int max_edges = 3 * n / 2;
    const int min_edges = n - 1;
    const int target =
        (n == 1) ? 0
                 : min_edges + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                                   max_edges - min_edges + 1)));
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> present;
    while (static_cast<int>(edges.size()) < target) {
      std::vector<std::pair<int, int>> admissible;
      for (int u = 0; u < n; ++u) {
        if (deg[static_cast<size_t>(u)] >= 3) continue;
        for (int v = u + 1; v < n; ++v)
          if (deg[static_cast<size_t>(v)] < 3 && !present.count({u, v}))
            admissible.emplace_back(u, v);
      }
      if (admissible.empty()) break;  // saturated below target
      const auto pick = admissible[rng.below(admissible.size())];
      edges.push_back(pick);
      present.insert(pick);
      ++deg[static_cast<size_t>(pick.first)];
      ++deg[static_cast<size_t>(pick.second)];
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (!is_connected(g)) continue;
    if (filter == GenFilter::claw_free && !is_claw_free(g)) continue;
    if (filter == GenFilter::four_chordal && !is_4_chordal(g)) continue;
    return g;
  }
  throw GenError("random_connected_subcubic: retry cap exhausted for n=" + std::to_string(n));
}

}  // namespace gooddecomp

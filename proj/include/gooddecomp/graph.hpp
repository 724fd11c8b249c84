#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gooddecomp {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge in canonical orientation (u < v).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw GraphError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph, dense vertex ids 0..n-1, sorted adjacency.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (auto [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw GraphError("edge endpoint out of range: (" + std::to_string(a) + "," +
                         std::to_string(b) + ") with n=" + std::to_string(n));
      if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
      g.adj_[static_cast<size_t>(a)].push_back(b);
      g.adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
  }

  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool has_edge(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return false;
    const auto& nb = adj_[static_cast<size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// All edges in canonical (u,v) order, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
      for (int w : adj_[static_cast<size_t>(u)])
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Renumbering produced by vertex surgery. Maps old ids to new ids,
/// kRemoved for deleted vertices.
struct VertexMap {
  static constexpr int kRemoved = -1;
  std::vector<int> to_new;

  int operator()(int old) const { return to_new.at(static_cast<size_t>(old)); }

  /// Inverse lookup: new id -> old id. For identify_vertices the merged
  /// vertex has several preimages; this returns the smallest.
  std::vector<int> inverse(int new_n) const {
    std::vector<int> inv(static_cast<size_t>(new_n), -1);
    for (int old = static_cast<int>(to_new.size()) - 1; old >= 0; --old)
      if (to_new[static_cast<size_t>(old)] != kRemoved)
        inv[static_cast<size_t>(to_new[static_cast<size_t>(old)])] = old;
    return inv;
  }
};

/// Induced subgraph on V(g) minus s, survivors renumbered in ascending order.
inline std::pair<Graph, VertexMap> remove_vertices(const Graph& g, const std::vector<int>& s) {
  const int n = g.vertex_count();
  std::vector<char> drop(static_cast<size_t>(n), 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw GraphError("remove_vertices: vertex out of range");
    drop[static_cast<size_t>(v)] = 1;
  }
  VertexMap vm;
  vm.to_new.assign(static_cast<size_t>(n), VertexMap::kRemoved);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!drop[static_cast<size_t>(v)]) vm.to_new[static_cast<size_t>(v)] = next++;
  std::vector<std::pair<int, int>> kept;
  for (const Edge& e : g.edges())
    if (!drop[static_cast<size_t>(e.u)] && !drop[static_cast<size_t>(e.v)])
      kept.emplace_back(vm(e.u), vm(e.v));
  return {Graph::from_edge_list(next, kept), vm};
}

/// For each new edge incident to the merged vertex, the original edge(s) it
/// came from. Parallel edges collapse to one entry listing all originals.
struct EdgeOrigin {
  std::map<Edge, std::vector<Edge>> originals;
};

struct IdentifyResult {
  Graph graph;
  VertexMap map;
  EdgeOrigin origin;
  int merged_vertex = -1;
};

/// Merge the vertex set s into one new vertex (highest new id). Internal
/// edges of s are discarded, parallels collapsed, loops dropped.
inline IdentifyResult identify_vertices(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw GraphError("identify_vertices: empty set");
  const int n = g.vertex_count();
  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw GraphError("identify_vertices: vertex out of range");
    in_s[static_cast<size_t>(v)] = 1;
  }
  IdentifyResult res;
  res.map.to_new.assign(static_cast<size_t>(n), VertexMap::kRemoved);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!in_s[static_cast<size_t>(v)]) res.map.to_new[static_cast<size_t>(v)] = next++;
  res.merged_vertex = next;
  for (int v = 0; v < n; ++v)
    if (in_s[static_cast<size_t>(v)]) res.map.to_new[static_cast<size_t>(v)] = res.merged_vertex;

  std::vector<std::pair<int, int>> new_edges;
  for (const Edge& e : g.edges()) {
    const bool su = in_s[static_cast<size_t>(e.u)];
    const bool sv = in_s[static_cast<size_t>(e.v)];
    if (su && sv) continue;  // internal edge of s becomes a loop
    Edge ne(res.map(e.u), res.map(e.v));
    new_edges.emplace_back(ne.u, ne.v);
    if (su || sv) res.origin.originals[ne].push_back(e);
  }
  res.graph = Graph::from_edge_list(next + 1, new_edges);
  return res;
}

}  // namespace gooddecomp

#pragma once

#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "gooddecomp/graph.hpp"

namespace gooddecomp {

/// Candidate partition of an edge set into spanning tree / matching /
/// 2-regular parts. Whether it actually is one is verify's job.
struct Decomposition {
  std::vector<Edge> tree;
  std::vector<Edge> matching;
  std::vector<Edge> two_regular;

  void sort_parts() {
    std::sort(tree.begin(), tree.end());
    std::sort(matching.begin(), matching.end());
    std::sort(two_regular.begin(), two_regular.end());
  }

  bool operator==(const Decomposition&) const = default;
};

enum class Violation {
  NOT_PARTITION_MISSING,
  NOT_PARTITION_OVERLAP,
  NOT_PARTITION_FOREIGN,
  TREE_WRONG_SIZE,
  TREE_CYCLIC,
  TREE_DISCONNECTED,
  MATCHING_SHARED_VERTEX,
  TWO_REGULAR_BAD_DEGREE,
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::NOT_PARTITION_MISSING: return "NOT_PARTITION_MISSING";
    case Violation::NOT_PARTITION_OVERLAP: return "NOT_PARTITION_OVERLAP";
    case Violation::NOT_PARTITION_FOREIGN: return "NOT_PARTITION_FOREIGN";
    case Violation::TREE_WRONG_SIZE: return "TREE_WRONG_SIZE";
    case Violation::TREE_CYCLIC: return "TREE_CYCLIC";
    case Violation::TREE_DISCONNECTED: return "TREE_DISCONNECTED";
    case Violation::MATCHING_SHARED_VERTEX: return "MATCHING_SHARED_VERTEX";
    case Violation::TWO_REGULAR_BAD_DEGREE: return "TWO_REGULAR_BAD_DEGREE";
  }
  return "?";
}

struct VerificationReport {
  bool ok = false;
  std::vector<std::pair<Violation, std::string>> violations;
  /// Cycle decomposition of the 2-regular part, filled when its degrees check out.
  std::vector<std::vector<int>> two_regular_cycles;
};

namespace detail {
inline std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}
}  // namespace detail

/// Ground truth for "good decomposition": reports every violation, not just
/// the first. Empty matching and empty 2-regular part are fine.
inline VerificationReport verify(const Graph& g, const Decomposition& d) {
  VerificationReport rep;
  auto flag = [&](Violation v, std::string detail) {
    rep.violations.emplace_back(v, std::move(detail));
  };
  const int n = g.vertex_count();

  std::set<Edge> seen;
  auto check_part = [&](const std::vector<Edge>& part, const char* name) {
    for (const Edge& e : part) {
      if (!g.has_edge(e.u, e.v))
        flag(Violation::NOT_PARTITION_FOREIGN, std::string(name) + " edge " + detail::edge_str(e) + " not in graph");
      if (!seen.insert(e).second)
        flag(Violation::NOT_PARTITION_OVERLAP, "edge " + detail::edge_str(e) + " appears in more than one part");
    }
  };
  check_part(d.tree, "tree");
  check_part(d.matching, "matching");
  check_part(d.two_regular, "two_regular");
  for (const Edge& e : g.edges())
    if (!seen.count(e))
      flag(Violation::NOT_PARTITION_MISSING, "edge " + detail::edge_str(e) + " in no part");

  // spanning tree: n-1 edges + acyclic (a forest of that size spans)
  if (static_cast<int>(d.tree.size()) != n - 1 && !(n == 0 && d.tree.empty()))
    flag(Violation::TREE_WRONG_SIZE,
         "tree has " + std::to_string(d.tree.size()) + " edges, expected " + std::to_string(n - 1));
  {
    std::vector<int> parent(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    bool cyclic = false;
    int components = n;
    for (const Edge& e : d.tree) {
      if (e.u >= n || e.v >= n) continue;  // already flagged foreign
      const int ru = find(e.u), rv = find(e.v);
      if (ru == rv) {
        cyclic = true;
      } else {
        parent[static_cast<size_t>(ru)] = rv;
        --components;
      }
    }
    if (cyclic) flag(Violation::TREE_CYCLIC, "tree part contains a cycle");
    if (n > 0 && components != 1)
      flag(Violation::TREE_DISCONNECTED,
           "tree part leaves " + std::to_string(components) + " components");
  }

  {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (const Edge& e : d.matching)
      if (e.u < n && e.v < n) {
        ++deg[static_cast<size_t>(e.u)];
        ++deg[static_cast<size_t>(e.v)];
      }
    for (int v = 0; v < n; ++v)
      if (deg[static_cast<size_t>(v)] > 1)
        flag(Violation::MATCHING_SHARED_VERTEX,
             "vertex " + std::to_string(v) + " meets " + std::to_string(deg[static_cast<size_t>(v)]) + " matching edges");
  }

  {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    bool degrees_ok = true;
    for (const Edge& e : d.two_regular)
      if (e.u < n && e.v < n) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
      }
    for (int v = 0; v < n; ++v) {
      const size_t deg = adj[static_cast<size_t>(v)].size();
      if (deg != 0 && deg != 2) {
        degrees_ok = false;
        flag(Violation::TWO_REGULAR_BAD_DEGREE,
             "vertex " + std::to_string(v) + " has degree " + std::to_string(deg) + " in two_regular part");
      }
    }
    if (degrees_ok) {
      std::vector<char> used(static_cast<size_t>(n), 0);
      for (int v = 0; v < n; ++v) {
        if (used[static_cast<size_t>(v)] || adj[static_cast<size_t>(v)].empty()) continue;
        std::vector<int> cycle;
        int prev = -1, cur = v;
        do {
          cycle.push_back(cur);
          used[static_cast<size_t>(cur)] = 1;
          const auto& nb = adj[static_cast<size_t>(cur)];
          const int next = (nb[0] != prev) ? nb[0] : nb[1];
          prev = cur;
          cur = next;
        } while (cur != v);
        rep.two_regular_cycles.push_back(std::move(cycle));
      }
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

// --- JSON format: {"schema":1,"tree":[[u,v],...],"matching":...,"two_regular":...},
//     pairs canonical (u<v) and lexicographically sorted.

inline nlohmann::json edges_to_json(const std::vector<Edge>& part) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : part) arr.push_back({e.u, e.v});
  return arr;
}

inline nlohmann::json decomposition_to_json(const Decomposition& d) {
  return {{"schema", 1},
          {"tree", edges_to_json(d.tree)},
          {"matching", edges_to_json(d.matching)},
          {"two_regular", edges_to_json(d.two_regular)}};
}

inline std::string serialize(const Decomposition& d) { return decomposition_to_json(d).dump(); }

class DecompositionFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Decomposition parse_decomposition(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DecompositionFormatError(std::string("malformed decomposition JSON: ") + e.what());
  }
  auto read_part = [&](const char* key) {
    std::vector<Edge> part;
    if (!j.contains(key) || !j[key].is_array())
      throw DecompositionFormatError(std::string("missing or non-array key: ") + key);
    for (const auto& pair : j[key]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw DecompositionFormatError(std::string("bad edge pair under ") + key);
      const int u = pair[0].get<int>(), v = pair[1].get<int>();
      if (u >= v) throw DecompositionFormatError("edge pair not canonical (u<v): [" +
                                                 std::to_string(u) + "," + std::to_string(v) + "]");
      part.emplace_back(u, v);
    }
    if (!std::is_sorted(part.begin(), part.end()))
      throw DecompositionFormatError(std::string("edge list not sorted under ") + key);
    return part;
  };
  Decomposition d{read_part("tree"), read_part("matching"), read_part("two_regular")};
  std::set<Edge> all;
  for (const auto* part : {&d.tree, &d.matching, &d.two_regular})
    for (const Edge& e : *part)
      if (!all.insert(e).second)
        throw DecompositionFormatError("edge " + detail::edge_str(e) + " appears in two parts");
  return d;
}

inline VerificationReport verify_parsed(const Graph& g, std::string_view text) {
  return verify(g, parse_decomposition(text));
}

}  // namespace gooddecomp

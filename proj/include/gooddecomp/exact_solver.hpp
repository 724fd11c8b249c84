#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/predicates.hpp"

namespace gooddecomp {

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;
  std::optional<std::chrono::milliseconds> wall_clock;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::microseconds elapsed{0};
};

struct SearchOutcome {
  enum class Kind { Good, NotGood, BudgetExceeded };
  Kind kind = Kind::NotGood;
  std::optional<Decomposition> decomposition;  // present iff Good
  SearchStats stats;
};

inline const char* to_string(SearchOutcome::Kind k) {
  switch (k) {
    case SearchOutcome::Kind::Good: return "good";
    case SearchOutcome::Kind::NotGood: return "not_good";
    case SearchOutcome::Kind::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace detail {

enum : int { kUnlabeled = -1, kTree = 0, kTwoRegular = 1, kMatching = 2 };

/// Backtracking labeler over edges in DFS discovery order. The union-find
/// guards tree acyclicity and supports O(1) rollback per undo.
class ExactSearch {
 public:
  ExactSearch(const Graph& g, const SearchLimits& limits) : g_(g), limits_(limits) {
    const int n = g.vertex_count();
    // edges in DFS discovery order from vertex 0: keeps the labeled prefix
    // connected so the acyclicity prune bites early
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::set<Edge> listed;
    if (n > 0) {
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
          if (Edge e(v, w); !listed.count(e)) {
            listed.insert(e);
            edges_.push_back(e);
          }
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    parent_.resize(static_cast<size_t>(n));
    rank_.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) parent_[static_cast<size_t>(v)] = v;
    tree_deg_.assign(static_cast<size_t>(n), 0);
    match_deg_.assign(static_cast<size_t>(n), 0);
    tr_deg_.assign(static_cast<size_t>(n), 0);
    remaining_.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) remaining_[static_cast<size_t>(v)] = g.degree(v);
    labels_.assign(edges_.size(), kUnlabeled);
  }

  /// Runs to the first complete valid labeling. count mode exhausts the
  /// space and tallies every valid labeling instead.
  SearchOutcome run(bool count_all, std::uint64_t* count_out) {
    const auto t0 = std::chrono::steady_clock::now();
    deadline_.reset();
    if (limits_.wall_clock) deadline_ = t0 + *limits_.wall_clock;
    nodes_ = 0;
    budget_hit_ = false;
    if (count_out) *count_out = 0;

    SearchOutcome out;
    bool found = dfs(0, count_all, count_out);
    out.stats.nodes = nodes_;
    out.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    if (budget_hit_) {
      out.kind = SearchOutcome::Kind::BudgetExceeded;
    } else if (found && !count_all) {
      out.kind = SearchOutcome::Kind::Good;
      out.decomposition = extract();
    } else if (count_all && count_out && *count_out > 0) {
      out.kind = SearchOutcome::Kind::Good;
    } else {
      out.kind = SearchOutcome::Kind::NotGood;
    }
    return out;
  }

 private:
  int find(int v) const {
    while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
    return v;
  }

  bool uf_union(int a, int b) {  // returns false if already joined; pushes rollback entry
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[static_cast<size_t>(ra)] < rank_[static_cast<size_t>(rb)]) std::swap(ra, rb);
    undo_.push_back({rb, rank_[static_cast<size_t>(ra)]});
    parent_[static_cast<size_t>(rb)] = ra;
    if (rank_[static_cast<size_t>(ra)] == rank_[static_cast<size_t>(rb)])
      ++rank_[static_cast<size_t>(ra)];
    return true;
  }

  void uf_rollback() {
    const auto [child, old_rank] = undo_.back();
    undo_.pop_back();
    rank_[static_cast<size_t>(parent_[static_cast<size_t>(child)])] = old_rank;
    parent_[static_cast<size_t>(child)] = child;
  }

  bool over_budget() {
    if (nodes_ > limits_.max_nodes) return true;
    if (deadline_ && (nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_)
      return true;
    return false;
  }

  /// Endpoint feasibility after an edge at v got its final label.
  bool vertex_ok(int v) const {
    const int rem = remaining_[static_cast<size_t>(v)];
    const int tr = tr_deg_[static_cast<size_t>(v)];
    if (tr == 1 && rem == 0) return false;           // 2-regular degree must end at 0 or 2
    if (tree_deg_[static_cast<size_t>(v)] == 0 && rem == 0 && g_.vertex_count() >= 2)
      return false;                                  // spanning tree must touch every vertex
    return true;
  }

  bool dfs(size_t i, bool count_all, std::uint64_t* count_out) {
    if (i == edges_.size()) {
      if (tree_count_ != g_.vertex_count() - 1 && g_.vertex_count() > 0) return false;
      if (count_all) {
        ++*count_out;
        return false;  // keep exhausting
      }
      return true;
    }
    const Edge e = edges_[i];
    const int n_minus_1 = g_.vertex_count() - 1;
    const int edges_left_after = static_cast<int>(edges_.size() - i - 1);

    for (int label : {kTree, kTwoRegular, kMatching}) {
      ++nodes_;
      if (over_budget()) {
        budget_hit_ = true;
        return false;
      }
      bool applied = false;
      switch (label) {
        case kTree:
          if (tree_count_ < n_minus_1 && uf_union(e.u, e.v)) {
            ++tree_count_;
            ++tree_deg_[static_cast<size_t>(e.u)];
            ++tree_deg_[static_cast<size_t>(e.v)];
            applied = true;
          }
          break;
        case kTwoRegular:
          if (tr_deg_[static_cast<size_t>(e.u)] < 2 && tr_deg_[static_cast<size_t>(e.v)] < 2) {
            ++tr_deg_[static_cast<size_t>(e.u)];
            ++tr_deg_[static_cast<size_t>(e.v)];
            applied = true;
          }
          break;
        case kMatching:
          if (match_deg_[static_cast<size_t>(e.u)] == 0 && match_deg_[static_cast<size_t>(e.v)] == 0) {
            ++match_deg_[static_cast<size_t>(e.u)];
            ++match_deg_[static_cast<size_t>(e.v)];
            applied = true;
          }
          break;
      }
      if (!applied) continue;
      --remaining_[static_cast<size_t>(e.u)];
      --remaining_[static_cast<size_t>(e.v)];
      labels_[i] = label;

      const bool feasible = vertex_ok(e.u) && vertex_ok(e.v) &&
                            tree_count_ + edges_left_after >= n_minus_1;
      if (feasible && dfs(i + 1, count_all, count_out)) return true;

      labels_[i] = kUnlabeled;
      ++remaining_[static_cast<size_t>(e.u)];
      ++remaining_[static_cast<size_t>(e.v)];
      switch (label) {
        case kTree:
          uf_rollback();
          --tree_count_;
          --tree_deg_[static_cast<size_t>(e.u)];
          --tree_deg_[static_cast<size_t>(e.v)];
          break;
        case kTwoRegular:
          --tr_deg_[static_cast<size_t>(e.u)];
          --tr_deg_[static_cast<size_t>(e.v)];
          break;
        case kMatching:
          --match_deg_[static_cast<size_t>(e.u)];
          --match_deg_[static_cast<size_t>(e.v)];
          break;
      }
      if (budget_hit_) return false;
    }
    return false;
  }

  Decomposition extract() const {
    Decomposition d;
    for (size_t i = 0; i < edges_.size(); ++i) {
      switch (labels_[i]) {
        case kTree: d.tree.push_back(edges_[i]); break;
        case kTwoRegular: d.two_regular.push_back(edges_[i]); break;
        case kMatching: d.matching.push_back(edges_[i]); break;
      }
    }
    d.sort_parts();
    return d;
  }

  const Graph& g_;
  SearchLimits limits_;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
  std::vector<int> parent_, rank_;
  std::vector<std::pair<int, int>> undo_;
  std::vector<int> tree_deg_, match_deg_, tr_deg_, remaining_;
  int tree_count_ = 0;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace detail

/// Decides whether a connected subcubic graph has a good decomposition and
/// produces a verified one when it does. BudgetExceeded is never folded
/// into NotGood.
inline SearchOutcome find_good_decomposition(const Graph& g, const SearchLimits& limits = {}) {
  if (!is_connected(g)) throw GraphError("find_good_decomposition: graph is disconnected");
  if (degree_class(g) == DegreeClass::exceeds_three)
    throw GraphError("find_good_decomposition: maximum degree exceeds 3");
  detail::ExactSearch search(g, limits);
  SearchOutcome out = search.run(/*count_all=*/false, nullptr);
  if (out.kind == SearchOutcome::Kind::Good) {
    const auto rep = verify(g, *out.decomposition);
    if (!rep.ok) throw std::logic_error("exact solver produced an invalid decomposition");
  }
  return out;
}

struct CountOutcome {
  bool budget_exceeded = false;
  std::uint64_t count = 0;
  SearchStats stats;
};

inline CountOutcome count_good_decompositions(const Graph& g, const SearchLimits& limits = {}) {
  if (!is_connected(g)) throw GraphError("count_good_decompositions: graph is disconnected");
  if (degree_class(g) == DegreeClass::exceeds_three)
    throw GraphError("count_good_decompositions: maximum degree exceeds 3");
  detail::ExactSearch search(g, limits);
  std::uint64_t count = 0;
  SearchOutcome out = search.run(/*count_all=*/true, &count);
  return {out.kind == SearchOutcome::Kind::BudgetExceeded, count, out.stats};
}

}  // namespace gooddecomp

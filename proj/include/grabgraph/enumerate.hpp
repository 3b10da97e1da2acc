#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "grabgraph/base_graph.hpp"
#include "grabgraph/errors.hpp"

namespace grab {

namespace detail {

inline constexpr int kMaxEnum = 12;

/// Canonical-form search: lexicographically smallest adjacency bit
/// string over all vertex orderings, found by ordered DFS with prefix
/// pruning. Row t holds position t's bits toward positions 0..t-1,
/// earliest position most significant. A branch is cut as soon as its
/// prefix exceeds the best complete ordering found so far; candidates
/// are tried in ascending row order so the first descent is already
/// greedy-minimal.
struct CanonSearch {
  int n;
  const std::vector<uint64_t>& adj;
  std::array<uint16_t, kMaxEnum> cur_row{}, best_row{};
  std::array<int, kMaxEnum> chosen{};
  bool have_best = false;
  uint64_t version = 0;

  explicit CanonSearch(int nn, const std::vector<uint64_t>& a) : n(nn), adj(a) {}

  uint16_t row_bits(int v, int t) const {
    uint16_t row = 0;
    for (int s = 0; s < t; ++s)
      row = static_cast<uint16_t>(
          (row << 1) | ((adj[static_cast<size_t>(v)] >> chosen[static_cast<size_t>(s)]) & 1));
    return row;
  }

  // eq: cur_row[0..t-1] equals best_row[0..t-1]. A leaf reached with
  // eq == false is strictly smaller (the only way to clear eq is a
  // strictly smaller row, and best cannot change in between without a
  // version bump resetting eq in the frames above).
  void dfs(int t, uint64_t used, bool eq) {
    if (t == n) {
      if (!have_best || !eq) {
        best_row = cur_row;
        have_best = true;
        ++version;
      }
      return;
    }
    std::array<std::pair<uint16_t, int>, kMaxEnum> cand{};
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (!((used >> v) & 1)) cand[static_cast<size_t>(count++)] = {row_bits(v, t), v};
    std::sort(cand.begin(), cand.begin() + count);
    for (int i = 0; i < count; ++i) {
      auto [row, v] = cand[static_cast<size_t>(i)];
      if (have_best && eq && row > best_row[static_cast<size_t>(t)])
        break;  // sorted: the rest only grows
      bool child_eq = have_best && eq && row == best_row[static_cast<size_t>(t)];
      cur_row[static_cast<size_t>(t)] = row;
      chosen[static_cast<size_t>(t)] = v;
      uint64_t v0 = version;
      dfs(t + 1, used | (uint64_t{1} << v), child_eq);
      if (version != v0) eq = true;  // new best extends our prefix
    }
  }
};

}  // namespace detail

/// Canonical form of a graph on n <= 12 vertices given adjacency masks:
/// the smallest packed lower-triangle bit string over all orderings.
/// Equal forms exactly characterize isomorphic graphs.
inline uint64_t canonical_form(int n, const std::vector<uint64_t>& adj) {
  if (n < 1 || n > detail::kMaxEnum)
    throw ContractError("canonical_form handles 1..12 vertices");
  detail::CanonSearch cs(n, adj);
  cs.dfs(0, 0, true);
  uint64_t packed = 0;
  for (int t = 1; t < n; ++t)
    packed = (packed << t) | cs.best_row[static_cast<size_t>(t)];
  return packed;
}

inline uint64_t canonical_form(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : edges) {
    adj[static_cast<size_t>(u)] |= uint64_t{1} << v;
    adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
  }
  return canonical_form(n, adj);
}

/// Edge list of the canonical representative encoded by canonical_form.
inline std::vector<std::pair<int, int>> edges_of_canonical(int n,
                                                           uint64_t packed) {
  std::vector<std::pair<int, int>> edges;
  int total_bits = n * (n - 1) / 2;
  int p = 0;
  for (int t = 1; t < n; ++t)
    for (int s = 0; s < t; ++s, ++p)
      if ((packed >> (total_bits - 1 - p)) & 1) edges.emplace_back(s, t);
  return edges;
}

namespace detail {

inline std::string ahu_code(const BaseGraph& tree, int v, int parent) {
  std::vector<std::string> child_codes;
  for (auto [a, b] : tree.edges) {
    int other = -1;
    if (a == v)
      other = b;
    else if (b == v)
      other = a;
    if (other >= 0 && other != parent)
      child_codes.push_back(ahu_code(tree, other, v));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const std::string& c : child_codes) code += c;
  code += ")";
  return code;
}

inline std::vector<int> tree_centroids(const BaseGraph& tree) {
  int n = tree.k;
  if (n == 1) return {0};
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [u, v] : tree.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<int> size(static_cast<size_t>(n), 1), max_part(static_cast<size_t>(n), 0);
  // iterative post-order from vertex 0
  std::vector<std::pair<int, int>> order;
  std::vector<std::pair<int, int>> stack{{0, -1}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    order.emplace_back(v, p);
    for (int w : adj[static_cast<size_t>(v)])
      if (w != p) stack.emplace_back(w, v);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, p] = *it;
    for (int w : adj[static_cast<size_t>(v)])
      if (w != p) {
        size[static_cast<size_t>(v)] += size[static_cast<size_t>(w)];
        max_part[static_cast<size_t>(v)] =
            std::max(max_part[static_cast<size_t>(v)], size[static_cast<size_t>(w)]);
      }
    max_part[static_cast<size_t>(v)] =
        std::max(max_part[static_cast<size_t>(v)], n - size[static_cast<size_t>(v)]);
  }
  int best = n;
  for (int v = 0; v < n; ++v) best = std::min(best, max_part[static_cast<size_t>(v)]);
  std::vector<int> cs;
  for (int v = 0; v < n; ++v)
    if (max_part[static_cast<size_t>(v)] == best) cs.push_back(v);
  return cs;
}

}  // namespace detail

/// Canonical string for a free tree (centroid-rooted AHU code).
inline std::string free_tree_code(const BaseGraph& tree) {
  auto cs = detail::tree_centroids(tree);
  if (cs.size() == 1) return "T" + detail::ahu_code(tree, cs[0], -1);
  std::string a = detail::ahu_code(tree, cs[0], cs[1]);
  std::string b = detail::ahu_code(tree, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

/// One representative per unlabeled tree on n vertices, deterministic
/// order. Enumerates all Pruefer sequences, so keep n small (<= 9).
inline std::vector<BaseGraph> unlabeled_trees(int n) {
  if (n < 1 || n > 9) throw ContractError("unlabeled_trees handles 1..9 vertices");
  std::map<std::string, BaseGraph> reps;
  if (n <= 2) {
    BaseGraph t = n == 1 ? BaseGraph::single() : BaseGraph::path(2);
    reps.emplace(free_tree_code(t), t);
  } else {
    std::vector<int> seq(static_cast<size_t>(n) - 2, 0);
    while (true) {
      BaseGraph t = tree_from_pruefer(n, seq);
      reps.emplace(free_tree_code(t), t);
      int i = static_cast<int>(seq.size()) - 1;
      while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) {
        seq[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++seq[static_cast<size_t>(i)];
    }
  }
  std::vector<BaseGraph> out;
  out.reserve(reps.size());
  for (auto& [code, tree] : reps) out.push_back(tree);
  return out;
}

/// One representative edge list per unlabeled connected bipartite graph
/// on n vertices, deterministic order. Scans edge subsets of K_{a,n-a}
/// for a <= n/2 and dedups by canonical form.
inline std::vector<std::vector<std::pair<int, int>>> connected_bipartite_graphs(
    int n) {
  if (n < 1 || n > 8)
    throw ContractError("connected_bipartite_graphs handles 1..8 vertices");
  std::map<uint64_t, std::vector<std::pair<int, int>>> reps;
  if (n == 1) reps.emplace(0, std::vector<std::pair<int, int>>{});
  for (int a = 1; a <= n / 2; ++a) {
    int b = n - a;
    int pairs = a * b;
    std::vector<std::pair<int, int>> cross;
    cross.reserve(static_cast<size_t>(pairs));
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) cross.emplace_back(i, a + j);
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
      std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
      for (int p = 0; p < pairs; ++p)
        if ((mask >> p) & 1) {
          auto [u, v] = cross[static_cast<size_t>(p)];
          adj[static_cast<size_t>(u)] |= uint64_t{1} << v;
          adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
        }
      // connectivity over the mask graph
      uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
      uint64_t comp = 1, frontier = 1;
      while (frontier) {
        uint64_t grow = 0;
        for (uint64_t f = frontier; f;) {
          int v = std::countr_zero(f);
          f &= f - 1;
          grow |= adj[static_cast<size_t>(v)];
        }
        frontier = grow & all & ~comp;
        comp |= frontier;
      }
      if (comp != all) continue;
      uint64_t canon = canonical_form(n, adj);
      if (!reps.contains(canon)) reps.emplace(canon, edges_of_canonical(n, canon));
    }
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  out.reserve(reps.size());
  for (auto& [canon, edges] : reps) out.push_back(edges);
  return out;
}

}  // namespace grab

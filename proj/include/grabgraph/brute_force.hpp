#pragma once

#include <vector>

#include "grabgraph/game.hpp"
#include "grabgraph/weighted_graph.hpp"

namespace grab {

namespace detail {

// The brute-force oracle keeps its own graph walk (adjacency lists,
// explicit stack, char marks) and pure rational arithmetic, so it shares
// no code path with the memoized solver it cross-checks.
struct BruteForce {
  const WeightedGraph& g;
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;
  std::vector<char> in_root;
  std::vector<int> comp;
  std::vector<int> stack;
  bool rooted;

  BruteForce(const WeightedGraph& graph, const GameMode& mode)
      : g(graph),
        adj(static_cast<size_t>(graph.size())),
        alive(static_cast<size_t>(graph.size()), 1),
        in_root(static_cast<size_t>(graph.size()), 0),
        comp(static_cast<size_t>(graph.size()), 0),
        rooted(mode.is_rooted()) {
    stack.reserve(static_cast<size_t>(graph.size()));
    for (auto [u, v] : graph.edges()) {
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
    if (rooted)
      for (VertexId r : mode.root()) in_root[static_cast<size_t>(r)] = 1;
  }

  // labels the component of `start` among alive vertices with `id`
  void mark_from(int start, int id) {
    stack.clear();
    stack.push_back(start);
    comp[static_cast<size_t>(start)] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(u)])
        if (alive[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] == 0) {
          comp[static_cast<size_t>(w)] = id;
          stack.push_back(w);
        }
    }
  }

  bool feasible(int v) {
    alive[static_cast<size_t>(v)] = 0;
    std::fill(comp.begin(), comp.end(), 0);
    bool ok = true;
    if (rooted) {
      int next_id = 0;
      for (size_t u = 0; u < alive.size() && ok; ++u) {
        if (!alive[u] || comp[u] != 0) continue;
        mark_from(static_cast<int>(u), ++next_id);
        bool has_root = false;
        for (size_t w = u; w < alive.size(); ++w)
          if (comp[w] == next_id && in_root[w]) has_root = true;
        ok = has_root;
      }
    } else {
      int first = -1, count = 0;
      for (size_t u = 0; u < alive.size(); ++u)
        if (alive[u]) {
          if (first < 0) first = static_cast<int>(u);
          ++count;
        }
      if (count > 0) {
        mark_from(first, 1);
        int reached = 0;
        for (size_t u = 0; u < alive.size(); ++u)
          if (alive[u] && comp[u] == 1) ++reached;
        ok = reached == count;
      }
    }
    alive[static_cast<size_t>(v)] = 1;
    return ok;
  }

  // Optimal total of the player to move over the alive vertices; plain
  // recursion, no memo table.
  Weight value() {
    bool any = false;
    Weight best;
    for (size_t v = 0; v < alive.size(); ++v) {
      if (!alive[v] || !feasible(static_cast<int>(v))) continue;
      alive[v] = 0;
      Weight rest_total;
      for (size_t u = 0; u < alive.size(); ++u)
        if (alive[u]) rest_total += g.weight(static_cast<int>(u));
      Weight cand = g.weight(static_cast<int>(v)) + (rest_total - value());
      alive[v] = 1;
      if (!any || cand > best) {
        best = cand;
        any = true;
      }
    }
    return best;  // zero when nothing is alive
  }
};

}  // namespace detail

struct BruteScores {
  Weight first;             // score of Player 1
  Weight second;            // score of Player 2
  Weight last;              // Player -1
  Weight second_from_last;  // Player -2
};

/// All four player scores from one independent brute-force recursion.
/// Guarded to |V| <= 12.
inline BruteScores brute_force_scores(const WeightedGraph& g,
                                      const GameMode& mode) {
  if (g.size() > 12)
    throw ContractError("brute force oracle is guarded to 12 vertices");
  if (mode.is_rooted() &&
      (mode.root().empty() || !mode.root().subset_of(g.vertices())))
    throw ContractError("root must be a nonempty subset of the vertices");
  detail::BruteForce bf(g, mode);
  BruteScores s;
  s.first = bf.value();
  s.second = g.total_weight() - s.first;
  bool odd = g.size() % 2 == 1;
  s.last = odd ? s.first : s.second;
  s.second_from_last = odd ? s.second : s.first;
  return s;
}

/// Independent oracle for Solver::score: identical contract, separately
/// written feasibility checks, no memoization.
inline Weight brute_force_score(const WeightedGraph& g, const GameMode& mode,
                                PlayerRef k) {
  BruteScores s = brute_force_scores(g, mode);
  switch (k.k) {
    case 1:
      return s.first;
    case 2:
      return s.second;
    case -1:
      return s.last;
    default:
      return s.second_from_last;
  }
}

}  // namespace grab

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "grabgraph/errors.hpp"

namespace grab {

/// Small unweighted connected graph on [0, k); the pattern a blow-up
/// expands and the shape of attached trees. Trees and cycles in practice.
struct BaseGraph {
  int k = 0;
  std::vector<std::pair<int, int>> edges;

  BaseGraph() = default;
  BaseGraph(int kk, std::vector<std::pair<int, int>> es)
      : k(kk), edges(std::move(es)) {
    if (k < 1) throw ContractError("base graph needs at least one vertex");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= k || v < 0 || v >= k || u == v)
        throw ContractError("bad base graph edge");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (!connected()) throw ContractError("base graph must be connected");
  }

  static BaseGraph single() { return BaseGraph(1, {}); }
  static BaseGraph path(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return BaseGraph(k, std::move(es));
  }
  static BaseGraph cycle(int k) {
    if (k < 3) throw ContractError("a cycle base needs at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, k - 1);
    return BaseGraph(k, std::move(es));
  }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<size_t>(k), 0);
    for (auto [u, v] : edges) {
      ++deg[static_cast<size_t>(u)];
      ++deg[static_cast<size_t>(v)];
    }
    return deg;
  }

  bool is_tree() const {
    return edges.size() == static_cast<size_t>(k) - 1;  // connected already
  }
  bool is_cycle() const {
    if (k < 3 || edges.size() != static_cast<size_t>(k)) return false;
    for (int d : degrees())
      if (d != 2) return false;
    return true;
  }

  friend bool operator==(const BaseGraph& a, const BaseGraph& b) {
    return a.k == b.k && a.edges == b.edges;
  }

 private:
  bool connected() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(k));
    for (auto [u, v] : edges) {
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(u)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == k;
  }
};

/// Labeled tree on [0, n) from a Pruefer sequence (values in [0, n),
/// length n-2). Every labeled tree corresponds to exactly one sequence.
inline BaseGraph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 1) throw ContractError("tree needs at least one vertex");
  if (n <= 2) {
    if (!seq.empty()) throw ContractError("Pruefer sequence must be empty for n <= 2");
    return n == 1 ? BaseGraph::single() : BaseGraph::path(2);
  }
  if (seq.size() != static_cast<size_t>(n) - 2)
    throw ContractError("Pruefer sequence length must be n - 2");
  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw ContractError("Pruefer value out of range");
    ++degree[static_cast<size_t>(s)];
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int s : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<size_t>(leaf)] == 1 && !used[static_cast<size_t>(leaf)]) {
        edges.emplace_back(leaf, s);
        used[static_cast<size_t>(leaf)] = 1;
        --degree[static_cast<size_t>(s)];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] == 1) {
      if (a < 0)
        a = v;
      else
        b = v;
    }
  edges.emplace_back(a, b);
  return BaseGraph(n, std::move(edges));
}

}  // namespace grab

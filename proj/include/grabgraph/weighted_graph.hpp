#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "grabgraph/errors.hpp"
#include "grabgraph/vertex_set.hpp"
#include "grabgraph/weight.hpp"

namespace grab {

/// Connected weighted graph on vertices [0, n), immutable after
/// construction and safe to share read-only. Adjacency is stored as one
/// neighbor mask per vertex.
class WeightedGraph {
 public:
  WeightedGraph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                std::vector<Weight> weights)
      : n_(n), adj_(static_cast<size_t>(n), 0), weights_(std::move(weights)) {
    if (n < 1) throw ContractError("graph needs at least one vertex");
    if (n > kMaxVertices)
      throw CapacityError("vertex capacity is 64; instance too large");
    if (weights_.size() != static_cast<size_t>(n))
      throw ContractError("weight list length must equal vertex count");
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ContractError("edge endpoint out of range");
      if (u == v) throw ContractError("self-loops are not allowed");
      adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
      adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }
    // Game rules assume a connected board.
    uint64_t all = VertexSet::first_n(n).bits();
    uint64_t comp = 1, frontier = 1;
    while (frontier) {
      uint64_t grow = 0;
      for (uint64_t f = frontier; f;) {
        int v = std::countr_zero(f);
        f &= f - 1;
        grow |= adj_[static_cast<size_t>(v)];
      }
      frontier = grow & all & ~comp;
      comp |= frontier;
    }
    if (comp != all) throw ContractError("graph must be connected");
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  VertexSet neighbors(VertexId v) const {
    bounds(v);
    return VertexSet::of_bits(adj_[static_cast<size_t>(v)]);
  }
  bool adjacent(VertexId u, VertexId v) const {
    bounds(u);
    bounds(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1;
  }

  const Weight& weight(VertexId v) const {
    bounds(v);
    return weights_[static_cast<size_t>(v)];
  }
  const std::vector<Weight>& weights() const { return weights_; }

  Weight total_weight() const { return total_weight(vertices()); }
  Weight total_weight(VertexSet s) const {
    Weight sum;
    for (VertexId v : s) sum += weight(v);
    return sum;
  }

  /// Sorted edge list with u < v.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (int u = 0; u < n_; ++u)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  int n_;
  std::vector<uint64_t> adj_;
  std::vector<Weight> weights_;

  void bounds(VertexId v) const {
    if (v < 0 || v >= n_) throw ContractError("vertex id out of range");
  }
};

inline WeightedGraph make_path(std::vector<Weight> weights) {
  int n = static_cast<int>(weights.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return WeightedGraph(n, edges, std::move(weights));
}

inline WeightedGraph make_cycle(std::vector<Weight> weights) {
  int n = static_cast<int>(weights.size());
  if (n < 3) throw ContractError("a cycle needs at least three vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return WeightedGraph(n, edges, std::move(weights));
}

/// Relabels vertices: old id v becomes perm[v]. perm must be a bijection
/// on [0, n).
inline WeightedGraph permuted(const WeightedGraph& g, std::span<const int> perm) {
  int n = g.size();
  if (static_cast<int>(perm.size()) != n)
    throw ContractError("permutation length must equal vertex count");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
      throw ContractError("not a permutation");
    seen[static_cast<size_t>(p)] = 1;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  std::vector<Weight> w(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) w[static_cast<size_t>(perm[static_cast<size_t>(v)])] = g.weight(v);
  return WeightedGraph(n, edges, std::move(w));
}

}  // namespace grab

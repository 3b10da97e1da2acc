#pragma once

#include <vector>

#include "grabgraph/weighted_graph.hpp"

namespace grab {

namespace detail {

/// Connected component of `start` within `within`, as a bit mask.
inline uint64_t flood(const WeightedGraph& g, uint64_t within, int start) {
  uint64_t comp = uint64_t{1} << start;
  uint64_t frontier = comp;
  while (frontier) {
    uint64_t grow = 0;
    for (uint64_t f = frontier; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      grow |= g.neighbors(v).bits();
    }
    frontier = grow & within & ~comp;
    comp |= frontier;
  }
  return comp;
}

inline bool connected_mask(const WeightedGraph& g, uint64_t mask) {
  if (mask == 0) return true;
  return flood(g, mask, std::countr_zero(mask)) == mask;
}

/// True iff every component of `mask` contains a bit of `root`.
inline bool components_rooted(const WeightedGraph& g, uint64_t mask,
                              uint64_t root) {
  uint64_t left = mask;
  while (left) {
    uint64_t comp = flood(g, mask, std::countr_zero(left));
    if ((comp & root) == 0) return false;
    left &= ~comp;
  }
  return true;
}

inline uint64_t feasible_normal_mask(const WeightedGraph& g, uint64_t rem) {
  uint64_t out = 0;
  for (uint64_t f = rem; f;) {
    int v = std::countr_zero(f);
    f &= f - 1;
    if (connected_mask(g, rem & ~(uint64_t{1} << v))) out |= uint64_t{1} << v;
  }
  return out;
}

inline uint64_t feasible_rooted_mask(const WeightedGraph& g, uint64_t rem,
                                     uint64_t root) {
  uint64_t out = 0;
  for (uint64_t f = rem; f;) {
    int v = std::countr_zero(f);
    f &= f - 1;
    uint64_t bit = uint64_t{1} << v;
    if (components_rooted(g, rem & ~bit, root & ~bit)) out |= bit;
  }
  return out;
}

}  // namespace detail

/// Connected components of the subgraph induced by `remaining`, ordered
/// by smallest contained vertex id. Empty input gives an empty list.
inline std::vector<VertexSet> components(const WeightedGraph& g,
                                         VertexSet remaining) {
  if (!remaining.subset_of(g.vertices()))
    throw ContractError("remaining set has vertices outside the graph");
  std::vector<VertexSet> out;
  uint64_t left = remaining.bits();
  while (left) {
    uint64_t comp = detail::flood(g, remaining.bits(), std::countr_zero(left));
    out.push_back(VertexSet::of_bits(comp));
    left &= ~comp;
  }
  return out;
}

/// N_g(s): all vertices with a neighbor in s. May intersect s.
inline VertexSet neighborhood(const WeightedGraph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw ContractError("set has vertices outside the graph");
  uint64_t out = 0;
  for (VertexId v : s) out |= g.neighbors(v).bits();
  return VertexSet::of_bits(out);
}

inline bool is_connected(const WeightedGraph& g, VertexSet remaining) {
  if (!remaining.subset_of(g.vertices()))
    throw ContractError("remaining set has vertices outside the graph");
  return detail::connected_mask(g, remaining.bits());
}

/// Moves that keep the remainder connected: every v in `remaining` whose
/// removal leaves a connected (possibly empty) induced subgraph.
/// `remaining` must induce a connected nonempty subgraph.
inline VertexSet feasible_moves_normal(const WeightedGraph& g,
                                       VertexSet remaining) {
  if (remaining.empty())
    throw ContractError("no feasible moves in an empty remainder");
  if (!is_connected(g, remaining))
    throw ContractError("normal game state must be connected");
  return VertexSet::of_bits(detail::feasible_normal_mask(g, remaining.bits()));
}

/// Rooted-game moves: every v in `remaining` such that each component of
/// remaining - v contains a vertex of s - v. Requires the root-set
/// invariant on input: s meets every component of `remaining`.
inline VertexSet feasible_moves_rooted(const WeightedGraph& g,
                                       VertexSet remaining, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw ContractError("root set has vertices outside the graph");
  if (!remaining.subset_of(g.vertices()))
    throw ContractError("remaining set has vertices outside the graph");
  if (!detail::components_rooted(g, remaining.bits(), s.bits()))
    throw ContractError("root-set invariant violated: a component has no root");
  return VertexSet::of_bits(
      detail::feasible_rooted_mask(g, remaining.bits(), s.bits()));
}

}  // namespace grab

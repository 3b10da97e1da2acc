#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grabgraph/base_graph.hpp"
#include "grabgraph/connectivity.hpp"
#include "grabgraph/weighted_graph.hpp"

namespace grab {

/// A blow-up core plus its class structure: classes[i] expands base
/// vertex i, vertices outside every class belong to attached trees.
/// Within the core, x in classes[i] and y in classes[j] are adjacent iff
/// i and j are adjacent in the base; classes are independent sets.
struct PartitionedGraph {
  WeightedGraph graph;
  std::vector<VertexSet> classes;
  BaseGraph base;

  VertexSet core() const {
    VertexSet c;
    for (const VertexSet& cl : classes) c = c | cl;
    return c;
  }
};

/// Blow-up of `base` with the given class sizes; weights start at zero.
/// Class i occupies a contiguous id range, in base-vertex order.
inline PartitionedGraph build_blowup(const BaseGraph& base,
                                     const std::vector<int>& sizes) {
  if (sizes.size() != static_cast<size_t>(base.k))
    throw ContractError("need one class size per base vertex");
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw ContractError("blow-up classes must be non-empty");
    n += s;
  }
  std::vector<VertexSet> classes;
  classes.reserve(sizes.size());
  int next = 0;
  for (int s : sizes) {
    VertexSet cl;
    for (int i = 0; i < s; ++i) cl = cl.with(next++);
    classes.push_back(cl);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [i, j] : base.edges)
    for (VertexId x : classes[static_cast<size_t>(i)])
      for (VertexId y : classes[static_cast<size_t>(j)]) edges.emplace_back(x, y);
  WeightedGraph g(n, edges, std::vector<Weight>(static_cast<size_t>(n)));
  return PartitionedGraph{std::move(g), std::move(classes), base};
}

/// One private tree to glue onto the core: `shape` with vertex `root`
/// identified with core vertex `attach_at`.
struct AttachedTree {
  BaseGraph shape;
  int root = 0;
  VertexId attach_at = 0;
};

/// Glues each tree to the core by identifying its root with the chosen
/// core vertex. At most one tree per core vertex; a single-vertex tree
/// is the identity attachment.
inline PartitionedGraph attach_trees(const PartitionedGraph& core,
                                     const std::vector<AttachedTree>& trees) {
  int core_n = core.graph.size();
  std::vector<char> taken(static_cast<size_t>(core_n), 0);
  int n = core_n;
  for (const AttachedTree& t : trees) {
    if (t.attach_at < 0 || t.attach_at >= core_n)
      throw ContractError("attach vertex outside the core");
    if (taken[static_cast<size_t>(t.attach_at)])
      throw ContractError("at most one tree per core vertex");
    taken[static_cast<size_t>(t.attach_at)] = 1;
    if (!t.shape.is_tree()) throw ContractError("attachment must be a tree");
    if (t.root < 0 || t.root >= t.shape.k)
      throw ContractError("attachment root outside the tree");
    n += t.shape.k - 1;
  }
  std::vector<std::pair<VertexId, VertexId>> edges = core.graph.edges();
  int next = core_n;
  for (const AttachedTree& t : trees) {
    // tree vertex -> id in the combined graph; root maps to the core vertex
    std::vector<int> id(static_cast<size_t>(t.shape.k));
    for (int v = 0; v < t.shape.k; ++v)
      id[static_cast<size_t>(v)] = (v == t.root) ? t.attach_at : next++;
    for (auto [u, v] : t.shape.edges)
      edges.emplace_back(id[static_cast<size_t>(u)], id[static_cast<size_t>(v)]);
  }
  std::vector<Weight> w(static_cast<size_t>(n));
  for (int v = 0; v < core_n; ++v) w[static_cast<size_t>(v)] = core.graph.weight(v);
  WeightedGraph g(n, edges, std::move(w));
  return PartitionedGraph{std::move(g), core.classes, core.base};
}

/// Same structure, new weights.
inline PartitionedGraph reweighted(const PartitionedGraph& pg,
                                   std::vector<Weight> weights) {
  WeightedGraph g(pg.graph.size(), pg.graph.edges(), std::move(weights));
  return PartitionedGraph{std::move(g), pg.classes, pg.base};
}

/// N_H(V_i) for the blow-up structure: the union of classes adjacent to
/// class i in the base.
inline VertexSet class_neighborhood(const PartitionedGraph& pg, int i) {
  if (i < 0 || i >= static_cast<int>(pg.classes.size()))
    throw ContractError("class index out of range");
  VertexSet out;
  for (int j = 0; j < static_cast<int>(pg.classes.size()); ++j)
    if (pg.base.adjacent(i, j)) out = out | pg.classes[static_cast<size_t>(j)];
  return out;
}

/// Contracts each class to a point and returns the quotient; inverse of
/// build_blowup on the core.
inline BaseGraph quotient_base(const PartitionedGraph& pg) {
  int k = static_cast<int>(pg.classes.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool any = false;
      for (VertexId x : pg.classes[static_cast<size_t>(i)]) {
        if ((pg.graph.neighbors(x) & pg.classes[static_cast<size_t>(j)]).count() > 0) {
          any = true;
          break;
        }
      }
      if (any) edges.emplace_back(i, j);
    }
  return BaseGraph(k, std::move(edges));
}

/// Full structural audit of the blow-up invariants; throws on violation.
inline void check_blowup_invariants(const PartitionedGraph& pg) {
  VertexSet seen;
  for (const VertexSet& cl : pg.classes) {
    if (cl.empty()) throw ContractError("empty blow-up class");
    if (cl.intersects(seen)) throw ContractError("blow-up classes overlap");
    seen = seen | cl;
  }
  if (static_cast<int>(pg.classes.size()) != pg.base.k)
    throw ContractError("class count must match the base");
  int k = pg.base.k;
  for (int i = 0; i < k; ++i) {
    const VertexSet& vi = pg.classes[static_cast<size_t>(i)];
    for (VertexId x : vi)
      if (pg.graph.neighbors(x).intersects(vi))
        throw ContractError("edge inside a blow-up class");
    for (int j = i + 1; j < k; ++j) {
      const VertexSet& vj = pg.classes[static_cast<size_t>(j)];
      bool want = pg.base.adjacent(i, j);
      for (VertexId x : vi)
        if (((pg.graph.neighbors(x) & vj) == vj) != want ||
            (!want && pg.graph.neighbors(x).intersects(vj)))
          throw ContractError("core adjacency does not match the base");
    }
  }
  // Attached vertices must reach the core through one identification
  // vertex: dropping the core leaves each attachment a component whose
  // neighborhood meets the core in exactly one vertex.
  VertexSet outside = pg.graph.vertices() - pg.core();
  for (const VertexSet& comp : components(pg.graph, outside)) {
    VertexSet anchors = neighborhood(pg.graph, comp) & pg.core();
    if (anchors.count() != 1)
      throw ContractError("attached tree must meet the core in one vertex");
    VertexSet with_anchor = comp | anchors;
    int edge_count = 0;
    for (VertexId v : with_anchor)
      edge_count += (pg.graph.neighbors(v) & with_anchor).count();
    if (edge_count / 2 != with_anchor.count() - 1)
      throw ContractError("attachment is not a tree");
  }
}

/// Proper 2-coloring when one exists.
inline std::optional<std::vector<int>> bipartition(const WeightedGraph& g) {
  std::vector<int> color(static_cast<size_t>(g.size()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.size(); ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (VertexId v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] < 0) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          stack.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

enum class BlowupShape { path, cycle, neither };

namespace detail {

/// Flood fill over surviving class indices under the base adjacency.
inline bool connected_quotient(const PartitionedGraph& pg,
                               const std::vector<int>& survivors) {
  int m = static_cast<int>(survivors.size());
  std::vector<char> seen(static_cast<size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < m; ++b)
      if (!seen[static_cast<size_t>(b)] &&
          pg.base.adjacent(survivors[static_cast<size_t>(a)],
                           survivors[static_cast<size_t>(b)])) {
        seen[static_cast<size_t>(b)] = 1;
        ++reached;
        stack.push_back(b);
      }
  }
  return reached == m;
}

}  // namespace detail

/// Classifies the subgraph induced by `rem` against the original class
/// structure: is it a blow-up of a path or of a cycle of the surviving
/// classes? Vertices outside all classes make the shape `neither`.
inline BlowupShape classify_blowup_remainder(const PartitionedGraph& pg,
                                             VertexSet rem) {
  if (!(rem - pg.core()).empty()) return BlowupShape::neither;
  std::vector<int> survivors;
  for (int i = 0; i < static_cast<int>(pg.classes.size()); ++i)
    if (pg.classes[static_cast<size_t>(i)].intersects(rem)) survivors.push_back(i);
  int m = static_cast<int>(survivors.size());
  if (m == 0) return BlowupShape::neither;
  if (m == 1)
    return (pg.classes[static_cast<size_t>(survivors[0])] & rem).count() == 1
               ? BlowupShape::path
               : BlowupShape::neither;
  // Quotient of the surviving classes under the base adjacency.
  std::vector<int> deg(static_cast<size_t>(m), 0);
  int edge_count = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (pg.base.adjacent(survivors[static_cast<size_t>(a)],
                           survivors[static_cast<size_t>(b)])) {
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
        ++edge_count;
      }
  int deg1 = 0;
  for (int d : deg) {
    if (d > 2) return BlowupShape::neither;
    if (d <= 1) ++deg1;
  }
  if (!detail::connected_quotient(pg, survivors)) return BlowupShape::neither;
  if (edge_count == m - 1 && deg1 == 2) return BlowupShape::path;
  if (edge_count == m && deg1 == 0) return BlowupShape::cycle;
  return BlowupShape::neither;
}

}  // namespace grab

#pragma once

#include <string>
#include <vector>

#include "grabgraph/partitioned_graph.hpp"
#include "grabgraph/rng.hpp"

namespace grab {

enum class Parity { any, even, odd };

/// Bounds for the random instance generators. Every generator is a pure
/// function of (seed, config): same inputs, same instance.
struct GeneratorConfig {
  uint64_t seed = 1;

  int base_min = 1, base_max = 4;      // base tree size / cycle length
  int class_min = 1, class_max = 3;    // blow-up class sizes
  int attach_min = 0, attach_max = 3;  // extra vertices per attached tree

  long long weight_min = 0, weight_max = 100;
  int zero_percent = 20;  // chance a weight is forced to zero

  int min_n = 2, max_n = 14;  // total vertex count bounds
  Parity parity = Parity::any;

  int extra_edge_percent = 30;  // density beyond a spanning tree
};

namespace detail {

inline bool parity_ok(int n, Parity p) {
  return p == Parity::any || (p == Parity::even) == (n % 2 == 0);
}

inline std::vector<Weight> random_weights(Rng& rng, int n,
                                          const GeneratorConfig& cfg) {
  std::vector<Weight> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (cfg.zero_percent > 0 && rng.percent(cfg.zero_percent))
      w.emplace_back(0);
    else
      w.emplace_back(rng.uniform(cfg.weight_min, cfg.weight_max));
  }
  return w;
}

inline constexpr int kRetryLimit = 20000;

[[noreturn]] inline void unsatisfiable(const std::string& what) {
  throw ContractError("generator bounds unsatisfiable: " + what);
}

}  // namespace detail

/// Uniform random labeled tree on k vertices via a random Pruefer
/// sequence.
inline BaseGraph random_tree(Rng& rng, int k) {
  if (k <= 2) return k == 1 ? BaseGraph::single() : BaseGraph::path(2);
  std::vector<int> seq(static_cast<size_t>(k) - 2);
  for (int& s : seq) s = rng.uniform_int(0, k - 1);
  return tree_from_pruefer(k, seq);
}

/// Random blow-up of a random tree, optionally with random attached
/// trees and random integer weights: the general tree-core instance.
/// Total size and parity honor the config bounds (retry loop; throws
/// when the bounds cannot be met).
inline PartitionedGraph random_bt_tree(const GeneratorConfig& cfg,
                                       bool with_attachments = true) {
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < detail::kRetryLimit; ++attempt) {
    int k = rng.uniform_int(cfg.base_min, cfg.base_max);
    if (k < 1) detail::unsatisfiable("base size");
    BaseGraph base = random_tree(rng, k);
    std::vector<int> sizes(static_cast<size_t>(k));
    int total = 0;
    for (int& s : sizes) {
      // a single-class blow-up is connected only when the class is trivial
      s = (k == 1) ? 1 : rng.uniform_int(cfg.class_min, cfg.class_max);
      total += s;
    }
    int core_n = total;
    std::vector<AttachedTree> attachments;
    if (with_attachments) {
      for (int v = 0; v < core_n; ++v) {
        int extra = rng.uniform_int(cfg.attach_min, cfg.attach_max);
        if (extra <= 0) continue;
        attachments.push_back({random_tree(rng, extra + 1),
                               rng.uniform_int(0, extra), v});
        total += extra;
      }
    }
    if (total > cfg.max_n || total < cfg.min_n ||
        !detail::parity_ok(total, cfg.parity))
      continue;
    PartitionedGraph pg = build_blowup(base, sizes);
    if (!attachments.empty()) pg = attach_trees(pg, attachments);
    return reweighted(pg, detail::random_weights(rng, pg.graph.size(), cfg));
  }
  detail::unsatisfiable("no instance within size/parity bounds");
}

/// Random K_{m,n}-tree: complete bipartite core K_{m,n} plus random
/// attached trees.
inline PartitionedGraph random_kmn_tree(const GeneratorConfig& cfg, int m,
                                        int n, bool with_attachments = true) {
  if (m < 1 || n < 1) throw ContractError("K_{m,n} needs m, n >= 1");
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < detail::kRetryLimit; ++attempt) {
    int total = m + n;
    std::vector<AttachedTree> attachments;
    if (with_attachments) {
      for (int v = 0; v < m + n; ++v) {
        int extra = rng.uniform_int(cfg.attach_min, cfg.attach_max);
        if (extra <= 0) continue;
        attachments.push_back({random_tree(rng, extra + 1),
                               rng.uniform_int(0, extra), v});
        total += extra;
      }
    }
    if (total > cfg.max_n || total < cfg.min_n ||
        !detail::parity_ok(total, cfg.parity))
      continue;
    PartitionedGraph pg = build_blowup(BaseGraph::path(2), {m, n});
    if (!attachments.empty()) pg = attach_trees(pg, attachments);
    return reweighted(pg, detail::random_weights(rng, pg.graph.size(), cfg));
  }
  detail::unsatisfiable("no K_{m,n}-tree within size/parity bounds");
}

/// Random blow-up of a cycle (no attachments).
inline PartitionedGraph random_blowup_cycle(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < detail::kRetryLimit; ++attempt) {
    int k = rng.uniform_int(cfg.base_min < 3 ? 3 : cfg.base_min, cfg.base_max);
    if (k < 3) detail::unsatisfiable("cycle base needs k >= 3");
    std::vector<int> sizes(static_cast<size_t>(k));
    int total = 0;
    for (int& s : sizes) {
      s = rng.uniform_int(cfg.class_min, cfg.class_max);
      total += s;
    }
    if (total > cfg.max_n || total < cfg.min_n ||
        !detail::parity_ok(total, cfg.parity))
      continue;
    PartitionedGraph pg = build_blowup(BaseGraph::cycle(k), sizes);
    return reweighted(pg, detail::random_weights(rng, pg.graph.size(), cfg));
  }
  detail::unsatisfiable("no cycle blow-up within size/parity bounds");
}

/// Random connected bipartite graph with an even number of vertices:
/// a spanning tree built across the bipartition plus random extra cross
/// edges.
inline WeightedGraph random_even_bipartite(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  int lo = cfg.min_n < 2 ? 2 : cfg.min_n;
  int hi = cfg.max_n;
  if (lo > hi) detail::unsatisfiable("bipartite size bounds");
  int n = rng.uniform_int(lo, hi);
  if (n % 2 == 1) n = (n > lo) ? n - 1 : n + 1;
  if (n < 2 || n > hi) detail::unsatisfiable("no even size in bounds");
  int left = rng.uniform_int(1, n - 1);
  std::vector<int> side(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) side[static_cast<size_t>(v)] = v < left ? 0 : 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  // spanning tree: each new vertex hooks onto an earlier opposite-side one
  std::vector<int> placed{0};
  std::vector<int> order;
  for (int v = 1; v < n; ++v) order.push_back(v);
  // ensure vertex `left` (first right-side vertex) comes first so both
  // sides are represented early
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == left) {
      std::swap(order[0], order[i]);
      break;
    }
  for (int v : order) {
    std::vector<int> candidates;
    for (int u : placed)
      if (side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)])
        candidates.push_back(u);
    if (candidates.empty()) detail::unsatisfiable("bipartition degenerate");
    int u = candidates[static_cast<size_t>(
        rng.uniform_int(0, static_cast<int>(candidates.size()) - 1))];
    edges.emplace_back(u, v);
    placed.push_back(v);
  }
  for (int u = 0; u < left; ++u)
    for (int v = left; v < n; ++v) {
      bool present = false;
      for (auto [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) {
          present = true;
          break;
        }
      if (!present && rng.percent(cfg.extra_edge_percent))
        edges.emplace_back(u, v);
    }
  return WeightedGraph(n, edges, detail::random_weights(rng, n, cfg));
}

/// Random connected graph: random tree plus random extra edges.
inline WeightedGraph random_connected_graph(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  int lo = cfg.min_n < 1 ? 1 : cfg.min_n;
  if (lo > cfg.max_n) detail::unsatisfiable("size bounds");
  int n = rng.uniform_int(lo, cfg.max_n);
  if (!detail::parity_ok(n, cfg.parity)) {
    if (n > lo)
      --n;
    else if (n + 1 <= cfg.max_n)
      ++n;
    else
      detail::unsatisfiable("no size of requested parity in bounds");
  }
  BaseGraph tree = random_tree(rng, n);
  std::vector<std::pair<VertexId, VertexId>> edges(tree.edges.begin(),
                                                   tree.edges.end());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && rng.percent(cfg.extra_edge_percent))
        edges.emplace_back(u, v);
  return WeightedGraph(n, edges, detail::random_weights(rng, n, cfg));
}

/// Random weighted path.
inline WeightedGraph random_path(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  int lo = cfg.min_n < 1 ? 1 : cfg.min_n;
  if (lo > cfg.max_n) detail::unsatisfiable("size bounds");
  int n = rng.uniform_int(lo, cfg.max_n);
  if (!detail::parity_ok(n, cfg.parity)) {
    if (n > lo)
      --n;
    else if (n + 1 <= cfg.max_n)
      ++n;
    else
      detail::unsatisfiable("no size of requested parity in bounds");
  }
  return make_path(detail::random_weights(rng, n, cfg));
}

/// Random connected graph with random extra edges, as a G-tree: the base
/// becomes singleton classes with random attached trees.
inline PartitionedGraph random_g_tree(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < detail::kRetryLimit; ++attempt) {
    int k = rng.uniform_int(cfg.base_min, cfg.base_max);
    BaseGraph tree = random_tree(rng, k);
    std::vector<std::pair<int, int>> base_edges = tree.edges;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v)
        if (!tree.adjacent(u, v) && rng.percent(cfg.extra_edge_percent))
          base_edges.emplace_back(u, v);
    BaseGraph base(k, base_edges);
    int total = k;
    std::vector<AttachedTree> attachments;
    for (int v = 0; v < k; ++v) {
      int extra = rng.uniform_int(cfg.attach_min, cfg.attach_max);
      if (extra <= 0) continue;
      attachments.push_back(
          {random_tree(rng, extra + 1), rng.uniform_int(0, extra), v});
      total += extra;
    }
    if (total > cfg.max_n || total < cfg.min_n ||
        !detail::parity_ok(total, cfg.parity))
      continue;
    PartitionedGraph pg = build_blowup(base, std::vector<int>(static_cast<size_t>(k), 1));
    if (!attachments.empty()) pg = attach_trees(pg, attachments);
    return reweighted(pg, detail::random_weights(rng, pg.graph.size(), cfg));
  }
  detail::unsatisfiable("no G-tree within size/parity bounds");
}

}  // namespace grab

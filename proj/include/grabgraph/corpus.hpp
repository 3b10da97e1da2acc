#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grabgraph/parallel.hpp"
#include "grabgraph/verify.hpp"

namespace grab {

/// Knobs for a claim run; -1 keeps the claim's default desk corpus.
struct RunOptions {
  uint64_t seed = 1;
  int count = -1;
  int max_n = -1;
  int jobs = 1;
};

inline const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> ids = {
      "OBS-2.1",   "OBS-2.2",   "OBS-2.3",   "LEM-2.4",   "LEM-3.1",
      "LEM-3.1a",  "LEM-3.1b",  "LEM-3.1c",  "LEM-3.2",   "LEM-3.2.1",
      "LEM-3.2.2", "LEM-3.2.3", "LEM-3.3",   "LEM-3.3.1", "LEM-3.3.2",
      "LEM-3.3.3", "THM-1.2",   "COR-1.3",   "CONJ-1.1"};
  return ids;
}

inline const std::vector<std::string>& claim_groups() {
  static const std::vector<std::string> groups = {
      "OBS-2.1", "OBS-2.2", "OBS-2.3", "LEM-2.4", "LEM-3.1",
      "LEM-3.2", "LEM-3.3", "THM-1.2", "COR-1.3", "CONJ-1.1"};
  return groups;
}

namespace corpus {

inline void append(std::vector<ClaimReport>& out,
                   std::vector<std::vector<ClaimReport>>& slots) {
  for (auto& slot : slots)
    for (auto& r : slot) out.push_back(std::move(r));
}

/// Observation corpus: every unlabeled tree up to 8 vertices with three
/// random weightings, plus random connected graphs. Roots tried per
/// instance: every singleton, the full set, and two random subsets.
inline std::vector<ClaimReport> run_observations(const RunOptions& opt) {
  int max_n = opt.max_n > 0 ? opt.max_n : 8;
  int random_count = opt.count >= 0 ? opt.count : 500;
  struct Item {
    WeightedGraph g;
    std::string label;
  };
  std::vector<Item> items;
  int tree_cap = std::min(max_n, 8);
  for (int n = 1; n <= tree_cap; ++n) {
    auto trees = unlabeled_trees(n);
    for (size_t t = 0; t < trees.size(); ++t) {
      for (int rep = 0; rep < 3; ++rep) {
        GeneratorConfig cfg;
        cfg.seed = mix_seed(opt.seed, 1000000 + static_cast<uint64_t>(n) * 10000 +
                                          t * 10 + static_cast<uint64_t>(rep));
        Rng rng(cfg.seed);
        std::vector<Weight> w = detail::random_weights(rng, n, cfg);
        std::vector<std::pair<VertexId, VertexId>> edges(trees[t].edges.begin(),
                                                         trees[t].edges.end());
        items.push_back({WeightedGraph(n, edges, std::move(w)),
                         "tree n=" + std::to_string(n) + " shape=" +
                             std::to_string(t) + " rep=" + std::to_string(rep)});
      }
    }
  }
  for (int i = 0; i < random_count; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
    cfg.min_n = 2;
    cfg.max_n = max_n;
    items.push_back({random_connected_graph(cfg),
                     "random i=" + std::to_string(i) + " seed=" +
                         std::to_string(cfg.seed)});
  }
  std::vector<std::vector<ClaimReport>> slots(items.size());
  parallel_for(static_cast<int>(items.size()), opt.jobs, [&](int i) {
    const Item& item = items[static_cast<size_t>(i)];
    const WeightedGraph& g = item.g;
    std::vector<VertexSet> roots;
    for (VertexId v : g.vertices()) roots.push_back(VertexSet::single(v));
    roots.push_back(g.vertices());
    Rng rng(mix_seed(opt.seed, 777 + static_cast<uint64_t>(i)));
    for (int r = 0; r < 2; ++r) {
      VertexSet s;
      for (VertexId v : g.vertices())
        if (rng.percent(40)) s = s.with(v);
      if (s.empty()) s = VertexSet::single(rng.uniform_int(0, g.size() - 1));
      roots.push_back(s);
    }
    slots[static_cast<size_t>(i)] = check_observations(g, roots, item.label);
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

inline std::vector<ClaimReport> run_kmn(const RunOptions& opt) {
  int count = opt.count >= 0 ? opt.count : 500;
  int max_n = opt.max_n > 0 ? opt.max_n : 12;
  std::vector<std::vector<ClaimReport>> slots(static_cast<size_t>(count));
  parallel_for(count, opt.jobs, [&](int i) {
    uint64_t seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
    Rng pick(seed);
    int m = pick.uniform_int(1, 3), n = pick.uniform_int(1, 3);
    GeneratorConfig cfg;
    cfg.seed = mix_seed(seed, 1);
    cfg.min_n = m + n;
    cfg.max_n = max_n;
    cfg.attach_max = 3;
    PartitionedGraph pg = random_kmn_tree(cfg, m, n);
    slots[static_cast<size_t>(i)] = check_lemma_kmn(
        pg, "kmn-tree i=" + std::to_string(i) + " m=" + std::to_string(m) +
                " n=" + std::to_string(n) + " seed=" + std::to_string(seed));
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

/// Random two-part instance for LEM-3.1: random connected parts, random
/// nonempty cross roots joined completely, even total.
inline std::pair<WeightedGraph, VertexSet> random_gameB_instance(
    uint64_t seed, int max_n) {
  Rng rng(seed);
  int total = rng.uniform_int(1, max_n / 2) * 2;
  int n1 = rng.uniform_int(1, total - 1);
  int n2 = total - n1;
  GeneratorConfig part_cfg;
  auto part_edges = [&](int n, uint64_t s) {
    part_cfg.seed = s;
    part_cfg.min_n = n;
    part_cfg.max_n = n;
    return random_connected_graph(part_cfg).edges();
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [u, v] : part_edges(n1, mix_seed(seed, 2))) edges.emplace_back(u, v);
  for (auto [u, v] : part_edges(n2, mix_seed(seed, 3)))
    edges.emplace_back(u + n1, v + n1);
  VertexSet u1, u2;
  for (int v = 0; v < n1; ++v)
    if (rng.percent(50)) u1 = u1.with(v);
  if (u1.empty()) u1 = VertexSet::single(rng.uniform_int(0, n1 - 1));
  for (int v = n1; v < total; ++v)
    if (rng.percent(50)) u2 = u2.with(v);
  if (u2.empty()) u2 = VertexSet::single(rng.uniform_int(n1, total - 1));
  for (VertexId a : u1)
    for (VertexId b : u2) edges.emplace_back(a, b);
  GeneratorConfig wcfg;
  Rng wrng(mix_seed(seed, 4));
  std::vector<Weight> w = detail::random_weights(wrng, total, wcfg);
  return {WeightedGraph(total, edges, std::move(w)), VertexSet::first_n(n1)};
}

inline std::vector<ClaimReport> run_gameB(const RunOptions& opt) {
  int count = opt.count >= 0 ? opt.count : 200;
  int max_n = opt.max_n > 0 ? opt.max_n : 12;
  std::vector<std::vector<ClaimReport>> slots(static_cast<size_t>(count));
  parallel_for(count, opt.jobs, [&](int i) {
    uint64_t seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
    auto [g, part1] = random_gameB_instance(seed, max_n);
    slots[static_cast<size_t>(i)] = check_lemma_gameB(
        g, part1, "two-part i=" + std::to_string(i) + " seed=" + std::to_string(seed));
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

inline std::vector<ClaimReport> run_lemma(const RunOptions& opt, bool even_variant) {
  int count = opt.count >= 0 ? opt.count : 500;
  int max_n = opt.max_n > 0 ? opt.max_n : 14;
  std::vector<std::vector<ClaimReport>> slots(static_cast<size_t>(count));
  parallel_for(count, opt.jobs, [&](int i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
    cfg.max_n = max_n;
    cfg.min_n = even_variant ? 2 : 1;
    cfg.parity = even_variant ? Parity::even : Parity::any;
    PartitionedGraph pg = random_bt_tree(cfg);
    std::string label = std::string(even_variant ? "even " : "") + "bt-tree i=" +
                        std::to_string(i) + " n=" + std::to_string(pg.graph.size()) +
                        " seed=" + std::to_string(cfg.seed);
    slots[static_cast<size_t>(i)] =
        even_variant ? check_lemma2(pg, label) : check_lemma1(pg, label);
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

inline std::vector<ClaimReport> run_theorem(const RunOptions& opt) {
  int count = opt.count >= 0 ? opt.count : 500;
  int max_n = opt.max_n > 0 ? opt.max_n : 16;
  int paths = count / 5;
  std::vector<std::vector<ClaimReport>> slots(static_cast<size_t>(count + paths));
  parallel_for(count + paths, opt.jobs, [&](int i) {
    if (i < count) {
      GeneratorConfig cfg;
      cfg.seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
      cfg.max_n = max_n;
      cfg.parity = Parity::even;
      PartitionedGraph pg = random_bt_tree(cfg);
      slots[static_cast<size_t>(i)] = check_theorem(
          pg, "even bt-tree i=" + std::to_string(i) + " n=" +
                  std::to_string(pg.graph.size()) + " seed=" + std::to_string(cfg.seed));
    } else {
      GeneratorConfig cfg;
      cfg.seed = mix_seed(opt.seed, 900000 + static_cast<uint64_t>(i));
      cfg.max_n = max_n;
      cfg.min_n = 2;
      cfg.parity = Parity::even;
      WeightedGraph path = random_path(cfg);
      std::vector<int> sizes(static_cast<size_t>(path.size()), 1);
      PartitionedGraph pg =
          reweighted(build_blowup(BaseGraph::path(path.size()), sizes),
                     path.weights());
      slots[static_cast<size_t>(i)] = check_theorem(
          pg, "even path i=" + std::to_string(i - count) + " n=" +
                  std::to_string(path.size()) + " seed=" + std::to_string(cfg.seed));
    }
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

inline std::vector<ClaimReport> run_corollary(const RunOptions& opt) {
  int count = opt.count >= 0 ? opt.count : 200;
  int max_n = opt.max_n > 0 ? opt.max_n : 14;
  int with_strategy = count / 2;
  std::vector<std::vector<ClaimReport>> slots(static_cast<size_t>(count));
  parallel_for(count, opt.jobs, [&](int i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
    cfg.min_n = 4;
    cfg.max_n = max_n;
    cfg.parity = Parity::even;
    cfg.base_max = 6;
    PartitionedGraph pg = random_blowup_cycle(cfg);
    slots[static_cast<size_t>(i)] = check_corollary(
        pg,
        "even cycle blow-up i=" + std::to_string(i) + " n=" +
            std::to_string(pg.graph.size()) + " seed=" + std::to_string(cfg.seed),
        i < with_strategy);
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

/// Conjecture search corpus: exhaustive connected bipartite even graphs
/// by canonical enumeration (all {0,1} weightings up to 6 vertices, a
/// weight sample above), plus random connected bipartite even instances.
inline std::vector<ClaimReport> run_search(const RunOptions& opt) {
  int random_count = opt.count >= 0 ? opt.count : 10000;
  int max_n = opt.max_n > 0 ? opt.max_n : 10;
  int exhaustive_cap = std::min(max_n, 8);
  int zero_one_cap = std::min(exhaustive_cap, 6);
  struct Item {
    WeightedGraph g;
    std::string label;
  };
  std::vector<Item> items;
  for (int n = 2; n <= exhaustive_cap; n += 2) {
    auto graphs = connected_bipartite_graphs(n);
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
      const auto& edges = graphs[gi];
      std::vector<std::pair<VertexId, VertexId>> es(edges.begin(), edges.end());
      if (n <= zero_one_cap) {
        for (uint64_t pattern = 0; pattern < (uint64_t{1} << n); ++pattern) {
          std::vector<Weight> w;
          w.reserve(static_cast<size_t>(n));
          for (int v = 0; v < n; ++v) w.emplace_back((pattern >> v) & 1);
          items.push_back({WeightedGraph(n, es, std::move(w)),
                           "exhaustive n=" + std::to_string(n) + " graph=" +
                               std::to_string(gi) + " pattern=" +
                               std::to_string(pattern)});
        }
      } else {
        for (int rep = 0; rep < 4; ++rep) {
          std::vector<Weight> w;
          if (rep == 0) {
            w.assign(static_cast<size_t>(n), Weight(1));
          } else {
            GeneratorConfig cfg;
            Rng rng(mix_seed(opt.seed, 5000000 + gi * 10 + static_cast<uint64_t>(rep)));
            w = detail::random_weights(rng, n, cfg);
          }
          items.push_back({WeightedGraph(n, es, std::move(w)),
                           "exhaustive n=" + std::to_string(n) + " graph=" +
                               std::to_string(gi) + " rep=" + std::to_string(rep)});
        }
      }
    }
  }
  for (int i = 0; i < random_count; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(opt.seed, static_cast<uint64_t>(i));
    cfg.min_n = 2;
    cfg.max_n = max_n;
    items.push_back({random_even_bipartite(cfg),
                     "random i=" + std::to_string(i) + " seed=" +
                         std::to_string(cfg.seed)});
  }
  std::vector<std::vector<ClaimReport>> slots(items.size());
  parallel_for(static_cast<int>(items.size()), opt.jobs, [&](int i) {
    slots[static_cast<size_t>(i)] = search_check_instance(
        items[static_cast<size_t>(i)].g, items[static_cast<size_t>(i)].label);
  });
  std::vector<ClaimReport> out;
  append(out, slots);
  return out;
}

}  // namespace corpus

/// Runs the desk corpus for one claim id (group or sub-claim) and
/// returns its reports, filtered to the requested id.
inline std::vector<ClaimReport> run_claim(const std::string& id,
                                          const RunOptions& opt) {
  bool known = false;
  for (const std::string& k : known_claims())
    if (k == id) known = true;
  if (!known) throw ContractError("unknown claim id: " + id);
  std::vector<ClaimReport> reports;
  if (id.rfind("OBS", 0) == 0)
    reports = corpus::run_observations(opt);
  else if (id == "LEM-2.4")
    reports = corpus::run_kmn(opt);
  else if (id.rfind("LEM-3.1", 0) == 0)
    reports = corpus::run_gameB(opt);
  else if (id.rfind("LEM-3.2", 0) == 0)
    reports = corpus::run_lemma(opt, false);
  else if (id.rfind("LEM-3.3", 0) == 0)
    reports = corpus::run_lemma(opt, true);
  else if (id == "THM-1.2")
    reports = corpus::run_theorem(opt);
  else if (id == "COR-1.3")
    reports = corpus::run_corollary(opt);
  else
    reports = corpus::run_search(opt);
  if (id == "OBS-2.1" || id == "OBS-2.2" || id == "OBS-2.3" ||
      (id.size() > 7 && id.rfind("LEM-3.", 0) == 0)) {
    std::vector<ClaimReport> filtered;
    for (auto& r : reports)
      if (r.claim.rfind(id, 0) == 0) filtered.push_back(std::move(r));
    return filtered;
  }
  return reports;
}

}  // namespace grab

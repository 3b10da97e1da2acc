#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grabgraph/partitioned_graph.hpp"

namespace grab {

/// Interchange record for one instance. Weights travel as exact decimal
/// or fraction strings so parsing is lossless; printing is canonical so
/// identical documents serialize byte-identically.
struct GraphDocument {
  int format = 1;
  int n = 0;
  std::vector<Weight> weights;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<std::vector<int>>> classes;
  std::optional<std::vector<std::pair<int, int>>> base_edges;
  std::optional<std::vector<int>> root;
  std::map<std::string, std::string> meta;

  friend bool operator==(const GraphDocument& a, const GraphDocument& b) {
    return a.format == b.format && a.n == b.n && a.weights == b.weights &&
           a.edges == b.edges && a.classes == b.classes &&
           a.base_edges == b.base_edges && a.root == b.root && a.meta == b.meta;
  }

  static GraphDocument from_graph(const WeightedGraph& g) {
    GraphDocument d;
    d.n = g.size();
    d.weights = g.weights();
    d.edges = g.edges();
    return d;
  }

  static GraphDocument from_partitioned(const PartitionedGraph& pg) {
    GraphDocument d = from_graph(pg.graph);
    std::vector<std::vector<int>> cls;
    cls.reserve(pg.classes.size());
    for (const VertexSet& c : pg.classes) cls.push_back(c.to_vector());
    d.classes = std::move(cls);
    d.base_edges = pg.base.edges;
    return d;
  }

  WeightedGraph to_graph() const { return WeightedGraph(n, edges, weights); }

  PartitionedGraph to_partitioned() const {
    if (!classes || !base_edges)
      throw ContractError("document has no blow-up class structure");
    std::vector<VertexSet> cls;
    for (const auto& ids : *classes) {
      VertexSet s;
      for (int v : ids) s = s.with(v);
      cls.push_back(s);
    }
    PartitionedGraph pg{to_graph(), std::move(cls),
                        BaseGraph(static_cast<int>(classes->size()), *base_edges)};
    check_blowup_invariants(pg);
    return pg;
  }

  VertexSet root_set() const {
    if (!root) throw ContractError("document has no root set");
    VertexSet s;
    for (int v : *root) {
      if (v < 0 || v >= n) throw ContractError("root vertex out of range");
      s = s.with(v);
    }
    return s;
  }

  std::string to_json() const {
    nlohmann::json j;
    j["format"] = format;
    j["n"] = n;
    std::vector<std::string> ws;
    ws.reserve(weights.size());
    for (const Weight& w : weights) ws.push_back(w.str());
    j["weights"] = ws;
    auto pairs_json = [](const std::vector<std::pair<int, int>>& ps) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto [a, b] : ps) arr.push_back({a, b});
      return arr;
    };
    j["edges"] = pairs_json(edges);
    if (classes) j["classes"] = *classes;
    if (base_edges) j["base_edges"] = pairs_json(*base_edges);
    if (root) j["root"] = *root;
    if (!meta.empty()) j["meta"] = meta;
    return j.dump();
  }

  static GraphDocument parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ContractError(std::string("bad document: ") + e.what());
    }
    try {
      GraphDocument d;
      d.format = j.at("format").get<int>();
      if (d.format != 1) throw ContractError("unsupported document format");
      d.n = j.at("n").get<int>();
      for (const auto& s : j.at("weights"))
        d.weights.push_back(Weight::parse(s.get<std::string>()));
      auto pairs_from = [](const nlohmann::json& arr) {
        std::vector<std::pair<int, int>> ps;
        for (const auto& e : arr) {
          if (!e.is_array() || e.size() != 2)
            throw ContractError("bad edge entry in document");
          ps.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return ps;
      };
      d.edges = pairs_from(j.at("edges"));
      if (j.contains("classes"))
        d.classes = j.at("classes").get<std::vector<std::vector<int>>>();
      if (j.contains("base_edges")) d.base_edges = pairs_from(j.at("base_edges"));
      if (j.contains("root")) d.root = j.at("root").get<std::vector<int>>();
      if (j.contains("meta"))
        d.meta = j.at("meta").get<std::map<std::string, std::string>>();
      if (static_cast<int>(d.weights.size()) != d.n)
        throw ContractError("weight count does not match n");
      for (auto [u, v] : d.edges)
        if (u < 0 || u >= d.n || v < 0 || v >= d.n)
          throw ContractError("edge endpoint out of range in document");
      return d;
    } catch (const nlohmann::json::exception& e) {
      throw ContractError(std::string("bad document: ") + e.what());
    }
  }
};

}  // namespace grab

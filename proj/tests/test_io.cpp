#include <catch2/catch_amalgamated.hpp>

#include "grabgraph/grabgraph.hpp"

using namespace grab;

TEST_CASE("documents round-trip losslessly and print deterministically") {
  for (int i = 0; i < 30; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(4001, static_cast<uint64_t>(i));
    cfg.max_n = 12;
    PartitionedGraph pg = random_bt_tree(cfg);
    GraphDocument d = GraphDocument::from_partitioned(pg);
    d.root = std::vector<int>{0};
    d.meta["family"] = "bt-tree";
    d.meta["seed"] = std::to_string(cfg.seed);
    std::string text = d.to_json();
    CHECK(text == d.to_json());
    GraphDocument back = GraphDocument::parse(text);
    CHECK(back == d);
    CHECK(back.to_json() == text);
    PartitionedGraph rebuilt = back.to_partitioned();
    CHECK(rebuilt.graph.edges() == pg.graph.edges());
    CHECK(rebuilt.classes == pg.classes);
  }
}

TEST_CASE("weight strings survive the document exactly") {
  GraphDocument d;
  d.n = 3;
  d.weights = {Weight::parse("3.25"), Weight::parse("7/2"), Weight::parse("1/3")};
  d.edges = {{0, 1}, {1, 2}};
  GraphDocument back = GraphDocument::parse(d.to_json());
  CHECK(back.weights[0] == Weight::fraction(13, 4));
  CHECK(back.weights[1] == Weight::fraction(7, 2));
  CHECK(back.weights[2] == Weight::fraction(1, 3));
  CHECK(back.to_graph().total_weight() == d.to_graph().total_weight());
}

TEST_CASE("malformed documents are contract errors") {
  CHECK_THROWS_AS(GraphDocument::parse("not json"), ContractError);
  CHECK_THROWS_AS(GraphDocument::parse("{}"), ContractError);
  CHECK_THROWS_AS(
      GraphDocument::parse(R"({"format":2,"n":1,"weights":["1"],"edges":[]})"),
      ContractError);
  CHECK_THROWS_AS(
      GraphDocument::parse(R"({"format":1,"n":2,"weights":["1"],"edges":[]})"),
      ContractError);
  CHECK_THROWS_AS(
      GraphDocument::parse(
          R"({"format":1,"n":2,"weights":["1","2"],"edges":[[0,5]]})"),
      ContractError);
  CHECK_THROWS_AS(
      GraphDocument::parse(
          R"({"format":1,"n":2,"weights":["1","-2"],"edges":[[0,1]]})"),
      ContractError);
}

TEST_CASE("documents without classes refuse partitioned reconstruction") {
  GraphDocument d = GraphDocument::from_graph(make_path({Weight(1), Weight(2)}));
  CHECK_THROWS_AS(d.to_partitioned(), ContractError);
  CHECK_THROWS_AS(d.root_set(), ContractError);
}

TEST_CASE("corrupt class structure is rejected on reconstruction") {
  PartitionedGraph pg = build_blowup(BaseGraph::path(2), {1, 2});
  GraphDocument d = GraphDocument::from_partitioned(pg);
  (*d.classes)[0] = {0, 1};  // overlapping classes
  CHECK_THROWS_AS(d.to_partitioned(), ContractError);
}

TEST_CASE("dot export of a two-vertex path is pinned") {
  GraphDocument d = GraphDocument::from_graph(make_path({Weight(1), Weight(2)}));
  CHECK(to_dot(d) ==
        "graph G {\n"
        "  node [shape=circle];\n"
        "  v0 [label=\"0\\nw=1\"];\n"
        "  v1 [label=\"1\\nw=2\"];\n"
        "  v0 -- v1;\n"
        "}\n");
}

TEST_CASE("dot export clusters the blow-up classes deterministically") {
  GeneratorConfig cfg;
  cfg.seed = 99;
  cfg.max_n = 10;
  PartitionedGraph pg = random_bt_tree(cfg);
  GraphDocument d = GraphDocument::from_partitioned(pg);
  std::string dot = to_dot(d);
  CHECK(dot == to_dot(d));
  size_t clusters = 0, at = 0;
  while ((at = dot.find("subgraph cluster_", at)) != std::string::npos) {
    ++clusters;
    at += 1;
  }
  CHECK(clusters == pg.classes.size());
}

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace grab;

TEST_CASE("optimal strategy opens with the argmax endpoint") {
  WeightedGraph p2 = make_path({Weight(3), Weight(5)});
  OptimalStrategy s = optimal_strategy(p2, GameMode::normal());
  CHECK(s.choose({}) == 1);
  WeightedGraph p4 = make_path(testsupport::weights_of({1, 4, 2, 3}));
  OptimalStrategy s4 = optimal_strategy(p4, GameMode::normal());
  CHECK(s4.choose({}) == 3);
  CHECK(s4.markov());
}

TEST_CASE("subgame assignment derives roots and complementary parities") {
  WeightedGraph p2 = make_path({Weight(3), Weight(5)});
  SubgameAssignment a = SubgameAssignment::make(p2, VertexSet::single(0));
  CHECK(a.root1 == VertexSet::single(0));
  CHECK(a.root2 == VertexSet::single(1));
  CHECK(a.parity1 == 0);  // second-from-last of a 1-vertex part
  CHECK(a.parity2 == 1);  // last of a 1-vertex part
  WeightedGraph p4 = make_path(std::vector<Weight>(4, Weight(1)));
  SubgameAssignment b = SubgameAssignment::make(p4, VertexSet::of({0, 1}));
  CHECK(b.root1 == VertexSet::single(1));
  CHECK(b.root2 == VertexSet::single(2));
  CHECK(((b.parity1 + b.parity2) & 1) == 0);  // sizes 2 and 2
}

TEST_CASE("subgame assignment rejects bad splits") {
  WeightedGraph p4 = make_path(std::vector<Weight>(4, Weight(1)));
  // {0,3} vs {1,2}: roots {0,3} and {1,2} are not completely joined
  CHECK_THROWS_AS(SubgameAssignment::make(p4, VertexSet::of({0, 3})),
                  ContractError);
  CHECK_THROWS_AS(SubgameAssignment::make(p4, VertexSet()), ContractError);
  CHECK_THROWS_AS(SubgameAssignment::make(p4, p4.vertices()), ContractError);
  WeightedGraph p3 = make_path(std::vector<Weight>(3, Weight(1)));
  CHECK_THROWS_AS(SubgameAssignment::make(p3, VertexSet::single(0)),
                  ContractError);  // odd total
}

TEST_CASE("composite strategy plays the worked two-vertex example") {
  WeightedGraph p2 = make_path({Weight(3), Weight(5)});
  SubgameAssignment a = SubgameAssignment::make(p2, VertexSet::single(0));
  CompositeStrategy composite(p2, a);
  CHECK(composite.choose({}) == 1);  // parity sends the opener to part 2
  GameMode mode = GameMode::rooted(a.root1);
  OptimalStrategy opponent = optimal_strategy(p2, mode);
  Transcript t = play_out(p2, mode, composite, opponent);
  CHECK(t.total_first == Weight(5));
  Weight guarantee = best_response_value(p2, mode, composite, 0);
  CHECK(guarantee == Weight(5));
}

TEST_CASE("composite guarantee clears the two-subgame bound on random instances") {
  for (int i = 0; i < 40; ++i) {
    uint64_t seed = mix_seed(2003, static_cast<uint64_t>(i));
    auto [g, part1] = corpus::random_gameB_instance(seed, 10);
    for (const ClaimReport& r :
         check_lemma_gameB(g, part1, "unit i=" + std::to_string(i))) {
      INFO(r.claim << " on " << r.instance << ": " << r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("composite bookkeeping rejects foreign histories") {
  WeightedGraph p4 = make_path(std::vector<Weight>(4, Weight(1)));
  SubgameAssignment a = SubgameAssignment::make(p4, VertexSet::of({0, 1}));
  CompositeStrategy composite(p4, a);
  // grabbing v1 strands v0 from the part-1 root {1}: feasibility transfer fails
  std::vector<VertexId> history{1};
  CHECK_THROWS_AS(composite.choose(history), InvariantBreach);
}

TEST_CASE("max-first grabs the heaviest vertex of a cycle blow-up") {
  PartitionedGraph c4 = reweighted(
      build_blowup(BaseGraph::cycle(4), {1, 1, 1, 1}),
      testsupport::weights_of({5, 1, 1, 1}));
  MaxFirstStrategy mf(c4);
  CHECK(mf.choose({}) == 0);
  CHECK(mf.markov());
}

TEST_CASE("max-first secures half on the unit four-cycle") {
  PartitionedGraph c4 = reweighted(build_blowup(BaseGraph::cycle(4), {1, 1, 1, 1}),
                                   testsupport::weights_of({1, 1, 1, 1}));
  Weight guarantee = best_response_value(c4.graph, GameMode::normal(),
                                         MaxFirstStrategy(c4), 0);
  CHECK(guarantee == Weight(2));
}

TEST_CASE("max-first rejects inputs that are not even cycle blow-ups") {
  PartitionedGraph path = build_blowup(BaseGraph::path(3), {1, 1, 2});
  CHECK_THROWS_AS(MaxFirstStrategy(path), ContractError);
  PartitionedGraph odd = build_blowup(BaseGraph::cycle(3), {1, 1, 1});
  CHECK_THROWS_AS(MaxFirstStrategy(odd), ContractError);
}

TEST_CASE("max-first guarantee beats half on random even cycle blow-ups") {
  for (int i = 0; i < 20; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(2203, static_cast<uint64_t>(i));
    cfg.min_n = 4;
    cfg.max_n = 10;
    cfg.parity = Parity::even;
    PartitionedGraph pg = random_blowup_cycle(cfg);
    Weight guarantee = best_response_value(pg.graph, GameMode::normal(),
                                           MaxFirstStrategy(pg), 0);
    INFO("seed " << cfg.seed << " n=" << pg.graph.size());
    CHECK(guarantee.doubled() >= pg.graph.total_weight());
  }
}

TEST_CASE("max-first keeps the first exchange ordered and structured") {
  for (int i = 0; i < 20; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(2309, static_cast<uint64_t>(i));
    cfg.min_n = 4;
    cfg.max_n = 12;
    cfg.parity = Parity::even;
    PartitionedGraph pg = random_blowup_cycle(cfg);
    const WeightedGraph& g = pg.graph;
    MaxFirstStrategy mf(pg);
    VertexId a = mf.choose({});
    for (VertexId v : g.vertices()) CHECK(g.weight(a) >= g.weight(v));
    VertexSet rem = g.vertices().without(a);
    for (VertexId b : feasible_moves_normal(g, rem)) {
      CHECK(g.weight(a) >= g.weight(b));
      BlowupShape shape = classify_blowup_remainder(pg, rem.without(b));
      CHECK(shape != BlowupShape::neither);
    }
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace grab;
using testsupport::path_game_value;

TEST_CASE("single vertex: the mover takes everything") {
  WeightedGraph one(1, {}, {Weight(7)});
  Solver s(one, GameMode::normal());
  CHECK(s.score(PlayerRef{1}) == Weight(7));
  CHECK(s.score(PlayerRef{2}) == Weight(0));
  CHECK(s.score(PlayerRef{-1}) == Weight(7));  // one move: last = first
  CHECK(s.optimal_moves(one.vertices()) == VertexSet::single(0));
}

TEST_CASE("two-vertex path: take the heavier endpoint") {
  WeightedGraph p2 = make_path({Weight(3), Weight(5)});
  Solver s(p2, GameMode::normal());
  CHECK(s.score(PlayerRef{1}) == Weight(5));
  CHECK(s.score(PlayerRef{2}) == Weight(3));
  CHECK(s.optimal_moves(p2.vertices()) == VertexSet::single(1));
}

TEST_CASE("interval oracle pins the P4 values") {
  auto w = testsupport::weights_of({1, 4, 2, 3});
  CHECK(path_game_value(w) == Weight(7));  // frozen from the oracle
  WeightedGraph p4 = make_path(w);
  Solver s(p4, GameMode::normal());
  CHECK(s.score(PlayerRef{1}) == Weight(7));
  CHECK(s.score(PlayerRef{2}) == Weight(3));
  CHECK(s.optimal_moves(p4.vertices()) == VertexSet::single(3));
  // the sub-interval values behind the recurrence
  CHECK(path_game_value(testsupport::weights_of({4, 2, 3})) == Weight(6));
  CHECK(path_game_value(testsupport::weights_of({1, 4, 2})) == Weight(3));
}

TEST_CASE("solver agrees with the interval oracle on random paths") {
  for (int i = 0; i < 60; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(101, static_cast<uint64_t>(i));
    cfg.min_n = 1;
    cfg.max_n = 10;
    WeightedGraph path = random_path(cfg);
    Solver s(path, GameMode::normal());
    CHECK(s.score(PlayerRef{1}) == path_game_value(path.weights()));
  }
}

TEST_CASE("zero-weighted odd path where the first player cannot win") {
  WeightedGraph p3 = make_path({Weight(0), Weight(1), Weight(0)});
  Solver s(p3, GameMode::normal());
  CHECK(s.score(PlayerRef{1}) == Weight(0));
  CHECK(s.score(PlayerRef{2}) == Weight(1));
  CHECK(s.optimal_moves(p3.vertices()) == VertexSet::of({0, 2}));
}

TEST_CASE("rooted two-vertex game: root protection forces the light vertex") {
  WeightedGraph p2 = make_path({Weight(1), Weight(2)});
  Solver s(p2, GameMode::rooted(VertexSet::single(1)));
  CHECK(s.feasible(p2.vertices()) == VertexSet::single(0));
  // two vertices: the second-from-last mover is the first player
  CHECK(s.score(PlayerRef{-2}) == Weight(1));
  CHECK(s.score(PlayerRef{-1}) == Weight(2));
}

TEST_CASE("weight conservation holds exactly") {
  for (int i = 0; i < 60; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(211, static_cast<uint64_t>(i));
    cfg.max_n = 9;
    WeightedGraph g = random_connected_graph(cfg);
    Solver s(g, GameMode::normal());
    CHECK(s.score(PlayerRef{1}) + s.score(PlayerRef{2}) == g.total_weight());
    Rng rng(mix_seed(223, static_cast<uint64_t>(i)));
    VertexSet root;
    for (VertexId v : g.vertices())
      if (rng.percent(40)) root = root.with(v);
    if (root.empty()) root = VertexSet::single(0);
    Solver r(g, GameMode::rooted(root));
    CHECK(r.score(PlayerRef{1}) + r.score(PlayerRef{2}) == g.total_weight());
  }
}

TEST_CASE("after-move relations hold for feasible and optimal moves") {
  for (int i = 0; i < 40; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(307, static_cast<uint64_t>(i));
    cfg.max_n = 7;
    WeightedGraph g = random_connected_graph(cfg);
    Solver s(g, GameMode::normal());
    VertexSet all = g.vertices();
    Weight n2 = s.score(PlayerRef{2});
    VertexSet optimal = s.optimal_moves(all);
    for (VertexId x : feasible_moves_normal(g, all)) {
      Weight after = s.value(all.without(x));
      CHECK(n2 <= after);
      if (optimal.contains(x)) CHECK(n2 == after);
    }
  }
}

TEST_CASE("scores scale with the weights and moves do not change") {
  for (int i = 0; i < 30; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(401, static_cast<uint64_t>(i));
    cfg.max_n = 8;
    WeightedGraph g = random_connected_graph(cfg);
    std::vector<Weight> scaled;
    for (const Weight& w : g.weights()) scaled.push_back(w.times(7));
    WeightedGraph g7(g.size(), g.edges(), scaled);
    Solver a(g, GameMode::normal()), b(g7, GameMode::normal());
    CHECK(b.score(PlayerRef{1}) == a.score(PlayerRef{1}).times(7));
    CHECK(b.optimal_moves(g7.vertices()) == a.optimal_moves(g.vertices()));
  }
}

TEST_CASE("constant shift adds c per claimed vertex") {
  for (int i = 0; i < 30; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(503, static_cast<uint64_t>(i));
    cfg.max_n = 8;
    WeightedGraph g = random_connected_graph(cfg);
    long long c = 5;
    std::vector<Weight> shifted;
    for (const Weight& w : g.weights()) shifted.push_back(w + Weight(c));
    WeightedGraph gs(g.size(), g.edges(), shifted);
    Solver a(g, GameMode::normal()), b(gs, GameMode::normal());
    int n = g.size();
    CHECK(b.score(PlayerRef{1}) ==
          a.score(PlayerRef{1}) + Weight(c).times((n + 1) / 2));
    CHECK(b.score(PlayerRef{2}) == a.score(PlayerRef{2}) + Weight(c).times(n / 2));
  }
}

TEST_CASE("scores are isomorphism-invariant and moves map along") {
  for (int i = 0; i < 30; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(607, static_cast<uint64_t>(i));
    cfg.max_n = 8;
    WeightedGraph g = random_connected_graph(cfg);
    Rng rng(mix_seed(613, static_cast<uint64_t>(i)));
    std::vector<int> perm(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) perm[static_cast<size_t>(v)] = v;
    for (int v = g.size() - 1; v > 0; --v)
      std::swap(perm[static_cast<size_t>(v)],
                perm[static_cast<size_t>(rng.uniform_int(0, v))]);
    WeightedGraph h = permuted(g, perm);
    Solver a(g, GameMode::normal()), b(h, GameMode::normal());
    CHECK(a.score(PlayerRef{1}) == b.score(PlayerRef{1}));
    VertexSet mapped;
    for (VertexId v : a.optimal_moves(g.vertices()))
      mapped = mapped.with(perm[static_cast<size_t>(v)]);
    CHECK(mapped == b.optimal_moves(h.vertices()));
  }
}

TEST_CASE("memoized solver equals the brute-force oracle") {
  WeightedGraph p2 = make_path({Weight(3), Weight(5)});
  CHECK(brute_force_score(p2, GameMode::normal(), PlayerRef{1}) == Weight(5));
  for (int i = 0; i < 60; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(701, static_cast<uint64_t>(i));
    cfg.min_n = 1;
    cfg.max_n = 8;
    WeightedGraph g = random_connected_graph(cfg);
    Rng rng(mix_seed(709, static_cast<uint64_t>(i)));
    VertexSet root;
    for (VertexId v : g.vertices())
      if (rng.percent(40)) root = root.with(v);
    if (root.empty()) root = VertexSet::single(0);
    for (GameMode mode : {GameMode::normal(), GameMode::rooted(root)}) {
      Solver s(g, mode);
      for (int k : {1, 2, -1, -2})
        CHECK(s.score(PlayerRef{k}) == brute_force_score(g, mode, PlayerRef{k}));
    }
  }
}

TEST_CASE("brute force is guarded") {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < 13; ++i) edges.emplace_back(i, i + 1);
  WeightedGraph g(13, edges, std::vector<Weight>(13));
  CHECK_THROWS_AS(brute_force_score(g, GameMode::normal(), PlayerRef{1}),
                  ContractError);
}

TEST_CASE("solver state queries validate their preconditions") {
  WeightedGraph p4 = make_path({Weight(1), Weight(2), Weight(3), Weight(4)});
  Solver s(p4, GameMode::normal());
  CHECK_THROWS_AS(s.value(VertexSet::of({0, 2})), ContractError);
  Solver r(p4, GameMode::rooted(VertexSet::single(3)));
  CHECK_THROWS_AS(r.value(VertexSet::of({0, 1})), ContractError);
  CHECK_THROWS_AS(Solver(p4, GameMode::rooted(VertexSet())), ContractError);
}

TEST_CASE("optimal playout realizes the game value") {
  WeightedGraph p4 = make_path(testsupport::weights_of({1, 4, 2, 3}));
  auto solver = std::make_shared<Solver>(p4, GameMode::normal());
  OptimalStrategy opt(solver);
  Transcript t = play_out(p4, GameMode::normal(), opt, opt);
  CHECK(t.total_first == Weight(7));
  CHECK(t.total_second == Weight(3));
  CHECK(t.total_first + t.total_second == p4.total_weight());
  REQUIRE(t.moves.size() == 4);
  CHECK(t.moves[0].vertex == 3);  // smallest-id tie-break is irrelevant here
  for (size_t i = 0; i < t.moves.size(); ++i)
    CHECK(t.moves[i].mover == static_cast<int>(i % 2));
}

TEST_CASE("optimal playout totals equal both optimal scores") {
  for (int i = 0; i < 25; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(811, static_cast<uint64_t>(i));
    cfg.max_n = 8;
    WeightedGraph g = random_connected_graph(cfg);
    auto solver = std::make_shared<Solver>(g, GameMode::normal());
    OptimalStrategy opt(solver);
    Transcript t = play_out(g, GameMode::normal(), opt, opt);
    CHECK(t.total_first == solver->score(PlayerRef{1}));
    CHECK(t.total_second == solver->score(PlayerRef{2}));
  }
}

TEST_CASE("infeasible strategies are reported with the offending side") {
  WeightedGraph p3 = make_path({Weight(1), Weight(2), Weight(3)});
  FunctionStrategy take_middle([](std::span<const VertexId>) { return 1; });
  auto solver = std::make_shared<Solver>(p3, GameMode::normal());
  OptimalStrategy opt(solver);
  CHECK_THROWS_MATCHES(play_out(p3, GameMode::normal(), take_middle, opt),
                       InvariantBreach,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("first")));
}

TEST_CASE("best response of the optimal strategy is the game value") {
  for (int i = 0; i < 20; ++i) {
    GeneratorConfig cfg;
    cfg.seed = mix_seed(907, static_cast<uint64_t>(i));
    cfg.max_n = 8;
    WeightedGraph g = random_connected_graph(cfg);
    auto solver = std::make_shared<Solver>(g, GameMode::normal());
    OptimalStrategy opt(solver);
    CHECK(best_response_value(g, GameMode::normal(), opt, 0) ==
          solver->score(PlayerRef{1}));
  }
}

TEST_CASE("a bad fixed strategy forfeits what it must") {
  WeightedGraph p2 = make_path({Weight(3), Weight(5)});
  // always grab the lightest feasible vertex
  FunctionStrategy min_first([&](std::span<const VertexId> h) {
    VertexSet rem = remaining_after(p2, h);
    VertexSet feas = feasible_moves_normal(p2, rem);
    VertexId best = feas.min();
    for (VertexId v : feas)
      if (p2.weight(v) < p2.weight(best)) best = v;
    return best;
  });
  CHECK(best_response_value(p2, GameMode::normal(), min_first, 0) == Weight(3));
}

TEST_CASE("best response is guarded") {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < 17; ++i) edges.emplace_back(i, i + 1);
  WeightedGraph g(17, edges, std::vector<Weight>(17));
  FunctionStrategy any([](std::span<const VertexId>) { return 0; });
  CHECK_THROWS_AS(best_response_value(g, GameMode::normal(), any, 0),
                  ContractError);
}

TEST_CASE("exact fractional weights solve exactly") {
  std::vector<Weight> w = {Weight::parse("0.1"), Weight::parse("0.2"),
                           Weight::parse("1/3")};
  WeightedGraph g = make_path(w);
  Solver s(g, GameMode::normal());
  CHECK(s.score(PlayerRef{1}) + s.score(PlayerRef{2}) == g.total_weight());
  // endpoints only: grabbing 1/3 leaves (0.1, 0.2), the opponent takes 0.2
  CHECK(s.score(PlayerRef{1}) == Weight::fraction(13, 30));
  CHECK(s.score(PlayerRef{1}) == path_game_value(w));
}

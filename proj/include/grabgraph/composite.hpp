#pragma once

#include <iostream>
#include <memory>

#include "grabgraph/strategy.hpp"

namespace grab {

/// Split of the whole game into two rooted subgames whose root sets are
/// completely joined. The composite player owns the internal move
/// indices of each part that match the assigned parity (1-based,
/// parity stored as index mod 2).
struct SubgameAssignment {
  VertexSet part1, part2;
  VertexSet root1, root2;
  int parity1 = 0, parity2 = 0;

  /// Derives and validates the standard assignment for an even graph:
  /// roots are the cross-neighborhoods, the composite player acts as the
  /// second-from-last mover in part 1 and the last mover in part 2, so
  /// its two roles land on opposite sides of the move alternation.
  static SubgameAssignment make(const WeightedGraph& g, VertexSet part_1) {
    SubgameAssignment a;
    a.part1 = part_1;
    a.part2 = g.vertices() - part_1;
    if (a.part1.empty() || a.part2.empty())
      throw ContractError("both parts must be non-empty");
    if (!a.part1.subset_of(g.vertices()))
      throw ContractError("part has vertices outside the graph");
    if (g.size() % 2 != 0)
      throw ContractError("composite assignment needs an even vertex count");
    a.root1 = a.part1 & neighborhood(g, a.part2);
    a.root2 = a.part2 & neighborhood(g, a.part1);
    if (a.root1.empty() || a.root2.empty())
      throw ContractError("parts must see each other");
    for (VertexId u : a.root1)
      for (VertexId v : a.root2)
        if (!g.adjacent(u, v))
          throw ContractError("cross roots must be completely joined");
    if (!detail::components_rooted(g, a.part1.bits(), a.root1.bits()) ||
        !detail::components_rooted(g, a.part2.bits(), a.root2.bits()))
      throw ContractError("a part component misses its root");
    int m1 = a.part1.count(), m2 = a.part2.count();
    a.parity1 = (m1 - 1) & 1;  // second-from-last in part 1
    a.parity2 = m2 & 1;        // last in part 2
    // m1 + m2 even makes the two roles complementary
    return a;
  }
};

/// Plays two rooted subgames at once: on each of this strategy's turns
/// exactly one subgame's next internal index matches its parity
/// assignment, and the strategy plays solver-optimal rooted moves there.
/// Every history move (its own and the opponent's) is re-checked for
/// rooted feasibility inside its subgame; any breach of the parity or
/// feasibility bookkeeping raises InvariantBreach, because those checks
/// are the executable content of the bound this strategy realizes.
class CompositeStrategy final : public Strategy {
 public:
  CompositeStrategy(const WeightedGraph& g, SubgameAssignment a)
      : g_(g),
        a_(a),
        sub1_(std::make_shared<Solver>(g, GameMode::rooted(a.root1))),
        sub2_(std::make_shared<Solver>(g, GameMode::rooted(a.root2))) {}

  VertexId choose(std::span<const VertexId> history) const override {
    VertexSet rem1 = a_.part1, rem2 = a_.part2;
    int c1 = 0, c2 = 0;
    for (VertexId v : history) {
      bool in1 = a_.part1.contains(v);
      VertexSet& rem = in1 ? rem1 : rem2;
      VertexSet root = in1 ? a_.root1 : a_.root2;
      VertexSet feas = feasible_moves_rooted(g_, rem, root);
      if (!feas.contains(v))
        throw InvariantBreach(
            "feasibility transfer failed: move " + std::to_string(v) +
            " is not feasible inside its rooted subgame");
      rem = rem.without(v);
      (in1 ? c1 : c2) += 1;
    }
    bool match1 = ((c1 + 1) & 1) == a_.parity1;
    bool match2 = ((c2 + 1) & 1) == a_.parity2;
    if (!match1 && !match2)
      throw InvariantBreach("composite parity invariant breach: no subgame owed a move");
    if (match1 && match2) {
      // Unreachable when the parities are complementary; prefer part 1.
      std::cerr << "composite: two legal openers, taking subgame 1\n";
      match2 = false;
    }
    VertexSet rem = match1 ? rem1 : rem2;
    if (rem.empty())
      throw InvariantBreach("composite parity invariant breach: owed subgame is exhausted");
    try {
      return (match1 ? sub1_ : sub2_)->optimal_moves(rem).min();
    } catch (const ContractError& e) {
      throw InvariantBreach(std::string("subgame root invariant failed: ") + e.what());
    }
  }

  bool markov() const override { return true; }

  const SubgameAssignment& assignment() const { return a_; }
  const Solver& subgame1() const { return *sub1_; }
  const Solver& subgame2() const { return *sub2_; }

 private:
  WeightedGraph g_;
  SubgameAssignment a_;
  std::shared_ptr<const Solver> sub1_, sub2_;
};

}  // namespace grab

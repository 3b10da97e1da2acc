#pragma once

#include <memory>

#include "grabgraph/partitioned_graph.hpp"
#include "grabgraph/strategy.hpp"

namespace grab {

/// Strategy for even blow-ups of cycles: open each round by grabbing a
/// maximum-weight vertex while the remainder is still a blow-up of a
/// cycle, and fall back to solver-optimal play once it has opened into a
/// blow-up of a path. If a round ever starts on anything else, the
/// structural claim behind this strategy is false for the instance and
/// choose() raises InvariantBreach.
class MaxFirstStrategy final : public Strategy {
 public:
  explicit MaxFirstStrategy(PartitionedGraph pg)
      : pg_(std::move(pg)),
        solver_(std::make_shared<Solver>(pg_.graph, GameMode::normal())) {
    if (!pg_.base.is_cycle() || pg_.core() != pg_.graph.vertices())
      throw ContractError("input is not a blow-up of a cycle");
    if (pg_.graph.size() % 2 != 0)
      throw ContractError("max-first strategy needs an even vertex count");
    check_blowup_invariants(pg_);
  }

  VertexId choose(std::span<const VertexId> history) const override {
    VertexSet rem = remaining_after(pg_.graph, history);
    if (history.size() % 2 == 0) {  // this strategy's round opener
      switch (classify_blowup_remainder(pg_, rem)) {
        case BlowupShape::cycle:
          return max_weight_vertex(rem);
        case BlowupShape::path:
          return solver_->optimal_moves(rem).min();
        case BlowupShape::neither:
          throw InvariantBreach(
              "remainder is not a blow-up of a path or a cycle");
      }
    }
    return solver_->optimal_moves(rem).min();
  }

  bool markov() const override { return true; }

  const Solver& solver() const { return *solver_; }

 private:
  PartitionedGraph pg_;
  std::shared_ptr<const Solver> solver_;

  VertexId max_weight_vertex(VertexSet rem) const {
    VertexId best = rem.min();
    for (VertexId v : rem)
      if (pg_.graph.weight(v) > pg_.graph.weight(best)) best = v;
    return best;  // ties keep the smallest id
  }
};

}  // namespace grab

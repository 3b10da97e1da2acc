#pragma once

#include <functional>
#include <memory>
#include <span>

#include "grabgraph/solver.hpp"

namespace grab {

/// A deterministic move policy: the next vertex as a function of the
/// move history (both players' moves, in order). Strategies are bound to
/// one graph and mode at construction.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual VertexId choose(std::span<const VertexId> history) const = 0;

  /// True when the choice depends on the history only through the set of
  /// claimed vertices. Lets best_response_value memoize by remaining set.
  virtual bool markov() const { return false; }
};

/// Remaining vertices after the given history of claims.
inline VertexSet remaining_after(const WeightedGraph& g,
                                 std::span<const VertexId> history) {
  VertexSet rem = g.vertices();
  for (VertexId v : history) {
    if (!rem.contains(v)) throw ContractError("history claims a vertex twice");
    rem = rem.without(v);
  }
  return rem;
}

/// Solver-backed optimal play; ties broken by smallest vertex id.
class OptimalStrategy final : public Strategy {
 public:
  explicit OptimalStrategy(std::shared_ptr<const Solver> solver)
      : solver_(std::move(solver)) {}

  VertexId choose(std::span<const VertexId> history) const override {
    VertexSet rem = remaining_after(solver_->graph(), history);
    return solver_->optimal_moves(rem).min();
  }
  bool markov() const override { return true; }

  const Solver& solver() const { return *solver_; }

 private:
  std::shared_ptr<const Solver> solver_;
};

inline OptimalStrategy optimal_strategy(const WeightedGraph& g,
                                        const GameMode& mode) {
  return OptimalStrategy(std::make_shared<Solver>(g, mode));
}

/// Adapter for ad-hoc policies (tests, fixed heuristics).
class FunctionStrategy final : public Strategy {
 public:
  using Fn = std::function<VertexId(std::span<const VertexId>)>;
  explicit FunctionStrategy(Fn fn, bool is_markov = false)
      : fn_(std::move(fn)), markov_(is_markov) {}

  VertexId choose(std::span<const VertexId> history) const override {
    return fn_(history);
  }
  bool markov() const override { return markov_; }

 private:
  Fn fn_;
  bool markov_;
};

}  // namespace grab

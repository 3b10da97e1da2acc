#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "grabgraph/strategy.hpp"

namespace grab {

struct Move {
  int mover;  // 0 = first player, 1 = second player
  VertexId vertex;
  Weight weight;
};

struct Transcript {
  std::vector<Move> moves;
  Weight total_first;
  Weight total_second;
};

namespace detail {

inline VertexSet feasible_for_mode(const WeightedGraph& g, const GameMode& mode,
                                   VertexSet rem) {
  return mode.is_rooted() ? feasible_moves_rooted(g, rem, mode.root())
                          : feasible_moves_normal(g, rem);
}

}  // namespace detail

/// Runs one full game. Every move is validated against the mode's
/// feasible set; an infeasible move raises InvariantBreach naming the
/// offending side (that is the falsification signal for strategy
/// invariants, never to be patched over).
inline Transcript play_out(const WeightedGraph& g, const GameMode& mode,
                           const Strategy& first, const Strategy& second) {
  Transcript t;
  std::vector<VertexId> history;
  VertexSet rem = g.vertices();
  while (!rem.empty()) {
    int mover = static_cast<int>(history.size() % 2);
    VertexSet feas = detail::feasible_for_mode(g, mode, rem);
    VertexId v = (mover == 0 ? first : second).choose(history);
    if (!feas.contains(v))
      throw InvariantBreach(
          std::string(mover == 0 ? "first" : "second") +
          "-player strategy returned infeasible move " + std::to_string(v));
    t.moves.push_back({mover, v, g.weight(v)});
    (mover == 0 ? t.total_first : t.total_second) += g.weight(v);
    history.push_back(v);
    rem = rem.without(v);
  }
  return t;
}

/// Total the fixed strategy is guaranteed when the other side plays to
/// minimize it, by explicit recursion over the adversary's options.
/// Memoized by remaining set when the strategy is markov. Guarded to
/// |V| <= 16.
inline Weight best_response_value(const WeightedGraph& g, const GameMode& mode,
                                  const Strategy& fixed, int fixed_role /* 0=first, 1=second */) {
  if (g.size() > 16)
    throw ContractError("best_response_value is guarded to 16 vertices");
  if (fixed_role != 0 && fixed_role != 1)
    throw ContractError("fixed_role must be 0 (first) or 1 (second)");
  std::unordered_map<uint64_t, Weight> memo;
  const bool markov = fixed.markov();
  std::vector<VertexId> history;

  auto recurse = [&](auto&& self, VertexSet rem) -> Weight {
    if (rem.empty()) return Weight();
    if (markov)
      if (auto it = memo.find(rem.bits()); it != memo.end()) return it->second;
    int mover = static_cast<int>(history.size() % 2);
    VertexSet feas = detail::feasible_for_mode(g, mode, rem);
    Weight result;
    if (mover == fixed_role) {
      VertexId v = fixed.choose(history);
      if (!feas.contains(v))
        throw InvariantBreach("fixed strategy returned infeasible move " +
                              std::to_string(v));
      history.push_back(v);
      result = g.weight(v) + self(self, rem.without(v));
      history.pop_back();
    } else {
      bool any = false;
      for (VertexId v : feas) {
        history.push_back(v);
        Weight cand = self(self, rem.without(v));
        history.pop_back();
        if (!any || cand < result) {
          result = cand;
          any = true;
        }
      }
    }
    if (markov) memo.emplace(rem.bits(), result);
    return result;
  };
  return recurse(recurse, g.vertices());
}

}  // namespace grab

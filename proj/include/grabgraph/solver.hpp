#pragma once

#include <cassert>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "grabgraph/connectivity.hpp"
#include "grabgraph/game.hpp"
#include "grabgraph/weighted_graph.hpp"

namespace grab {

/// Value and optimal first moves for one game state.
struct SolveResult {
  Weight value;          // optimal total of the player to move
  VertexSet optimal_moves;
};

/// Exact game values by memoized adversarial search.
///
/// One handle fixes a graph and a mode. The memo is keyed by the
/// remaining-vertex bit set alone: whose turn is the parity of the
/// claimed count, and the effective root is root & remaining. The value
/// recurrence is
///
///   value(rem) = max over feasible v of w(v) + (W(rem-v) - value(rem-v))
///
/// with value(empty) = 0, where W is the remaining total weight, so
/// value(rem) is the optimal total of whoever moves at `rem`. Any state
/// of the same parity class reachable or not can be queried, which is
/// what lets one handle answer subgame scores (the game on an induced
/// subgraph is the game restricted to that remainder).
///
/// Weights are rescaled to a common integer denominator once, the
/// recurrence runs in int64, and results are converted back on query;
/// positive rescaling changes no comparison, so values stay exact.
///
/// Queries are serialized internally, so a handle may be shared across
/// threads; the verification harness instead solves independent
/// instances on independent handles.
class Solver {
 public:
  Solver(WeightedGraph g, GameMode mode)
      : g_(std::move(g)), mode_(mode) {
    if (mode_.is_rooted()) {
      if (mode_.root().empty() || !mode_.root().subset_of(g_.vertices()))
        throw ContractError("root must be a nonempty subset of the vertices");
    }
    long long den = 1;
    for (int v = 0; v < g_.size(); ++v) {
      long long d = g_.weight(v).denominator();
      long long gg = std::gcd(den, d);
      __int128 l = static_cast<__int128>(den / gg) * d;
      if (l > INT64_MAX) throw CapacityError("weight denominators overflow");
      den = static_cast<long long>(l);
    }
    den_ = den;
    scaled_.reserve(static_cast<size_t>(g_.size()));
    for (int v = 0; v < g_.size(); ++v) {
      const Weight& w = g_.weight(v);
      __int128 s = static_cast<__int128>(w.numerator()) * (den / w.denominator());
      if (s > INT64_MAX) throw CapacityError("scaled weight overflows 64 bits");
      scaled_.push_back(static_cast<long long>(s));
    }
  }

  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  const WeightedGraph& graph() const { return g_; }
  const GameMode& mode() const { return mode_; }

  /// Optimal total of the player to move at `remaining`.
  Weight value(VertexSet remaining) const {
    validate_state(remaining);
    std::lock_guard<std::mutex> lk(mu_);
    return Weight::fraction(value_impl(remaining.bits(), subtotal(remaining.bits())), den_);
  }

  /// Every move achieving value(remaining); ties are not broken here.
  VertexSet optimal_moves(VertexSet remaining) const {
    validate_state(remaining);
    if (remaining.empty()) return VertexSet();
    std::lock_guard<std::mutex> lk(mu_);
    uint64_t rem = remaining.bits();
    long long wrem = subtotal(rem);
    long long best = value_impl(rem, wrem);
    uint64_t opt = 0;
    for (uint64_t f = feasible_mask(rem); f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      uint64_t child = rem & ~(uint64_t{1} << v);
      long long cw = wrem - scaled_[static_cast<size_t>(v)];
      if (scaled_[static_cast<size_t>(v)] + (cw - value_impl(child, cw)) == best)
        opt |= uint64_t{1} << v;
    }
    return VertexSet::of_bits(opt);
  }

  SolveResult solve_state(VertexSet remaining) const {
    return SolveResult{value(remaining), optimal_moves(remaining)};
  }

  /// Score of Player k in the full game on this handle's graph.
  Weight score(PlayerRef k) const { return score_at(g_.vertices(), k); }

  /// Score of Player k in the game restricted to `remaining` (the game on
  /// the induced subgraph, rooted at root & remaining in rooted mode).
  Weight score_at(VertexSet remaining, PlayerRef k) const {
    validate_state(remaining);
    if (remaining.empty()) return Weight();
    int resolved = k.resolve(remaining.count());
    std::lock_guard<std::mutex> lk(mu_);
    uint64_t rem = remaining.bits();
    long long wrem = subtotal(rem);
    long long val = value_impl(rem, wrem);
    return Weight::fraction(resolved == 1 ? val : wrem - val, den_);
  }

  /// Mode-aware feasible moves at an arbitrary valid state.
  VertexSet feasible(VertexSet remaining) const {
    validate_state(remaining);
    return VertexSet::of_bits(feasible_mask(remaining.bits()));
  }

  /// Throws ContractError unless `remaining` is a valid state for this
  /// mode: connected in the normal game, root-set invariant in the
  /// rooted game.
  void validate_state(VertexSet remaining) const {
    if (!remaining.subset_of(g_.vertices()))
      throw ContractError("state has vertices outside the graph");
    if (mode_.is_rooted()) {
      if (!detail::components_rooted(g_, remaining.bits(), mode_.root().bits()))
        throw ContractError("root-set invariant violated at queried state");
    } else {
      if (!detail::connected_mask(g_, remaining.bits()))
        throw ContractError("normal game state must be connected");
    }
  }

 private:
  static constexpr size_t kMemoLimit = size_t{1} << 26;

  WeightedGraph g_;
  GameMode mode_;
  std::vector<long long> scaled_;
  long long den_ = 1;
  mutable std::unordered_map<uint64_t, long long> memo_;
  mutable std::mutex mu_;

  long long subtotal(uint64_t rem) const {
    long long sum = 0;
    for (uint64_t f = rem; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      sum += scaled_[static_cast<size_t>(v)];
    }
    return sum;
  }

  uint64_t feasible_mask(uint64_t rem) const {
    return mode_.is_rooted()
               ? detail::feasible_rooted_mask(g_, rem, mode_.root().bits())
               : detail::feasible_normal_mask(g_, rem);
  }

  long long value_impl(uint64_t rem, long long wrem) const {
    if (rem == 0) return 0;
    if (auto it = memo_.find(rem); it != memo_.end()) return it->second;
    long long best = -1;
    for (uint64_t f = feasible_mask(rem); f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      uint64_t child = rem & ~(uint64_t{1} << v);
      long long cw = wrem - scaled_[static_cast<size_t>(v)];
      long long cand = scaled_[static_cast<size_t>(v)] + (cw - value_impl(child, cw));
      if (cand > best) best = cand;
    }
    // A connected or properly rooted nonempty state always has a move.
    assert(best >= 0);
    assert(best <= wrem);  // weight conservation, state by state
    if (memo_.size() >= kMemoLimit)
      throw CapacityError("solver state table exceeded 2^26 entries");
    memo_.emplace(rem, best);
    return best;
  }
};

}  // namespace grab

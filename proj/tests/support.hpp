#pragma once

#include <functional>
#include <map>
#include <vector>

#include "grabgraph/grabgraph.hpp"

namespace testsupport {

/// Independent oracle for path games. On a path the feasible moves are
/// exactly the two endpoints of the remaining interval, so the game
/// value satisfies the interval recurrence
///   f(i,j) = max( w[i] + W(i+1,j) - f(i+1,j),
///                 w[j] + W(i,j-1) - f(i,j-1) )
/// with f on an empty interval = 0. Shares no code with the solver.
inline grab::Weight path_game_value(const std::vector<grab::Weight>& w) {
  using grab::Weight;
  int n = static_cast<int>(w.size());
  if (n == 0) return Weight();
  std::vector<Weight> prefix(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i)
    prefix[static_cast<size_t>(i) + 1] = prefix[static_cast<size_t>(i)] + w[static_cast<size_t>(i)];
  auto span_sum = [&](int i, int j) {
    return prefix[static_cast<size_t>(j) + 1] - prefix[static_cast<size_t>(i)];
  };
  std::map<std::pair<int, int>, Weight> memo;
  std::function<Weight(int, int)> f = [&](int i, int j) -> Weight {
    if (i > j) return Weight();
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Weight left = w[static_cast<size_t>(i)] + (span_sum(i + 1, j) - f(i + 1, j));
    Weight right = w[static_cast<size_t>(j)] + (span_sum(i, j - 1) - f(i, j - 1));
    Weight best = left > right ? left : right;
    memo.emplace(key, best);
    return best;
  };
  return f(0, n - 1);
}

inline std::vector<grab::Weight> weights_of(std::initializer_list<long long> ws) {
  std::vector<grab::Weight> out;
  for (long long w : ws) out.emplace_back(w);
  return out;
}

}  // namespace testsupport

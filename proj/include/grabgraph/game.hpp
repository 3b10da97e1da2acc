#pragma once

#include <string>

#include "grabgraph/errors.hpp"
#include "grabgraph/vertex_set.hpp"

namespace grab {

/// Normal game (claim only non-cut vertices) or the game rooted at a set
/// S (every component of the remainder must keep a vertex of S). The
/// root set shrinks as its vertices are claimed.
class GameMode {
 public:
  static GameMode normal() { return GameMode(); }
  static GameMode rooted(VertexSet root) {
    GameMode m;
    m.rooted_ = true;
    m.root_ = root;
    return m;
  }

  bool is_rooted() const { return rooted_; }
  VertexSet root() const { return root_; }

  friend bool operator==(const GameMode& a, const GameMode& b) {
    return a.rooted_ == b.rooted_ && a.root_ == b.root_;
  }

 private:
  GameMode() = default;
  bool rooted_ = false;
  VertexSet root_;
};

/// Player reference: 1 and 2 count from the first move, -1 and -2 from
/// the last. -1/-2 resolve to 1/2 by the parity of the vertex count.
struct PlayerRef {
  int k = 1;

  PlayerRef() = default;
  PlayerRef(int kk) : k(kk) {
    if (k != 1 && k != 2 && k != -1 && k != -2)
      throw ContractError("player must be one of 1, 2, -1, -2");
  }

  /// Resolves to 1 or 2 for a game with `vertex_count` moves in total.
  int resolve(int vertex_count) const {
    if (k > 0) return k;
    if (vertex_count <= 0)
      throw ContractError("cannot resolve a last-player reference on an empty game");
    int last = (vertex_count % 2 == 1) ? 1 : 2;
    return k == -1 ? last : 3 - last;
  }

  std::string str() const { return std::to_string(k); }
};

}  // namespace grab

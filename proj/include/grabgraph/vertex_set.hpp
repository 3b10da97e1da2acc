#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "grabgraph/errors.hpp"

namespace grab {

using VertexId = int;

/// Hard vertex capacity: one bit per vertex in a 64-bit state key. The
/// solver's cost is exponential anyway, so this is far beyond solvable
/// sizes; larger instances are rejected at load.
inline constexpr int kMaxVertices = 64;

/// Set of vertices of one graph, stored as a bit mask. Value type; all
/// operations return new sets.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet of_bits(uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static VertexSet single(VertexId v) {
    check(v);
    return of_bits(uint64_t{1} << v);
  }
  static VertexSet first_n(int n) {
    if (n < 0 || n > kMaxVertices) throw ContractError("bad vertex count");
    return of_bits(n == kMaxVertices ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<VertexId> vs) {
    VertexSet s;
    for (VertexId v : vs) s = s.with(v);
    return s;
  }

  bool contains(VertexId v) const {
    return v >= 0 && v < kMaxVertices && (bits_ >> v) & 1;
  }
  VertexSet with(VertexId v) const {
    check(v);
    return of_bits(bits_ | (uint64_t{1} << v));
  }
  VertexSet without(VertexId v) const {
    check(v);
    return of_bits(bits_ & ~(uint64_t{1} << v));
  }

  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  uint64_t bits() const { return bits_; }

  /// Smallest contained vertex id; set must be nonempty.
  VertexId min() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend VertexSet operator&(VertexSet a, VertexSet b) {
    return of_bits(a.bits_ & b.bits_);
  }
  friend VertexSet operator|(VertexSet a, VertexSet b) {
    return of_bits(a.bits_ | b.bits_);
  }
  friend VertexSet operator-(VertexSet a, VertexSet b) {
    return of_bits(a.bits_ & ~b.bits_);
  }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  class iterator {
   public:
    explicit iterator(uint64_t rest) : rest_(rest) {}
    VertexId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator==(const iterator& o) const { return rest_ == o.rest_; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<size_t>(count()));
    for (VertexId v : *this) out.push_back(v);
    return out;
  }

 private:
  uint64_t bits_ = 0;

  static void check(VertexId v) {
    if (v < 0 || v >= kMaxVertices)
      throw ContractError("vertex id out of range [0, 64)");
  }
};

}  // namespace grab

#pragma once
// Small helpers for vertex sets stored as 32-bit masks (bit v = vertex v).

#include <bit>
#include <cstdint>

namespace tourlab {

using VertexSet = std::uint32_t;

[[nodiscard]] constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

[[nodiscard]] constexpr VertexSet full_set(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

[[nodiscard]] constexpr int popcount(VertexSet s) { return std::popcount(s); }

// Applies fn to each set bit index, lowest first.
template <class Fn>
constexpr void for_each_bit(VertexSet s, Fn fn) {
  while (s) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

// Next subset of the same popcount in increasing numeric order (Gosper's
// hack); wraps past the last one, callers bound the loop themselves.
[[nodiscard]] constexpr VertexSet next_same_popcount(VertexSet s) {
  VertexSet c = s & -s;
  VertexSet r = s + c;
  return r | (((s ^ r) >> 2) / c);
}

}  // namespace tourlab

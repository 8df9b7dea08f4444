#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

// Three quadratic-residue blocks of order 4t+3 with block i dominating
// block i+1 (mod 3); n = 12t + 9.
struct T3Spec {
  int t = 1;  // >= 1 and 4t+3 prime (automatically 3 mod 4)
};

// A path v_0 .. v_{p-1} plus four domination sets; n = p + 2*n0 + 2*n1.
// Requires p odd >= 3, n1 <= (p-1)/2, n0 + n1 >= p.
struct T2Spec {
  int p = 3;
  int n0 = 0;
  int n1 = 0;
};

// Each pair oriented by an independent fair coin from a SplitMix64 stream;
// identical (n, seed) gives identical output everywhere.
[[nodiscard]] Tournament random_tournament(int n, std::uint64_t seed);

// Vertices 0..q-1, arc i -> j iff (j - i) mod q is a nonzero quadratic
// residue.  Requires q prime with q = 3 (mod 4); doubly regular with
// lambda = (q-3)/4.
[[nodiscard]] Tournament paley_tournament(int q);

// Arc i -> j iff (j - i) mod n is in offsets.  Requires n odd and exactly one
// of {d, n-d} per d, so the result is regular.
[[nodiscard]] Tournament circulant_tournament(int n, const std::vector<int>& offsets);

// Blocks occupy vertex ranges [0,q), [q,2q), [2q,3q) for q = 4t+3.
[[nodiscard]] Tournament t3_tournament(const T3Spec& spec);

// Vertex layout: v_0..v_{p-1}, then N0+, N1+, N0-, N1- in blocks.
// Fixed arcs: the path, V -> N0+, N0- -> V, V\{v_0} -> N1+, N1+ -> v_0,
// N1- -> V\{v_{p-1}}, v_{p-1} -> N1-.  Remaining pairs are oriented by a
// seeded backtracking search for exact regularity (out-degree (n-1)/2
// everywhere); nullopt when the search proves no completion exists.
[[nodiscard]] std::optional<Tournament> t2_tournament(const T2Spec& spec, std::uint64_t seed);

// Regular tournament on n = 2k+1 vertices with p2(u0, u1) = 0, hence
// pi2 = 0: an inner regular tournament T' on 2k-3 vertices (the standard
// circulant, vertex roles shuffled by seed) split into V0, V1, {v}, plus
// u0, u1, w0, w1 wired so that N+(u0) and N-(u1) are disjoint.
// Layout: V0 = 0..k-3, V1 = k-2..2k-5, v = 2k-4, u0 = 2k-3, u1 = 2k-2,
// w0 = 2k-1, w1 = 2k.
[[nodiscard]] Tournament figure4_tournament(int k, std::uint64_t seed);

}  // namespace tourlab

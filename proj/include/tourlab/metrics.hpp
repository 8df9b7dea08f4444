#pragma once

#include <map>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

// Number of directed 2-paths from u through a common neighbour to v:
// |N+(u) ∩ N-(v)|.
[[nodiscard]] int p2(const Tournament& t, int u, int v);

struct Pi2Result {
  int value = 0;
  // Lexicographically first ordered pair (u, v), u != v, attaining the minimum.
  int u = 0;
  int v = 1;
};

// min over ordered pairs of p2; argmin is the lexicographically first pair.
[[nodiscard]] Pi2Result pi2_argmin(const Tournament& t);
[[nodiscard]] int pi2(const Tournament& t);

// max over vertices of |d+(v) - d-(v)|.
[[nodiscard]] int irregularity(const Tournament& t);

[[nodiscard]] bool is_regular(const Tournament& t);
// Regular and every arc uv has p2(u, v) == (n - 3) / 4.
[[nodiscard]] bool is_doubly_regular(const Tournament& t);

// s(u, v) = p2(u, v) + p2(v, u) - 2 * pi2(T).  Symmetric in u, v.
[[nodiscard]] int surplus_pair(const Tournament& t, int u, int v);

// Sum of surplus_pair over all unordered pairs inside w.
[[nodiscard]] int surplus_set(const Tournament& t, VertexSet w);

struct SurplusReport {
  int pi2 = 0;
  VertexSet set = 0;
  int set_surplus = 0;
  // Unordered pairs {u, v} of `set` in lexicographic order with their surplus.
  struct PairEntry {
    int u = 0;
    int v = 0;
    int surplus = 0;
  };
  std::vector<PairEntry> pair_surplus;
};

[[nodiscard]] SurplusReport surplus_report(const Tournament& t, VertexSet w);

// Vertices on a 2-path from u to v, i.e. N+(u) ∩ N-(v).
[[nodiscard]] VertexSet intermediate_set(const Tournament& t, int u, int v);

// Classification of every off-path vertex w against a directed path
// P = u_0 ... u_{p-1}, by the arc pattern a_i = [u_i -> w]:
//   all zero            -> w dominates V(P)        (dominating)
//   all one             -> w dominated by V(P)     (dominated)
//   0^(k+1) 1^(p-k-1)   -> hybrid with switch k in [0, p-2]
//   anything else       -> inserting: some i with u_i -> w -> u_{i+1}
struct PathContext {
  VertexSet dominating = 0;
  VertexSet dominated = 0;
  VertexSet inserting = 0;
  std::map<int, int> hybrid;  // vertex -> switch index k
  // Four-set sizes used by the structural arguments.  For p == 2 the lone
  // switch index k = 0 = p - 2 counts in both n1_minus and n1_plus.
  int n0_minus = 0;  // |dominating|
  int n1_minus = 0;  // hybrids with k == p - 2
  int n1_plus = 0;   // hybrids with k == 0
  int n0_plus = 0;   // |dominated|
};

[[nodiscard]] PathContext classify_against_path(const Tournament& t, const DirectedPath& p);

}  // namespace tourlab

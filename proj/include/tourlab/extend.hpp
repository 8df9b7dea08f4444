#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

// Result of an extendability scan.
struct ExtendabilityVerdict {
  bool extendable = true;
  // Shortest, then lexicographically least, non-extendable path if any.
  std::optional<DirectedPath> certificate;
  int k_threshold = 1;
  std::uint64_t subsets_checked = 0;
};

[[nodiscard]] ExtendabilityVerdict is_path_extendable(const Tournament& t, int k_threshold,
                                                      int jobs);
[[nodiscard]] std::vector<DirectedPath> nonextendable_paths(const Tournament& t,
                                                            std::size_t limit, int jobs);

// Exact fixed-endpoint hamiltonian-path table over all vertex subsets.
//
// starts(S, t) is the bitmask of vertices s such that the subtournament
// induced by S has a hamiltonian path from s to t.  Invariants:
//   - starts({t}, t) == {t}
//   - starts(S, t) == union over u in S \ {t} with u -> t of starts(S \ {t}, u)
//   - s in starts(S, t) implies s, t in S
//
// Memory: n * 2^n * 4 bytes (n = 21 needs ~176 MiB; n = 24 ~1.5 GiB).
class HamiltonianPathTable {
 public:
  explicit HamiltonianPathTable(const Tournament& t, int jobs = 1);

  [[nodiscard]] VertexSet starts(VertexSet s, int last) const {
    return table_[std::size_t{s} * static_cast<unsigned>(n_) + static_cast<unsigned>(last)];
  }
  [[nodiscard]] int n() const { return n_; }

  // Lexicographically least hamiltonian path of <S> from `first` to `last`.
  // Pre: first is in starts(S, last).
  [[nodiscard]] std::vector<int> least_path(const Tournament& t, VertexSet s, int first,
                                            int last) const;

  // All hamiltonian paths of <S> ending at `last` whose start lies in
  // `start_filter`, in lexicographic order of the vertex sequence.
  void all_paths(const Tournament& t, VertexSet s, int last, VertexSet start_filter,
                 std::vector<std::vector<int>>& out) const;

 private:
  HamiltonianPathTable() = default;
  void allocate(const Tournament& t);
  void fill_layer(const Tournament& t, int m, int jobs);

  friend ExtendabilityVerdict is_path_extendable(const Tournament&, int, int);
  friend std::vector<DirectedPath> nonextendable_paths(const Tournament&, std::size_t, int);

  int n_ = 0;
  std::vector<VertexSet> table_;
};

// The lexicographically least extension of P: over every off-path vertex w
// (and every hamiltonian path of <V(P) + w> keeping P's endpoints), the least
// vertex sequence.  nullopt when no extension exists.
// Pre: P lies in T and is not hamiltonian.
[[nodiscard]] std::optional<DirectedPath> extend_path(const Tournament& t, const DirectedPath& p);

// Checks every non-hamiltonian path of length >= k_threshold for an
// extension.  Extendability of a path depends only on (vertex set, first,
// last), so the scan walks (S, last, start) triples by subset size, smallest
// first, and stops at the first size with a failure; the certificate is
// therefore a shortest non-extendable path.
[[nodiscard]] ExtendabilityVerdict is_path_extendable(const Tournament& t, int k_threshold = 1,
                                                      int jobs = 1);

// Every non-extendable non-hamiltonian path (length >= 1), shortest first and
// lexicographic within a length, up to `limit` paths.
[[nodiscard]] std::vector<DirectedPath> nonextendable_paths(
    const Tournament& t, std::size_t limit = SIZE_MAX, int jobs = 1);

}  // namespace tourlab

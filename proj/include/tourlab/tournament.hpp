#pragma once
// Tournament: a complete oriented graph on n <= 24 vertices, stored as one
// out-neighbor bitmask per vertex. Instances are immutable once built; every
// factory validates, so a constructed Tournament always satisfies
//   out_[u] has no bit u, and for u != v exactly one of u->v, v->u.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourlab/bits.hpp"

namespace tourlab {

inline constexpr int kMaxVertices = 24;
inline constexpr const char* kVersion = "0.1.0";

// Thrown when an input is structurally fine but exceeds a documented size
// cap (distinct from std::invalid_argument so the CLI can report both as
// usage errors with the right message).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Diagnostics for raw adjacency rows; factories throw, tests probe directly.
struct RowValidation {
  bool ok = true;
  std::vector<std::string> issues;
};
[[nodiscard]] RowValidation validate_rows(int n, std::span<const std::uint32_t> rows);

// Counts of the four vertex classes around an ordered pair (u, v); the
// classes partition the other n-2 vertices.
struct PairProfile {
  int p2_uv = 0;       // w with u->w->v
  int common_out = 0;  // w with u->w and v->w
  int common_in = 0;   // w with w->u and w->v
  int p2_vu = 0;       // w with v->w->u
};

class Tournament {
 public:
  Tournament() = default;  // n() == 0 placeholder, not a valid tournament

  // Builds from explicit out-rows; throws std::invalid_argument on any
  // structural defect and CapacityError when n > kMaxVertices.
  [[nodiscard]] static Tournament from_out_rows(int n, std::span<const std::uint32_t> rows);

  // Builds from the pair-bit encoding: bit k of `bits` orients the k-th pair
  // (i, j), i < j, in lexicographic order; 1 means i->j. The encoding cannot
  // express an invalid tournament, so no validation beyond range checks.
  // Needs n(n-1)/2 <= 64, i.e. n <= 11; sweeps (n <= 7) are the hot path.
  [[nodiscard]] static Tournament from_pair_bits(int n, std::uint64_t bits);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] VertexSet vertex_set() const { return full_set(n_); }

  [[nodiscard]] bool has_arc(int u, int v) const {
    check_pair(u, v);
    return (out_[static_cast<std::size_t>(u)] >> v) & 1u;
  }

  // Unchecked mask accessors for inner loops.
  [[nodiscard]] VertexSet out_row(int u) const { return out_[static_cast<std::size_t>(u)]; }
  [[nodiscard]] VertexSet in_row(int u) const {
    return full_set(n_) & ~out_[static_cast<std::size_t>(u)] & ~bit(u);
  }

  [[nodiscard]] int out_degree(int u) const {
    check_vertex(u);
    return popcount(out_[static_cast<std::size_t>(u)]);
  }
  [[nodiscard]] int in_degree(int u) const {
    check_vertex(u);
    return n_ - 1 - popcount(out_[static_cast<std::size_t>(u)]);
  }

  [[nodiscard]] PairProfile pair_profile(int u, int v) const;

  // Re-runs the row diagnostics; true for every constructed instance.
  [[nodiscard]] bool validate() const {
    return validate_rows(n_, std::span<const std::uint32_t>(out_.data(),
                                                            static_cast<std::size_t>(n_)))
        .ok;
  }

  // Pair bits in lexicographic (i, j) order, bit k = k-th pair; n <= 11 only.
  [[nodiscard]] std::uint64_t pair_bits() const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    if (a.n_ != b.n_) return false;
    for (int u = 0; u < a.n_; ++u) {
      if (a.out_[static_cast<std::size_t>(u)] != b.out_[static_cast<std::size_t>(u)]) return false;
    }
    return true;
  }

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range");
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("pair needs two distinct vertices");
  }

  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> out_{};
};

// A directed path as a vertex sequence. Construction checks only the
// host-independent part (>= 2 distinct vertices in range); arc validity is
// checked against a host with validate_in.
class DirectedPath {
 public:
  [[nodiscard]] static DirectedPath of(std::vector<int> vertices);

  [[nodiscard]] int order() const { return static_cast<int>(verts_.size()); }
  [[nodiscard]] int length() const { return order() - 1; }  // arc count
  [[nodiscard]] int first() const { return verts_.front(); }
  [[nodiscard]] int last() const { return verts_.back(); }
  [[nodiscard]] int at(int i) const { return verts_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<int>& vertices() const { return verts_; }
  [[nodiscard]] VertexSet vertex_mask() const;

  // True iff every consecutive pair is an arc of t (vertices must be < t.n()).
  [[nodiscard]] bool validate_in(const Tournament& t) const;

  friend bool operator==(const DirectedPath& a, const DirectedPath& b) {
    return a.verts_ == b.verts_;
  }
  friend bool operator<(const DirectedPath& a, const DirectedPath& b) {
    return a.verts_ < b.verts_;
  }

 private:
  std::vector<int> verts_;
};

// --- TRN text codec ---------------------------------------------------
// Line 1: decimal n. Line 2: n(n-1)/2 chars of {0,1}, one per pair (i, j)
// with i < j in lexicographic order, '1' meaning i->j. LF line ends;
// trailing whitespace tolerated on read.

[[nodiscard]] std::string encode_trn(const Tournament& t);
[[nodiscard]] Tournament decode_trn(const std::string& text);

// JSON mirror {"n": <int>, "pairs": "<bitstring>"} of the same encoding.
[[nodiscard]] std::string encode_json(const Tournament& t);
[[nodiscard]] Tournament decode_json(const std::string& text);

}  // namespace tourlab

#include "tourlab/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tourlab/rng.hpp"

namespace tourlab {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<bool> residue_table(int q) {
  std::vector<bool> is_residue(q, false);
  for (int x = 1; x < q; ++x) is_residue[static_cast<int>(std::int64_t{x} * x % q)] = true;
  return is_residue;
}

}  // namespace

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tournament: n must be >= 2");
  if (n > kMaxVertices) {
    throw CapacityError("random_tournament: n > " + std::to_string(kMaxVertices));
  }
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next() >> 63) {
        rows[i] |= bit(j);
      } else {
        rows[j] |= bit(i);
      }
    }
  }
  return Tournament::from_out_rows(n, rows);
}

Tournament paley_tournament(int q) {
  if (!is_prime(q) || q % 4 != 3) {
    throw std::invalid_argument("paley_tournament: q must be a prime with q = 3 (mod 4)");
  }
  const std::vector<bool> is_residue = residue_table(q);
  std::vector<std::uint32_t> rows(q, 0);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      if (i != j && is_residue[(j - i + q) % q]) rows[i] |= bit(j);
    }
  }
  return Tournament::from_out_rows(q, rows);
}

Tournament circulant_tournament(int n, const std::vector<int>& offsets) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("circulant_tournament: n must be odd, >= 3");
  std::vector<int> seen(n, 0);
  for (const int d : offsets) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("circulant_tournament: offset out of range");
    if (seen[d]++ != 0) throw std::invalid_argument("circulant_tournament: duplicate offset");
  }
  for (int d = 1; d <= (n - 1) / 2; ++d) {
    if (seen[d] + seen[n - d] != 1) {
      throw std::invalid_argument("circulant_tournament: need exactly one of {" +
                                  std::to_string(d) + ", " + std::to_string(n - d) + "}");
    }
  }
  std::vector<std::uint32_t> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (const int d : offsets) rows[i] |= bit((i + d) % n);
  }
  return Tournament::from_out_rows(n, rows);
}

Tournament t3_tournament(const T3Spec& spec) {
  if (spec.t < 1) throw std::invalid_argument("t3_tournament: t must be >= 1");
  const int q = 4 * spec.t + 3;
  if (!is_prime(q)) throw std::invalid_argument("t3_tournament: 4t+3 must be prime");
  const int n = 3 * q;
  if (n > kMaxVertices) throw CapacityError("t3_tournament: 12t+9 > " + std::to_string(kMaxVertices));
  const std::vector<bool> is_residue = residue_table(q);
  std::vector<std::uint32_t> rows(n, 0);
  for (int block = 0; block < 3; ++block) {
    const int base = block * q;
    const int next = ((block + 1) % 3) * q;
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        if (i != j && is_residue[(j - i + q) % q]) rows[base + i] |= bit(base + j);
        rows[base + i] |= bit(next + j);
      }
    }
  }
  return Tournament::from_out_rows(n, rows);
}

namespace {

// Orients the undetermined pairs so every out-degree reaches `cap`,
// backtracking over pairs ordered by most-constrained vertex.  A vertex's
// slack is how far either orientation count can still move: the search prunes
// as soon as some vertex can no longer reach (or stay within) cap.
class RegularityCompletion {
 public:
  RegularityCompletion(std::vector<std::uint32_t>& rows, int n, std::uint64_t seed)
      : rows_(rows), n_(n), cap_((n - 1) / 2), out_(n, 0), free_(n, 0) {
    for (int v = 0; v < n; ++v) out_[v] = popcount(rows[v]);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!arc_known(a, b)) {
          pairs_.push_back({a, b});
          ++free_[a];
          ++free_[b];
        }
      }
    }
    SplitMix64 rng(seed);
    prefer_.resize(pairs_.size());
    for (auto&& p : prefer_) p = static_cast<bool>(rng.next() >> 63);
    assigned_.assign(pairs_.size(), false);
  }

  [[nodiscard]] bool run() { return solve(pairs_.size()); }

 private:
  [[nodiscard]] bool arc_known(int a, int b) const {
    return ((rows_[a] >> b) & 1u) != 0 || ((rows_[b] >> a) & 1u) != 0;
  }

  // False when v provably cannot end at exactly cap out-arcs.
  [[nodiscard]] bool viable(int v) const {
    return out_[v] <= cap_ && out_[v] + free_[v] >= cap_;
  }

  // Remaining orientation freedom of v: 0 forces every incident choice.
  [[nodiscard]] int tightness(int v) const {
    return std::min(cap_ - out_[v], free_[v] - (cap_ - out_[v]));
  }

  [[nodiscard]] bool solve(std::size_t remaining) {
    if (remaining == 0) return true;
    std::size_t pick = pairs_.size();
    int best = n_;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (assigned_[i]) continue;
      const int score = std::min(tightness(pairs_[i][0]), tightness(pairs_[i][1]));
      if (score < best) {
        best = score;
        pick = i;
        if (score == 0) break;
      }
    }
    const auto [a, b] = pairs_[pick];
    assigned_[pick] = true;
    --free_[a];
    --free_[b];
    for (int attempt = 0; attempt < 2; ++attempt) {
      const bool forward = prefer_[pick] == (attempt == 0);
      const int from = forward ? a : b;
      const int to = forward ? b : a;
      rows_[from] |= bit(to);
      ++out_[from];
      if (viable(a) && viable(b) && solve(remaining - 1)) return true;
      rows_[from] &= ~bit(to);
      --out_[from];
    }
    assigned_[pick] = false;
    ++free_[a];
    ++free_[b];
    return false;
  }

  std::vector<std::uint32_t>& rows_;
  int n_;
  int cap_;
  std::vector<int> out_;
  std::vector<int> free_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<bool> prefer_;
  std::vector<bool> assigned_;
};

}  // namespace

std::optional<Tournament> t2_tournament(const T2Spec& spec, std::uint64_t seed) {
  const auto [p, n0, n1] = spec;
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("t2_tournament: p must be odd, >= 3");
  if (n0 < 0 || n1 < 0 || n1 > (p - 1) / 2 || n0 + n1 < p) {
    throw std::invalid_argument("t2_tournament: need 0 <= n1 <= (p-1)/2 and n0 + n1 >= p");
  }
  const int n = p + 2 * n0 + 2 * n1;
  if (n > kMaxVertices) throw CapacityError("t2_tournament: n > " + std::to_string(kMaxVertices));

  const int n0p = p;             // N0+ block start
  const int n1p = n0p + n0;      // N1+
  const int n0m = n1p + n1;      // N0-
  const int n1m = n0m + n0;      // N1-
  std::vector<std::uint32_t> rows(n, 0);
  for (int i = 0; i + 1 < p; ++i) rows[i] |= bit(i + 1);  // the path
  for (int v = 0; v < p; ++v) {
    for (int x = 0; x < n0; ++x) {
      rows[v] |= bit(n0p + x);       // V -> N0+
      rows[n0m + x] |= bit(v);       // N0- -> V
    }
    for (int x = 0; x < n1; ++x) {
      if (v != 0) rows[v] |= bit(n1p + x);           // V \ {v_0} -> N1+
      if (v != p - 1) rows[n1m + x] |= bit(v);       // N1- -> V \ {v_{p-1}}
    }
  }
  for (int x = 0; x < n1; ++x) {
    rows[n1p + x] |= bit(0);         // N1+ -> v_0
    rows[p - 1] |= bit(n1m + x);     // v_{p-1} -> N1-
  }

  RegularityCompletion completion(rows, n, seed);
  if (!completion.run()) return std::nullopt;
  return Tournament::from_out_rows(n, rows);
}

Tournament figure4_tournament(int k, std::uint64_t seed) {
  if (k < 3) throw std::invalid_argument("figure4_tournament: k must be >= 3");
  const int n = 2 * k + 1;
  if (n > kMaxVertices) throw CapacityError("figure4_tournament: 2k+1 > " + std::to_string(kMaxVertices));
  const int m = 2 * k - 3;  // inner tournament T'
  // role[i] = circulant vertex played by host i < m.  Seed 0 keeps the
  // standard circulant; a nonzero seed Fisher-Yates-permutes the roles to
  // exercise an alternative choice of T' (the construction's properties do
  // not depend on it).
  std::vector<int> role(m);
  std::iota(role.begin(), role.end(), 0);
  if (seed != 0) {
    SplitMix64 rng(seed);
    for (int i = m - 1; i > 0; --i) {
      std::swap(role[i], role[rng.below(static_cast<std::uint32_t>(i) + 1)]);
    }
  }
  std::vector<std::uint32_t> rows(n, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int d = (role[b] - role[a] + m) % m;
      if (d >= 1 && d <= k - 2) rows[a] |= bit(b);
    }
  }
  const int u0 = 2 * k - 3;
  const int u1 = 2 * k - 2;
  const int w0 = 2 * k - 1;
  const int w1 = 2 * k;
  const int v = 2 * k - 4;
  for (int x = 0; x < k - 2; ++x) {
    const int in_v0 = x;
    const int in_v1 = k - 2 + x;
    rows[in_v1] |= bit(u0) | bit(u1);          // V1 -> {u0, u1}
    rows[u0] |= bit(in_v0);                    // {u0, u1} -> V0
    rows[u1] |= bit(in_v0);
    rows[in_v0] |= bit(w0) | bit(w1);          // V0 -> {w0, w1}
    rows[w0] |= bit(in_v1);                    // {w0, w1} -> V1
    rows[w1] |= bit(in_v1);
  }
  rows[w1] |= bit(u0) | bit(u1);               // w1 -> {u0, u1} -> w0
  rows[u0] |= bit(u1) | bit(w0);               // u0 -> u1, u0 -> w0
  rows[u1] |= bit(v) | bit(w0);                // u1 -> v, u1 -> w0
  rows[v] |= bit(u0) | bit(w1);                // v -> u0, v -> w1
  rows[w0] |= bit(v) | bit(w1);                // w0 -> v, w0 -> w1
  return Tournament::from_out_rows(n, rows);
}

}  // namespace tourlab

#pragma once

#include <cstdint>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

// Oriented graph on up to 2048 vertices.  Adjacency is kept as packed 64-bit
// rows in both directions so a p2 probe is a word-wise AND plus popcount.
class OrientedGraph {
 public:
  static constexpr int kMaxVertices = 2048;

  explicit OrientedGraph(int n);

  [[nodiscard]] int n() const { return n_; }
  void add_arc(int u, int v);
  [[nodiscard]] bool has_arc(int u, int v) const;
  [[nodiscard]] bool is_tournament() const;
  [[nodiscard]] int out_degree(int u) const;
  [[nodiscard]] int p2(int u, int v) const;
  [[nodiscard]] int pi2() const;

 private:
  void check_pair(int u, int v) const;
  [[nodiscard]] std::size_t row(int v) const { return static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// D(n, p): each unordered pair {i, j} (i < j, lexicographic) draws one
// uniform variate r; r < p orients i->j, p <= r < 2p orients j->i, and the
// pair stays non-adjacent otherwise.  Requires p in (0, 1/2]; p = 1/2 always
// produces a tournament.
[[nodiscard]] OrientedGraph random_oriented(int n, double p, std::uint64_t seed);

// g(x) = e^{-x} / (1-x)^{1-x} on [0, 1); g(0) == 1 exactly and g is strictly
// decreasing.  Throws std::domain_error outside the domain.
[[nodiscard]] double chernoff_g(double x);

// One tail experiment: `trials` independent D(n, p) samples (sub-seed
// derive_seed(seed, trial)), each scored by whether pi2 falls below
// (p^2 - epsilon) * n.  The Chernoff-style bound compared against is
//   n (n-1) g(epsilon)^{(n-2) p^2}.
struct TailExperiment {
  int n = 0;
  double p = 0.5;
  double epsilon = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;

  // Filled by pi2_tail_experiment:
  std::uint64_t observed_failures = 0;
  double bound = 0.0;
  double threshold = 0.0;
  std::vector<int> pi2_values;

  [[nodiscard]] double observed_fraction() const {
    return trials > 0 ? static_cast<double>(observed_failures) / trials : 0.0;
  }
};

// Runs the experiment described by the config fields of `config` (result
// fields are ignored) and returns a fully populated copy.  Trials are
// distributed over `jobs` threads; the outcome is independent of `jobs`.
[[nodiscard]] TailExperiment pi2_tail_experiment(const TailExperiment& config, int jobs = 1);

}  // namespace tourlab

#include "tourlab/montecarlo.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tourlab/parallel.hpp"
#include "tourlab/rng.hpp"

namespace tourlab {

OrientedGraph::OrientedGraph(int n) {
  if (n < 1) throw std::invalid_argument("OrientedGraph: n must be positive");
  if (n > kMaxVertices) {
    throw CapacityError("OrientedGraph: n = " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
  }
  n_ = n;
  words_ = static_cast<std::size_t>((n + 63) / 64);
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
  in_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void OrientedGraph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
    throw std::invalid_argument("OrientedGraph: invalid vertex pair");
  }
}

void OrientedGraph::add_arc(int u, int v) {
  check_pair(u, v);
  if (has_arc(u, v) || has_arc(v, u)) {
    throw std::invalid_argument("OrientedGraph: pair already oriented");
  }
  out_[row(u) + static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
  in_[row(v) + static_cast<std::size_t>(u / 64)] |= std::uint64_t{1} << (u % 64);
}

bool OrientedGraph::has_arc(int u, int v) const {
  check_pair(u, v);
  return (out_[row(u) + static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u;
}

bool OrientedGraph::is_tournament() const {
  // add_arc forbids digons, so arc count C(n,2) means every pair is oriented.
  std::uint64_t arcs = 0;
  for (std::uint64_t word : out_) arcs += std::popcount(word);
  return arcs == static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
}

int OrientedGraph::out_degree(int u) const {
  check_pair(u, (u + 1) % n_);  // range-check u; n_ >= 1 so the probe vertex differs
  int total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(out_[row(u) + w]);
  return total;
}

int OrientedGraph::p2(int u, int v) const {
  check_pair(u, v);
  int total = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    total += std::popcount(out_[row(u) + w] & in_[row(v) + w]);
  }
  return total;
}

int OrientedGraph::pi2() const {
  if (n_ < 2) throw std::logic_error("OrientedGraph::pi2: need at least 2 vertices");
  int best = n_;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u == v) continue;
      best = std::min(best, p2(u, v));
      if (best == 0) return 0;
    }
  }
  return best;
}

OrientedGraph random_oriented(int n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 0.5)) {
    throw std::invalid_argument("random_oriented: p out of range (0, 1/2]");
  }
  OrientedGraph g(n);
  SplitMix64 rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = rng.u01();
      if (r < p) {
        g.add_arc(i, j);
      } else if (r < 2 * p) {
        g.add_arc(j, i);
      }
    }
  }
  return g;
}

double chernoff_g(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("chernoff_g: x outside [0, 1)");
  return std::exp(-x - (1.0 - x) * std::log1p(-x));
}

TailExperiment pi2_tail_experiment(const TailExperiment& config, int jobs) {
  if (config.n < 2) throw std::invalid_argument("pi2_tail_experiment: n must be >= 2");
  if (!(config.p > 0.0 && config.p <= 0.5)) {
    throw std::invalid_argument("pi2_tail_experiment: p out of range (0, 1/2]");
  }
  const double p2 = config.p * config.p;
  if (!(config.epsilon > 0.0 && config.epsilon < p2)) {
    throw std::invalid_argument("pi2_tail_experiment: epsilon out of range (0, p^2)");
  }
  if (config.trials < 1) throw std::invalid_argument("pi2_tail_experiment: trials must be >= 1");

  TailExperiment result = config;
  result.threshold = (p2 - config.epsilon) * config.n;
  result.bound = static_cast<double>(config.n) * (config.n - 1) *
                 std::pow(chernoff_g(config.epsilon), (config.n - 2) * p2);
  result.pi2_values.assign(static_cast<std::size_t>(config.trials), 0);
  run_chunked(static_cast<std::uint64_t>(config.trials), jobs,
              [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                for (std::uint64_t trial = begin; trial < end; ++trial) {
                  const OrientedGraph g =
                      random_oriented(config.n, config.p, derive_seed(config.seed, trial));
                  result.pi2_values[trial] = g.pi2();
                }
              });
  result.observed_failures = 0;
  for (int value : result.pi2_values) {
    if (static_cast<double>(value) < result.threshold) ++result.observed_failures;
  }
  return result;
}

}  // namespace tourlab

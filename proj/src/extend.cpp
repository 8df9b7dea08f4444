#include "tourlab/extend.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "tourlab/parallel.hpp"

namespace tourlab {

namespace {

constexpr int kMaxN = kMaxVertices;

struct BinomialTable {
  std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> c{};
  constexpr BinomialTable() {
    for (int n = 0; n <= kMaxN; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

constexpr BinomialTable kBinom;

std::uint64_t choose(int n, int k) {
  return (k < 0 || k > n) ? 0 : kBinom.c[n][k];
}

// rank-th subset of size m in colexicographic (= ascending numeric) order.
VertexSet unrank_colex(std::uint64_t rank, int m) {
  VertexSet s = 0;
  for (int i = m; i >= 1; --i) {
    int c = i - 1;
    while (choose(c + 1, i) <= rank) ++c;
    s |= bit(c);
    rank -= choose(c, i);
  }
  return s;
}

// A path of <S> from s to t fails to extend when no vertex w outside S admits
// a hamiltonian path of <S + w> from s to t.
struct FailingSubset {
  VertexSet set = 0;
  int last = 0;
  VertexSet uncovered = 0;  // starts with no extension
};

// Scans every (S, last) with |S| == m against layer m + 1; appends failures in
// ascending subset order.  Returns the number of subsets examined.
std::uint64_t check_layer(const Tournament& t, const HamiltonianPathTable& table, int m, int jobs,
                          std::vector<FailingSubset>& out) {
  const int n = t.n();
  const VertexSet all = t.vertex_set();
  const std::uint64_t layer_size = choose(n, m);
  std::vector<std::vector<FailingSubset>> found(
      std::min<std::uint64_t>(jobs < 1 ? 1 : jobs, layer_size));
  run_chunked(layer_size, jobs, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
    VertexSet s = unrank_colex(begin, m);
    for (std::uint64_t r = begin; r < end; ++r, s = next_same_popcount(s)) {
      for (VertexSet lasts = s; lasts != 0; lasts &= lasts - 1) {
        const int last = std::countr_zero(lasts);
        const VertexSet starts = table.starts(s, last);
        if (starts == 0) continue;
        VertexSet covered = 0;
        for (VertexSet outside = all & ~s; outside != 0; outside &= outside - 1) {
          covered |= table.starts(s | (outside & -outside), last);
          if ((starts & ~covered) == 0) break;
        }
        if (const VertexSet uncovered = starts & ~covered; uncovered != 0) {
          found[chunk].push_back({s, last, uncovered});
        }
      }
    }
  });
  for (const auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
  return layer_size;
}

}  // namespace

void HamiltonianPathTable::allocate(const Tournament& t) {
  n_ = t.n();
  table_.assign((std::size_t{1} << n_) * static_cast<unsigned>(n_), 0);
  for (int v = 0; v < n_; ++v) table_[std::size_t{bit(v)} * n_ + v] = bit(v);
}

void HamiltonianPathTable::fill_layer(const Tournament& t, int m, int jobs) {
  const int n = n_;
  run_chunked(choose(n, m), jobs, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    VertexSet s = unrank_colex(begin, m);
    for (std::uint64_t r = begin; r < end; ++r, s = next_same_popcount(s)) {
      const std::size_t row = std::size_t{s} * n;
      for (VertexSet lasts = s; lasts != 0; lasts &= lasts - 1) {
        const int last = std::countr_zero(lasts);
        const VertexSet rest = s ^ bit(last);
        const std::size_t rest_row = std::size_t{rest} * n;
        VertexSet acc = 0;
        for (VertexSet preds = rest & t.in_row(last); preds != 0; preds &= preds - 1) {
          acc |= table_[rest_row + std::countr_zero(preds)];
        }
        table_[row + last] = acc;
      }
    }
  });
}

HamiltonianPathTable::HamiltonianPathTable(const Tournament& t, int jobs) {
  allocate(t);
  for (int m = 2; m <= n_; ++m) fill_layer(t, m, jobs);
}

std::vector<int> HamiltonianPathTable::least_path(const Tournament& t, VertexSet s, int first,
                                                  int last) const {
  if ((starts(s, last) & bit(first)) == 0) {
    throw std::logic_error("least_path: no such hamiltonian path");
  }
  std::vector<int> seq{first};
  VertexSet rest = s ^ bit(first);
  int cur = first;
  while (rest != 0) {
    const VertexSet viable = t.out_row(cur) & starts(rest, last);
    cur = std::countr_zero(viable);  // nonempty by the table invariant
    seq.push_back(cur);
    rest ^= bit(cur);
  }
  return seq;
}

namespace {

void all_paths_rec(const Tournament& t, const HamiltonianPathTable& table, VertexSet rest, int cur,
                   int last, std::vector<int>& seq, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(seq);
    return;
  }
  for (VertexSet viable = t.out_row(cur) & table.starts(rest, last); viable != 0;
       viable &= viable - 1) {
    const int v = std::countr_zero(viable);
    seq.push_back(v);
    all_paths_rec(t, table, rest ^ bit(v), v, last, seq, out);
    seq.pop_back();
  }
}

}  // namespace

void HamiltonianPathTable::all_paths(const Tournament& t, VertexSet s, int last,
                                     VertexSet start_filter,
                                     std::vector<std::vector<int>>& out) const {
  std::vector<int> seq;
  for (VertexSet heads = starts(s, last) & start_filter; heads != 0; heads &= heads - 1) {
    const int head = std::countr_zero(heads);
    seq.assign(1, head);
    all_paths_rec(t, *this, s ^ bit(head), head, last, seq, out);
  }
}

std::optional<DirectedPath> extend_path(const Tournament& t, const DirectedPath& p) {
  if (!p.validate_in(t)) throw std::invalid_argument("extend_path: path does not lie in tournament");
  if (p.order() == t.n()) throw std::invalid_argument("extend_path: path is hamiltonian");
  std::optional<std::vector<int>> best;
  const VertexSet members = p.vertex_mask();
  for (VertexSet outside = t.vertex_set() & ~members; outside != 0; outside &= outside - 1) {
    const int w = std::countr_zero(outside);
    // Relabel V(P) + w in ascending vertex order; this keeps lexicographic
    // comparisons in the induced tournament aligned with the host labels.
    const VertexSet host = members | bit(w);
    std::array<int, kMaxN> label{};
    std::array<int, kMaxN> index{};
    int k = 0;
    for (VertexSet rest = host; rest != 0; rest &= rest - 1) {
      label[k] = std::countr_zero(rest);
      index[label[k]] = k;
      ++k;
    }
    std::vector<std::uint32_t> rows(k, 0);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (a != b && t.has_arc(label[a], label[b])) rows[a] |= bit(b);
      }
    }
    const Tournament induced = Tournament::from_out_rows(k, rows);
    const HamiltonianPathTable table(induced);
    const int first = index[p.first()];
    const int last = index[p.last()];
    if ((table.starts(full_set(k), last) & bit(first)) == 0) continue;
    std::vector<int> seq = table.least_path(induced, full_set(k), first, last);
    for (int& v : seq) v = label[v];
    if (!best || seq < *best) best = std::move(seq);
  }
  if (!best) return std::nullopt;
  return DirectedPath::of(*best);
}

ExtendabilityVerdict is_path_extendable(const Tournament& t, int k_threshold, int jobs) {
  if (k_threshold < 1) throw std::invalid_argument("is_path_extendable: k_threshold must be >= 1");
  ExtendabilityVerdict verdict;
  verdict.k_threshold = k_threshold;
  const int n = t.n();
  const int first_order = std::max(2, k_threshold + 1);  // path order = length + 1
  if (first_order > n - 1) return verdict;

  HamiltonianPathTable table;
  table.allocate(t);
  for (int m = 2; m <= first_order; ++m) table.fill_layer(t, m, jobs);
  for (int m = first_order; m <= n - 1; ++m) {
    table.fill_layer(t, m + 1, jobs);
    std::vector<FailingSubset> failures;
    verdict.subsets_checked += check_layer(t, table, m, jobs, failures);
    if (failures.empty()) continue;
    // Shortest order reached first; pick the least path over all failures.
    std::optional<std::vector<int>> least;
    for (const FailingSubset& f : failures) {
      for (VertexSet heads = f.uncovered; heads != 0; heads &= heads - 1) {
        std::vector<int> seq =
            table.least_path(t, f.set, std::countr_zero(heads), f.last);
        if (!least || seq < *least) least = std::move(seq);
      }
    }
    verdict.extendable = false;
    verdict.certificate = DirectedPath::of(*least);
    return verdict;
  }
  return verdict;
}

std::vector<DirectedPath> nonextendable_paths(const Tournament& t, std::size_t limit, int jobs) {
  std::vector<DirectedPath> result;
  const int n = t.n();
  if (n < 3 || limit == 0) return result;
  const HamiltonianPathTable table(t, jobs);
  for (int m = 2; m <= n - 1 && result.size() < limit; ++m) {
    std::vector<FailingSubset> failures;
    check_layer(t, table, m, jobs, failures);
    std::vector<std::vector<int>> batch;
    for (const FailingSubset& f : failures) {
      table.all_paths(t, f.set, f.last, f.uncovered, batch);
    }
    std::sort(batch.begin(), batch.end());
    for (auto& seq : batch) {
      if (result.size() >= limit) break;
      result.push_back(DirectedPath::of(seq));
    }
  }
  return result;
}

}  // namespace tourlab

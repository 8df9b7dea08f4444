#include "tourlab/metrics.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tourlab {

int p2(const Tournament& t, int u, int v) {
  return popcount(t.out_row(u) & t.in_row(v));
}

Pi2Result pi2_argmin(const Tournament& t) {
  const int n = t.n();
  Pi2Result best;
  best.value = n;  // p2 < n always
  for (int u = 0; u < n; ++u) {
    const VertexSet out_u = t.out_row(u);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const int count = popcount(out_u & t.in_row(v));
      if (count < best.value) {
        best = {count, u, v};
        if (count == 0) return best;  // lexicographic scan: first zero is final
      }
    }
  }
  return best;
}

int pi2(const Tournament& t) { return pi2_argmin(t).value; }

int irregularity(const Tournament& t) {
  const int n = t.n();
  int worst = 0;
  for (int v = 0; v < n; ++v) {
    const int d = 2 * t.out_degree(v) - (n - 1);  // d+ - d-
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

bool is_regular(const Tournament& t) { return irregularity(t) == 0; }

bool is_doubly_regular(const Tournament& t) {
  const int n = t.n();
  if ((n - 3) % 4 != 0 || !is_regular(t)) return false;
  const int lambda = (n - 3) / 4;
  for (int u = 0; u < n; ++u) {
    for (VertexSet rest = t.out_row(u); rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (p2(t, u, v) != lambda) return false;
    }
  }
  return true;
}

int surplus_pair(const Tournament& t, int u, int v) {
  if (u == v) throw std::invalid_argument("surplus_pair: u == v");
  return p2(t, u, v) + p2(t, v, u) - 2 * pi2(t);
}

namespace {

int surplus_sum(const Tournament& t, VertexSet w, int pi2_value,
                std::vector<SurplusReport::PairEntry>* entries) {
  int total = 0;
  VertexSet rest = w;
  for_each_bit(w, [&](int u) {
    rest &= ~bit(u);
    for_each_bit(rest, [&](int v) {
      const int s = p2(t, u, v) + p2(t, v, u) - 2 * pi2_value;
      total += s;
      if (entries != nullptr) entries->push_back({u, v, s});
    });
  });
  return total;
}

}  // namespace

int surplus_set(const Tournament& t, VertexSet w) {
  if ((w & ~t.vertex_set()) != 0) throw std::invalid_argument("surplus_set: stray vertices");
  return surplus_sum(t, w, pi2(t), nullptr);
}

SurplusReport surplus_report(const Tournament& t, VertexSet w) {
  if ((w & ~t.vertex_set()) != 0) throw std::invalid_argument("surplus_report: stray vertices");
  SurplusReport report;
  report.pi2 = pi2(t);
  report.set = w;
  report.set_surplus = surplus_sum(t, w, report.pi2, &report.pair_surplus);
  return report;
}

VertexSet intermediate_set(const Tournament& t, int u, int v) {
  if (u == v) throw std::invalid_argument("intermediate_set: u == v");
  return t.out_row(u) & t.in_row(v);
}

PathContext classify_against_path(const Tournament& t, const DirectedPath& path) {
  if (!path.validate_in(t)) throw std::invalid_argument("classify_against_path: path not in tournament");
  const int p = path.order();
  PathContext ctx;
  const VertexSet off = t.vertex_set() & ~path.vertex_mask();
  for_each_bit(off, [&](int w) {
    // Pattern bits a_i = [u_i -> w], scanned for the shape 0^(k+1) 1^(p-k-1).
    int ones = 0;       // count of 1s seen so far
    bool mixed = false;  // a 0 after a 1: inserting
    int last_zero = -1;
    for (int i = 0; i < p; ++i) {
      if (t.has_arc(path.at(i), w)) {
        ++ones;
      } else {
        if (ones > 0) {
          mixed = true;
          break;
        }
        last_zero = i;
      }
    }
    if (mixed) {
      ctx.inserting |= bit(w);
    } else if (ones == p) {
      ctx.dominated |= bit(w);
      ++ctx.n0_plus;
    } else if (ones == 0) {
      ctx.dominating |= bit(w);
      ++ctx.n0_minus;
    } else {
      const int k = last_zero;  // in [0, p-2]
      ctx.hybrid.emplace(w, k);
      if (k == p - 2) ++ctx.n1_minus;
      if (k == 0) ++ctx.n1_plus;
    }
  });
  return ctx;
}

}  // namespace tourlab

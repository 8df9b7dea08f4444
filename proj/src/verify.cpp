#include "tourlab/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tourlab/construct.hpp"
#include "tourlab/extend.hpp"
#include "tourlab/metrics.hpp"
#include "tourlab/parallel.hpp"
#include "tourlab/rng.hpp"

namespace tourlab {

namespace {

constexpr std::array<std::string_view, 13> kTheoremNames{
    "PI2_SUP", "DEG_IDENT", "P2_DIFF", "PAIR_SURPLUS", "SET_SURPLUS", "REG_SURPLUS", "I_PI",
    "THM15",   "THM16",     "THM17",   "THM18",        "LB_P",        "HYBRID",
};

}  // namespace

std::string_view theorem_name(TheoremId id) {
  return kTheoremNames[static_cast<std::size_t>(id)];
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == name) return static_cast<TheoremId>(i);
  }
  return std::nullopt;
}

namespace {

using nlohmann::json;

Witness make_witness(const Tournament& t, std::string claim, std::vector<int> vertices = {},
                     std::vector<int> path = {}) {
  return Witness{encode_trn(t), std::move(claim), std::move(vertices), std::move(path)};
}

std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  for_each_bit(s, [&](int v) { out.push_back(v); });
  return out;
}

TheoremCheckResult check_pi2_sup(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::PI2_SUP};
  const int n = t.n();
  if (n < 3) {  // the bound is negative below n = 3; the theorem presumes n >= 3
    r.vacuous = true;
    return r;
  }
  const int value = pi2(t);
  const int bound_num = (n % 2 == 0) ? n - 4 : n - 3;  // 4*pi2 <= bound_num, exact
  r.holds = 4 * value <= bound_num;
  if (o.want_details) {
    r.details = json{{"n", n}, {"pi2", value}, {"bound", bound_num / 4.0}};
  }
  if (!r.holds) {
    r.witness = make_witness(t, "pi2 = " + std::to_string(value) + " exceeds the supremum bound " +
                                    std::to_string(bound_num) + "/4");
  }
  return r;
}

TheoremCheckResult check_deg_ident(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::DEG_IDENT};
  const int n = t.n();
  int min_out = n;
  int min_in = n;
  for (int v = 0; v < n; ++v) {
    min_out = std::min(min_out, t.out_degree(v));
    min_in = std::min(min_in, t.in_degree(v));
  }
  const int irr = irregularity(t);
  r.holds = 2 * std::min(min_out, min_in) == n - 1 - irr;
  if (o.want_details) {
    r.details = json{{"min_out", min_out}, {"min_in", min_in}, {"irregularity", irr}};
  }
  if (!r.holds) {
    r.witness = make_witness(t, "min(delta+, delta-) = " +
                                    std::to_string(std::min(min_out, min_in)) +
                                    " but (n-1-i)/2 = " + std::to_string((n - 1 - irr) / 2));
  }
  return r;
}

TheoremCheckResult check_p2_diff(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::P2_DIFF};
  const int n = t.n();
  int checked = 0;
  for (int u = 0; u < n && r.holds; ++u) {
    for (int v = 0; v < n && r.holds; ++v) {
      if (u == v || !((t.out_row(u) >> v) & 1u)) continue;  // arcs u->v only
      ++checked;
      const int lhs = p2(t, u, v) - p2(t, v, u);
      const int rhs = t.out_degree(u) - t.out_degree(v) - 1;
      if (lhs != rhs) {
        r.holds = false;
        r.witness = make_witness(
            t,
            "arc " + std::to_string(u) + "->" + std::to_string(v) + ": p2 difference " +
                std::to_string(lhs) + " != degree difference " + std::to_string(rhs),
            {u, v});
      }
    }
  }
  if (o.want_details) r.details = json{{"arcs_checked", checked}};
  return r;
}

TheoremCheckResult check_pair_surplus(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::PAIR_SURPLUS};
  const int n = t.n();
  const int pi2v = pi2(t);
  int checked = 0;
  for (int a = 0; a < n && r.holds; ++a) {
    for (int b = a + 1; b < n && r.holds; ++b) {
      ++checked;
      const int s = p2(t, a, b) + p2(t, b, a) - 2 * pi2v;
      const bool arc_ab = (t.out_row(a) >> b) & 1u;
      const int tail = arc_ab ? a : b;
      const int head = arc_ab ? b : a;
      const int diff = t.out_degree(tail) - t.out_degree(head);
      // Lemma 3.1 with u the endpoint of larger out-degree: |diff - 1| if the
      // arc leaves u, |diff + 1| if it enters u.  Ties count as "leaves".
      const int bound = diff >= 0 ? std::abs(diff - 1) : std::abs(diff + 1);
      // The bound is 0 only when diff == 1, which is exactly the "in
      // particular" equality structure: s = 0 forces u -> v with degree gap 1.
      if (s < bound) {
        r.holds = false;
        r.witness = make_witness(t,
                                 "pair {" + std::to_string(a) + "," + std::to_string(b) +
                                     "}: surplus " + std::to_string(s) + " < bound " +
                                     std::to_string(bound),
                                 {a, b});
      }
    }
  }
  if (o.want_details) r.details = json{{"pairs_checked", checked}, {"pi2", pi2v}};
  return r;
}

// Shared subset walk for SET_SURPLUS / REG_SURPLUS.
template <class PerSet>
void for_each_subset(int n, int size_cap, PerSet per_set) {
  const VertexSet limit = bit(n);  // first mask past the vertex range
  for (int m = 2; m <= std::min(n, size_cap); ++m) {
    for (VertexSet w = full_set(m); w < limit; w = next_same_popcount(w)) {
      if (!per_set(w, m)) return;
    }
  }
}

int pair_p2_sum(const Tournament& t, VertexSet w) {
  int total = 0;
  VertexSet rest = w;
  for_each_bit(w, [&](int u) {
    rest &= ~bit(u);
    for_each_bit(rest, [&](int v) { total += p2(t, u, v) + p2(t, v, u); });
  });
  return total;
}

TheoremCheckResult check_set_surplus(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::SET_SURPLUS};
  const int n = t.n();
  const int pi2v = pi2(t);
  std::uint64_t sets = 0;
  for_each_subset(n, o.set_size_cap, [&](VertexSet w, int m) {
    ++sets;
    const int s = pair_p2_sum(t, w) - pi2v * m * (m - 1);
    const int bound = m * (m - 1) / 2 - (m / 2) * ((m + 1) / 2);
    if (s < bound) {
      r.holds = false;
      r.witness = make_witness(t,
                               "s(W) = " + std::to_string(s) + " below the Eq.(7) bound " +
                                   std::to_string(bound),
                               set_to_vector(w));
      return false;
    }
    if (s == bound) {
      const auto structure = surplus_equality_structure(t, w);
      if (!structure || !structure->matches()) {
        r.holds = false;
        r.witness = make_witness(
            t, "s(W) meets the Eq.(7) bound but W lacks the Lemma 3.2 structure",
            set_to_vector(w));
        return false;
      }
    }
    return true;
  });
  if (o.want_details) r.details = json{{"sets_checked", sets}, {"size_cap", o.set_size_cap}};
  return r;
}

TheoremCheckResult check_reg_surplus(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::REG_SURPLUS};
  if (!is_regular(t)) {
    r.vacuous = true;
    if (o.want_details) r.details = json{{"regular", false}};
    return r;
  }
  const int n = t.n();
  const int pi2v = pi2(t);
  std::uint64_t sets = 0;
  for_each_subset(n, o.set_size_cap, [&](VertexSet w, int m) {
    ++sets;
    const int s = pair_p2_sum(t, w) - pi2v * m * (m - 1);
    if (s < m * (m - 1) / 2) {
      r.holds = false;
      r.witness = make_witness(t,
                               "regular tournament with s(W) = " + std::to_string(s) +
                                   " < C(|W|,2) = " + std::to_string(m * (m - 1) / 2),
                               set_to_vector(w));
      return false;
    }
    return true;
  });
  if (o.want_details) {
    r.details = json{{"regular", true}, {"sets_checked", sets}, {"size_cap", o.set_size_cap}};
  }
  return r;
}

TheoremCheckResult check_i_pi(const Tournament& t, const CheckOptions& o) {
  TheoremCheckResult r{TheoremId::I_PI};
  const int n = t.n();
  const int irr = irregularity(t);
  const int pi2v = pi2(t);
  const int bound = n - 4 * pi2v - 3;
  r.holds = irr <= bound;
  if (o.want_details) {
    r.details = json{{"irregularity", irr}, {"pi2", pi2v}, {"bound", bound},
                     {"slack", bound - irr}};
  }
  if (!r.holds) {
    r.witness = make_witness(t, "i(T) = " + std::to_string(irr) + " exceeds n - 4*pi2 - 3 = " +
                                    std::to_string(bound));
  }
  return r;
}

TheoremCheckResult check_implication(TheoremId id, const Tournament& t, bool hypothesis,
                                     json hyp_details, const CheckOptions& o) {
  TheoremCheckResult r{id};
  r.vacuous = !hypothesis;
  std::optional<ExtendabilityVerdict> verdict;
  if (hypothesis || o.want_details) {  // spec: record extendability even when vacuous
    verdict = is_path_extendable(t, 1, o.jobs);
  }
  r.holds = !hypothesis || verdict->extendable;
  if (o.want_details) {
    hyp_details["hypothesis"] = hypothesis;
    hyp_details["extendable"] = verdict->extendable;
    r.details = std::move(hyp_details);
  }
  if (!r.holds) {
    r.witness = make_witness(t,
                             std::string(theorem_name(id)) +
                                 ": hypothesis holds but a non-extendable path exists",
                             {}, verdict->certificate->vertices());
  }
  return r;
}

TheoremCheckResult check_thm15(const Tournament& t, const CheckOptions& o) {
  const int n = t.n();
  const int pi2v = pi2(t);
  const bool regular = is_regular(t);
  const bool hyp = regular && n >= 9 && 12 * pi2v > n - 9;
  return check_implication(
      TheoremId::THM15, t, hyp,
      json{{"regular", regular}, {"n", n}, {"pi2", pi2v}, {"threshold", (n - 9) / 12.0}}, o);
}

TheoremCheckResult check_thm16(const Tournament& t, const CheckOptions& o) {
  const int n = t.n();
  const int pi2v = pi2(t);
  const bool hyp = 36 * pi2v > 7 * n - 10;
  return check_implication(TheoremId::THM16, t, hyp,
                           json{{"pi2", pi2v}, {"threshold", (7 * n - 10) / 36.0}}, o);
}

TheoremCheckResult check_thm17(const Tournament& t, const CheckOptions& o) {
  const int n = t.n();
  const int pi2v = pi2(t);
  const int irr = irregularity(t);
  // i(T) < 2*pi2 - (n+8)/6 checked exactly as 6i < 12*pi2 - (n+8).
  const bool hyp = n >= 9 && 12 * pi2v > n - 9 && 6 * irr < 12 * pi2v - (n + 8);
  return check_implication(TheoremId::THM17, t, hyp,
                           json{{"pi2", pi2v},
                                {"irregularity", irr},
                                {"pi2_threshold", (n - 9) / 12.0},
                                {"irregularity_threshold", 2 * pi2v - (n + 8) / 6.0}},
                           o);
}

TheoremCheckResult check_thm18(const Tournament& t, const CheckOptions& o) {
  const int n = t.n();
  const bool doubly = is_doubly_regular(t);
  const bool hyp = doubly && n >= 7;
  return check_implication(TheoremId::THM18, t, hyp,
                           json{{"doubly_regular", doubly}, {"n", n}}, o);
}

// True when some off-path vertex is a hybrid whose switch lies strictly
// inside: the Lemma 5.1 shape (needs order >= 4 to be possible).
bool has_interior_hybrid(const PathContext& ctx, int order) {
  return std::any_of(ctx.hybrid.begin(), ctx.hybrid.end(),
                     [order](const auto& kv) { return kv.second >= 1 && kv.second <= order - 3; });
}

TheoremCheckResult check_lb_p(const Tournament& t, const CheckOptions& o,
                              const std::vector<DirectedPath>* certs) {
  TheoremCheckResult r{TheoremId::LB_P};
  const int pi2v = pi2(t);
  if (pi2v < 1) {
    r.vacuous = true;
    if (o.want_details) r.details = json{{"pi2", pi2v}};
    return r;
  }
  std::vector<DirectedPath> local;
  if (certs == nullptr) {
    local = nonextendable_paths(t, SIZE_MAX, o.jobs);
    certs = &local;
  }
  const int bound = 3 * pi2v + 3;
  for (const DirectedPath& p : *certs) {  // shortest first: first hit is minimal
    if (p.order() < bound) {
      r.holds = false;
      r.witness = make_witness(t,
                               "non-extendable path of order " + std::to_string(p.order()) +
                                   " < 3*pi2 + 3 = " + std::to_string(bound),
                               {}, p.vertices());
      break;
    }
  }
  if (o.want_details) {
    r.details = json{{"pi2", pi2v}, {"certificates", certs->size()}, {"bound", bound}};
    if (!certs->empty()) r.details["min_order"] = certs->front().order();
  }
  return r;
}

TheoremCheckResult check_hybrid(const Tournament& t, const CheckOptions& o,
                                const std::vector<DirectedPath>* certs) {
  TheoremCheckResult r{TheoremId::HYBRID};
  const int irr = irregularity(t);
  std::vector<DirectedPath> local;
  if (certs == nullptr) {
    local = nonextendable_paths(t, SIZE_MAX, o.jobs);
    certs = &local;
  }
  std::uint64_t qualifying = 0;
  for (const DirectedPath& p : *certs) {
    const PathContext ctx = classify_against_path(t, p);
    if (!has_interior_hybrid(ctx, p.order())) continue;
    ++qualifying;
    const int h = static_cast<int>(ctx.hybrid.size());
    if (h > irr + 2) {
      r.holds = false;
      r.witness = make_witness(t,
                               "non-extendable path with interior hybrid has h(P) = " +
                                   std::to_string(h) + " > i(T) + 2 = " + std::to_string(irr + 2),
                               {}, p.vertices());
      break;
    }
  }
  r.vacuous = r.holds && qualifying == 0;
  if (o.want_details) {
    r.details = json{{"irregularity", irr},
                     {"certificates", certs->size()},
                     {"qualifying", qualifying}};
  }
  return r;
}

TheoremCheckResult check_impl(const Tournament& t, TheoremId id, const CheckOptions& o,
                              const std::vector<DirectedPath>* certs) {
  switch (id) {
    case TheoremId::PI2_SUP:
      return check_pi2_sup(t, o);
    case TheoremId::DEG_IDENT:
      return check_deg_ident(t, o);
    case TheoremId::P2_DIFF:
      return check_p2_diff(t, o);
    case TheoremId::PAIR_SURPLUS:
      return check_pair_surplus(t, o);
    case TheoremId::SET_SURPLUS:
      return check_set_surplus(t, o);
    case TheoremId::REG_SURPLUS:
      return check_reg_surplus(t, o);
    case TheoremId::I_PI:
      return check_i_pi(t, o);
    case TheoremId::THM15:
      return check_thm15(t, o);
    case TheoremId::THM16:
      return check_thm16(t, o);
    case TheoremId::THM17:
      return check_thm17(t, o);
    case TheoremId::THM18:
      return check_thm18(t, o);
    case TheoremId::LB_P:
      return check_lb_p(t, o, certs);
    case TheoremId::HYBRID:
      return check_hybrid(t, o, certs);
  }
  throw std::invalid_argument("check: unknown theorem id");
}

}  // namespace

TheoremCheckResult check(const Tournament& t, TheoremId id, const CheckOptions& opts) {
  return check_impl(t, id, opts, nullptr);
}

std::optional<SurplusEqualityStructure> surplus_equality_structure(const Tournament& t,
                                                                   VertexSet w) {
  const int n = t.n();
  const int m = popcount(w);
  std::map<int, VertexSet> classes;  // out-degree in T -> members of W
  for_each_bit(w, [&](int v) { classes[t.out_degree(v)] |= bit(v); });

  const auto dominates = [&](VertexSet hi, VertexSet lo) {
    bool all = true;
    for_each_bit(lo, [&](int y) { all = all && (t.in_row(y) & hi) == hi; });
    return all;
  };
  const auto sizes_split = [&](int a, int b) {
    return std::minmax(a, b) == std::minmax(m / 2, (m + 1) / 2);
  };

  SurplusEqualityStructure s;
  if (classes.size() == 2) {
    auto it = classes.begin();
    const auto [d, lower] = *it;
    const auto [d1, upper] = *std::next(it);
    if (d1 != d + 1) return std::nullopt;
    s.w0 = lower;
    s.w1 = upper;
    s.degree_base = d;
    s.dominations_hold =
        sizes_split(popcount(lower), popcount(upper)) && dominates(upper, lower);
    s.size_cap_holds = 2 * m <= n + 1;
    return s;
  }
  if (classes.size() == 3) {
    auto it = classes.begin();
    const auto [dm1, w0] = *it;
    const auto [d, w1] = *std::next(it);
    const auto [dp1, w2] = *std::next(it, 2);
    if (d != dm1 + 1 || dp1 != d + 1) return std::nullopt;
    s.w0 = w0;
    s.w1 = w1;
    s.w2 = w2;
    s.degree_base = dm1;
    s.dominations_hold = sizes_split(popcount(w0) + popcount(w2), popcount(w1)) &&
                         dominates(w2, w1) && dominates(w2, w0) && dominates(w1, w0);
    s.size_cap_holds = 3 * m <= n + 6;
    return s;
  }
  return std::nullopt;
}

bool recheck_witness(TheoremId id, const Witness& w) {
  try {
    const Tournament t = decode_trn(w.trn);
    const int n = t.n();
    const auto as_set = [&]() {
      VertexSet s = 0;
      for (int v : w.vertices) s |= bit(v);
      return s;
    };
    const auto path_violates_extension = [&]() {
      const DirectedPath p = DirectedPath::of(w.path);
      return p.validate_in(t) && p.order() < n && !extend_path(t, p).has_value();
    };
    switch (id) {
      case TheoremId::PI2_SUP:
        return n >= 3 && 4 * pi2(t) > ((n % 2 == 0) ? n - 4 : n - 3);
      case TheoremId::DEG_IDENT: {
        int min_out = n;
        int min_in = n;
        for (int v = 0; v < n; ++v) {
          min_out = std::min(min_out, t.out_degree(v));
          min_in = std::min(min_in, t.in_degree(v));
        }
        return 2 * std::min(min_out, min_in) != n - 1 - irregularity(t);
      }
      case TheoremId::P2_DIFF: {
        const int u = w.vertices.at(0);
        const int v = w.vertices.at(1);
        return t.has_arc(u, v) &&
               p2(t, u, v) - p2(t, v, u) != t.out_degree(u) - t.out_degree(v) - 1;
      }
      case TheoremId::PAIR_SURPLUS: {
        const int a = w.vertices.at(0);
        const int b = w.vertices.at(1);
        const int s = surplus_pair(t, a, b);
        const int tail = t.has_arc(a, b) ? a : b;
        const int head = tail == a ? b : a;
        const int diff = t.out_degree(tail) - t.out_degree(head);
        const int bound = diff >= 0 ? std::abs(diff - 1) : std::abs(diff + 1);
        return s < bound;
      }
      case TheoremId::SET_SURPLUS: {
        const VertexSet set = as_set();
        const int m = popcount(set);
        const int s = surplus_set(t, set);
        const int bound = m * (m - 1) / 2 - (m / 2) * ((m + 1) / 2);
        if (s < bound) return true;
        if (s > bound) return false;
        const auto structure = surplus_equality_structure(t, set);
        return !structure || !structure->matches();
      }
      case TheoremId::REG_SURPLUS: {
        const VertexSet set = as_set();
        const int m = popcount(set);
        return is_regular(t) && surplus_set(t, set) < m * (m - 1) / 2;
      }
      case TheoremId::I_PI:
        return irregularity(t) > n - 4 * pi2(t) - 3;
      case TheoremId::THM15:
        return is_regular(t) && n >= 9 && 12 * pi2(t) > n - 9 && path_violates_extension();
      case TheoremId::THM16:
        return 36 * pi2(t) > 7 * n - 10 && path_violates_extension();
      case TheoremId::THM17:
        return n >= 9 && 12 * pi2(t) > n - 9 &&
               6 * irregularity(t) < 12 * pi2(t) - (n + 8) && path_violates_extension();
      case TheoremId::THM18:
        return is_doubly_regular(t) && n >= 7 && path_violates_extension();
      case TheoremId::LB_P: {
        const DirectedPath p = DirectedPath::of(w.path);
        return pi2(t) >= 1 && p.order() < 3 * pi2(t) + 3 && path_violates_extension();
      }
      case TheoremId::HYBRID: {
        const DirectedPath p = DirectedPath::of(w.path);
        if (!path_violates_extension()) return false;
        const PathContext ctx = classify_against_path(t, p);
        return has_interior_hybrid(ctx, p.order()) &&
               static_cast<int>(ctx.hybrid.size()) > irregularity(t) + 2;
      }
    }
    return false;
  } catch (const std::exception&) {
    return false;  // malformed witness cannot demonstrate anything
  }
}

namespace {

// Shared chunked scan for the exhaustive and sampled sweeps: `make(index)`
// materializes the index-th tournament, and per-chunk tallies are merged in
// chunk order so the result is identical for every jobs value (the first
// recorded witness is the one with the lowest index).
template <class Make>
SweepResult sweep_indexed(int n, std::uint64_t count, const std::vector<TheoremId>& ids,
                          const SweepOptions& opts, Make make) {
  const bool want_certs =
      std::any_of(ids.begin(), ids.end(),
                  [](TheoremId id) { return id == TheoremId::LB_P || id == TheoremId::HYBRID; });

  struct ChunkState {
    std::uint64_t examined = 0;
    std::uint64_t filtered_out = 0;
    std::vector<SweepResult::PerTheorem> per;
  };
  const int jobs = opts.jobs < 1 ? 1 : opts.jobs;
  std::vector<ChunkState> chunks(
      static_cast<std::size_t>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1))));
  const CheckOptions check_opts{.want_details = false, .set_size_cap = 6, .jobs = 1};

  run_chunked(count, jobs, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
    ChunkState& state = chunks[chunk];
    state.per.resize(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) state.per[k].theorem_id = ids[k];
    for (std::uint64_t index = begin; index < end; ++index) {
      const Tournament t = make(index);
      if (opts.min_pi2 > 0 && pi2(t) < opts.min_pi2) {
        ++state.filtered_out;
        continue;
      }
      ++state.examined;
      std::vector<DirectedPath> certs;
      if (want_certs) certs = nonextendable_paths(t, SIZE_MAX, 1);
      for (std::size_t k = 0; k < ids.size(); ++k) {
        const TheoremCheckResult res =
            check_impl(t, ids[k], check_opts, want_certs ? &certs : nullptr);
        if (res.vacuous) ++state.per[k].vacuous;
        if (!res.holds) {
          if (state.per[k].failures == 0) state.per[k].first_witness = res.witness;
          ++state.per[k].failures;
        }
      }
    }
  });

  SweepResult result;
  result.n = n;
  result.per_theorem.resize(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) result.per_theorem[k].theorem_id = ids[k];
  for (const ChunkState& state : chunks) {
    result.examined += state.examined;
    result.filtered_out += state.filtered_out;
    for (std::size_t k = 0; k < state.per.size(); ++k) {
      auto& agg = result.per_theorem[k];
      agg.failures += state.per[k].failures;
      agg.vacuous += state.per[k].vacuous;
      if (!agg.first_witness && state.per[k].first_witness) {
        agg.first_witness = state.per[k].first_witness;
      }
    }
  }
  return result;
}

}  // namespace

SweepResult sweep_exhaustive(int n, const std::vector<TheoremId>& ids, const SweepOptions& opts) {
  if (n < 3) throw std::invalid_argument("sweep_exhaustive: n must be >= 3");
  if (n > 7) throw CapacityError("sweep_exhaustive: n > 7 (2^{n(n-1)/2} is impractical; sample)");
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  return sweep_indexed(n, total, ids, opts,
                       [n](std::uint64_t code) { return Tournament::from_pair_bits(n, code); });
}

SweepResult sweep_samples(int n, const std::vector<TheoremId>& ids, std::uint64_t samples,
                          std::uint64_t seed, const SweepOptions& opts) {
  if (n < 3) throw std::invalid_argument("sweep_samples: n must be >= 3");
  if (n > kMaxVertices) throw CapacityError("sweep_samples: n exceeds capacity");
  return sweep_indexed(n, samples, ids, opts, [n, seed](std::uint64_t index) {
    return random_tournament(n, derive_seed(seed, index));
  });
}

namespace {

// Depth-first orientation of the pairs not fixed by the row-0 anchor; every
// isomorphism class of regular tournaments has a labeling with
// N+(0) = {1..(n-1)/2}, so anchoring row 0 loses no class.
class RegularEnumerator {
 public:
  RegularEnumerator(int n, std::set<std::string>& sink) : n_(n), d_((n - 1) / 2), sink_(sink) {
    rows_.assign(n_, 0);
    out_.assign(n_, 0);
    free_.assign(n_, 0);
    rows_[0] = full_set(d_ + 1) & ~bit(0);  // 0 -> {1..d}
    out_[0] = d_;
    for (int v = 1; v <= d_; ++v) out_[v] = 0;
    for (int v = d_ + 1; v < n_; ++v) rows_[v] |= bit(0), out_[v] = 1;
    for (int a = 1; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        pairs_.push_back({a, b});
        ++free_[a];
        ++free_[b];
      }
    }
  }

  void run() { descend(0); }

 private:
  [[nodiscard]] bool viable(int v) const {
    return out_[v] <= d_ && out_[v] + free_[v] >= d_;
  }

  void descend(std::size_t idx) {
    if (idx == pairs_.size()) {
      const Tournament t = Tournament::from_out_rows(n_, rows_);
      sink_.insert(encode_trn(canonical_form(t)));
      return;
    }
    const auto [a, b] = pairs_[idx];
    --free_[a];
    --free_[b];
    for (int dir = 0; dir < 2; ++dir) {
      const int from = dir == 0 ? a : b;
      const int to = dir == 0 ? b : a;
      rows_[from] |= bit(to);
      ++out_[from];
      if (viable(a) && viable(b)) descend(idx + 1);
      rows_[from] &= ~bit(to);
      --out_[from];
    }
    ++free_[a];
    ++free_[b];
  }

  int n_;
  int d_;
  std::set<std::string>& sink_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> out_;
  std::vector<int> free_;
  std::vector<std::array<int, 2>> pairs_;
};

}  // namespace

Tournament canonical_form(const Tournament& t) {
  const int n = t.n();
  const int pair_count = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cand(static_cast<std::size_t>(pair_count), '0');
  do {
    // cand[k] = orientation of the k-th target pair (i, j): arc perm[i] -> perm[j]?
    bool smaller = best.empty();
    bool alive = true;
    int k = 0;
    for (int i = 0; i < n && alive; ++i) {
      for (int j = i + 1; j < n && alive; ++j, ++k) {
        const char c = ((t.out_row(perm[i]) >> perm[j]) & 1u) ? '1' : '0';
        cand[static_cast<std::size_t>(k)] = c;
        if (!smaller) {
          if (c > best[static_cast<std::size_t>(k)]) alive = false;
          if (c < best[static_cast<std::size_t>(k)]) smaller = true;
        }
      }
    }
    if (alive && smaller) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return decode_trn(std::to_string(n) + "\n" + best + "\n");
}

std::vector<Tournament> enumerate_regular(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("enumerate_regular: n must be odd, >= 3");
  if (n > 9) throw CapacityError("enumerate_regular: n > 9 (n! dedup is impractical)");
  std::set<std::string> canonicals;
  RegularEnumerator(n, canonicals).run();
  std::vector<Tournament> classes;
  classes.reserve(canonicals.size());
  for (const std::string& trn : canonicals) classes.push_back(decode_trn(trn));
  return classes;
}

Tournament rediscover_t0() {
  std::vector<Tournament> failing;
  for (const Tournament& t : enumerate_regular(7)) {
    if (!is_path_extendable(t, 2, 1).extendable) failing.push_back(t);
  }
  if (failing.size() != 1) {
    throw std::logic_error("rediscover_t0: expected exactly 1 failing class, found " +
                           std::to_string(failing.size()));
  }
  return failing.front();
}

}  // namespace tourlab

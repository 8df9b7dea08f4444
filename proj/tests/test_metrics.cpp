#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tourlab/construct.hpp"
#include "tourlab/metrics.hpp"
#include "tourlab/rng.hpp"
#include "tourlab/tournament.hpp"

using namespace tourlab;

namespace {

Tournament three_cycle() { return Tournament::from_pair_bits(3, 0b101); }
Tournament transitive4() { return Tournament::from_pair_bits(4, 0b111111); }

// Reference p2 straight from the definition, independent of the bitmask AND.
int p2_reference(const Tournament& t, int u, int v) {
  int count = 0;
  for (int w = 0; w < t.n(); ++w) {
    if (w != u && w != v && t.has_arc(u, w) && t.has_arc(w, v)) ++count;
  }
  return count;
}

int min_out_degree(const Tournament& t) {
  int d = t.n();
  for (int v = 0; v < t.n(); ++v) d = std::min(d, t.out_degree(v));
  return d;
}

int min_in_degree(const Tournament& t) {
  int d = t.n();
  for (int v = 0; v < t.n(); ++v) d = std::min(d, t.in_degree(v));
  return d;
}

}  // namespace

TEST_CASE("p2 on hand-checked instances") {
  const Tournament c3 = three_cycle();
  CHECK(p2(c3, 0, 1) == 0);
  CHECK(p2(c3, 1, 0) == 1);  // 1 -> 2 -> 0

  const Tournament p7 = paley_tournament(7);
  for (int u = 0; u < 7; ++u) {
    for (int v = 0; v < 7; ++v) {
      if (u == v) continue;
      CHECK(p2(p7, u, v) == p2_reference(p7, u, v));
      // Doubly regular with lambda = 1: p2 is 1 along an arc, 2 against it.
      CHECK(p2(p7, u, v) == (p7.has_arc(u, v) ? 1 : 2));
    }
  }
}

TEST_CASE("p2 agrees with the definitional count on random tournaments") {
  for (int n : {3, 8, 16, 24}) {
    const Tournament t = random_tournament(n, 1000 + static_cast<std::uint64_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) CHECK(p2(t, u, v) == p2_reference(t, u, v));
      }
    }
  }
}

TEST_CASE("pi2 and its argmin") {
  const Pi2Result c3 = pi2_argmin(three_cycle());
  CHECK(c3.value == 0);
  CHECK(c3.u == 0);
  CHECK(c3.v == 1);

  const Pi2Result p7 = pi2_argmin(paley_tournament(7));
  CHECK(p7.value == 1);
  CHECK(p7.u == 0);
  CHECK(p7.v == 1);
  CHECK(pi2(paley_tournament(7)) == 1);
  CHECK(pi2(transitive4()) == 0);

  // The argmin really is the minimum and the lexicographically first pair.
  const Tournament t = random_tournament(12, 77);
  const Pi2Result r = pi2_argmin(t);
  bool before_argmin = true;
  for (int u = 0; u < t.n(); ++u) {
    for (int v = 0; v < t.n(); ++v) {
      if (u == v) continue;
      CHECK(p2(t, u, v) >= r.value);
      if (u == r.u && v == r.v) before_argmin = false;
      if (before_argmin) CHECK(p2(t, u, v) > r.value);
    }
  }
}

TEST_CASE("irregularity and regularity flags") {
  CHECK(irregularity(three_cycle()) == 0);
  CHECK(irregularity(transitive4()) == 3);
  CHECK(irregularity(paley_tournament(7)) == 0);

  CHECK(is_regular(three_cycle()));
  CHECK_FALSE(is_regular(transitive4()));
  CHECK(is_regular(circulant_tournament(5, {1, 2})));

  // lambda = 0 holds for the 3-cycle, so it is (degenerately) doubly regular;
  // the 5-cycle rotational tournament is regular but not doubly regular.
  CHECK(is_doubly_regular(three_cycle()));
  CHECK(is_doubly_regular(paley_tournament(7)));
  CHECK_FALSE(is_doubly_regular(circulant_tournament(5, {1, 2})));
  CHECK_FALSE(is_doubly_regular(transitive4()));
}

TEST_CASE("degree identity: 2*min(delta+, delta-) == n - 1 - i") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 14);
    const Tournament t = random_tournament(n, seed);
    const int lhs = 2 * std::min(min_out_degree(t), min_in_degree(t));
    CHECK(lhs == n - 1 - irregularity(t));
  }
}

TEST_CASE("arc difference identity: p2(u,v) - p2(v,u) == d+(u) - d+(v) - 1") {
  SUBCASE("exhaustive over all labeled tournaments on 4 vertices") {
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
      const Tournament t = Tournament::from_pair_bits(4, bits);
      for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) {
          if (u == v || !t.has_arc(u, v)) continue;
          CHECK(p2(t, u, v) - p2(t, v, u) == t.out_degree(u) - t.out_degree(v) - 1);
        }
      }
    }
  }
  SUBCASE("random larger instances") {
    for (int n : {9, 17, 24}) {
      const Tournament t = random_tournament(n, static_cast<std::uint64_t>(n) * 31);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v || !t.has_arc(u, v)) continue;
          CHECK(p2(t, u, v) - p2(t, v, u) == t.out_degree(u) - t.out_degree(v) - 1);
        }
      }
    }
  }
}

TEST_CASE("surplus of pairs and sets") {
  const Tournament p7 = paley_tournament(7);
  // Every pair of Paley-7 contributes p2(u,v) + p2(v,u) - 2*pi2 = 3 - 2 = 1.
  for (int u = 0; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) CHECK(surplus_pair(p7, u, v) == 1);
  }
  CHECK(surplus_set(p7, 0b1111) == 6);
  CHECK(surplus_pair(p7, 0, 1) == surplus_pair(p7, 1, 0));

  const SurplusReport rep = surplus_report(p7, 0b1111);
  CHECK(rep.pi2 == 1);
  CHECK(rep.set == 0b1111u);
  CHECK(rep.set_surplus == 6);
  REQUIRE(rep.pair_surplus.size() == 6);
  CHECK(rep.pair_surplus.front().u == 0);
  CHECK(rep.pair_surplus.front().v == 1);
  CHECK(rep.pair_surplus.back().u == 2);
  CHECK(rep.pair_surplus.back().v == 3);
  for (const auto& entry : rep.pair_surplus) CHECK(entry.surplus == 1);

  // Transitive: pi2 = 0 and the extreme pair {0, 3} has surplus 2.
  const Tournament t4 = transitive4();
  CHECK(surplus_pair(t4, 0, 1) == 0);
  CHECK(surplus_pair(t4, 0, 3) == 2);
  CHECK(surplus_set(t4, 0b1111) == surplus_pair(t4, 0, 1) + surplus_pair(t4, 0, 2) +
                                       surplus_pair(t4, 0, 3) + surplus_pair(t4, 1, 2) +
                                       surplus_pair(t4, 1, 3) + surplus_pair(t4, 2, 3));
}

TEST_CASE("intermediate_set lists the 2-path midpoints") {
  const Tournament t4 = transitive4();
  CHECK(intermediate_set(t4, 0, 3) == (bit(1) | bit(2)));
  CHECK(intermediate_set(t4, 1, 2) == 0u);
  CHECK(intermediate_set(three_cycle(), 1, 0) == bit(2));
}

TEST_CASE("classify_against_path sorts off-path vertices into the four classes") {
  SUBCASE("order-2 path in the 3-cycle: lone hybrid counted on both sides") {
    const PathContext ctx = classify_against_path(three_cycle(), DirectedPath::of({0, 1}));
    CHECK(ctx.dominating == 0u);
    CHECK(ctx.dominated == 0u);
    CHECK(ctx.inserting == 0u);
    REQUIRE(ctx.hybrid.size() == 1);
    CHECK(ctx.hybrid.at(2) == 0);
    CHECK(ctx.n0_minus == 0);
    CHECK(ctx.n1_minus == 1);
    CHECK(ctx.n1_plus == 1);
    CHECK(ctx.n0_plus == 0);
  }
  SUBCASE("transitive instances") {
    const Tournament t4 = transitive4();
    const PathContext mid = classify_against_path(t4, DirectedPath::of({1, 2}));
    CHECK(mid.dominating == bit(0));
    CHECK(mid.dominated == bit(3));
    CHECK(mid.inserting == 0u);
    CHECK(mid.hybrid.empty());

    const PathContext ends = classify_against_path(t4, DirectedPath::of({0, 3}));
    CHECK(ends.inserting == (bit(1) | bit(2)));
  }
  SUBCASE("interior hybrid switch") {
    // Arcs 0->1, 0->2, 3->0, 1->2, 3->1, 2->3: against path 0,1,2 the vertex 3
    // has arc pattern 0 0 1, a hybrid with switch k = 1 = p - 2.
    const Tournament t = Tournament::from_pair_bits(4, 0b101011);
    const PathContext ctx = classify_against_path(t, DirectedPath::of({0, 1, 2}));
    REQUIRE(ctx.hybrid.size() == 1);
    CHECK(ctx.hybrid.at(3) == 1);
    CHECK(ctx.n1_minus == 1);
    CHECK(ctx.n1_plus == 0);
  }
  SUBCASE("order-3 path in Paley-7") {
    const PathContext ctx = classify_against_path(paley_tournament(7), DirectedPath::of({0, 1, 3}));
    CHECK(ctx.dominating == bit(6));
    CHECK(ctx.dominated == 0u);
    CHECK(ctx.inserting == (bit(2) | bit(4)));
    REQUIRE(ctx.hybrid.size() == 1);
    CHECK(ctx.hybrid.at(5) == 0);
    CHECK(ctx.n0_minus == 1);
    CHECK(ctx.n1_minus == 0);
    CHECK(ctx.n1_plus == 1);
    CHECK(ctx.n0_plus == 0);
  }
}

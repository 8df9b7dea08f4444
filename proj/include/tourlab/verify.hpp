#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

// One tag per executable statement.  PI2_SUP (Thm 1.4), DEG_IDENT (Eq. 1),
// P2_DIFF (Eqs. 2/3), PAIR_SURPLUS (Lemma 3.1), SET_SURPLUS (Lemma 3.2),
// REG_SURPLUS (Lemma 3.3), I_PI (Lemma 1.9), THM15..THM18 (Thms 1.5-1.8),
// LB_P (Thm 5.2), HYBRID (Lemma 5.1).
enum class TheoremId {
  PI2_SUP,
  DEG_IDENT,
  P2_DIFF,
  PAIR_SURPLUS,
  SET_SURPLUS,
  REG_SURPLUS,
  I_PI,
  THM15,
  THM16,
  THM17,
  THM18,
  LB_P,
  HYBRID,
};

inline constexpr std::array<TheoremId, 13> kAllTheorems{
    TheoremId::PI2_SUP,  TheoremId::DEG_IDENT,    TheoremId::P2_DIFF, TheoremId::PAIR_SURPLUS,
    TheoremId::SET_SURPLUS, TheoremId::REG_SURPLUS, TheoremId::I_PI,    TheoremId::THM15,
    TheoremId::THM16,    TheoremId::THM17,        TheoremId::THM18,   TheoremId::LB_P,
    TheoremId::HYBRID,
};

[[nodiscard]] std::string_view theorem_name(TheoremId id);
[[nodiscard]] std::optional<TheoremId> theorem_from_name(std::string_view name);

// A self-contained counterexample: enough to re-run the violated claim
// without the original check's context.
struct Witness {
  std::string trn;            // host tournament, TRN encoding
  std::string claim;          // the violated statement, instantiated
  std::vector<int> vertices;  // offending pair or set, if any
  std::vector<int> path;      // offending path, if any
};

struct TheoremCheckResult {
  TheoremId theorem_id{};
  bool holds = true;
  bool vacuous = false;  // implication with a false hypothesis (or no instance)
  std::optional<Witness> witness;
  nlohmann::json details;  // hypothesis values and numeric slacks
};

struct CheckOptions {
  bool want_details = true;  // sweeps switch this off to keep checks allocation-free
  int set_size_cap = 6;      // |W| limit for SET_SURPLUS / REG_SURPLUS enumeration
  int jobs = 1;
};

[[nodiscard]] TheoremCheckResult check(const Tournament& t, TheoremId id,
                                       const CheckOptions& opts = {});

// True iff the witness still demonstrates a violation, re-derived from the
// serialized tournament alone.
[[nodiscard]] bool recheck_witness(TheoremId id, const Witness& w);

// Structure of Lemma 3.2 when s(W) meets the Eq. (7) bound: either two
// consecutive degree classes (w2 empty) or three, with higher classes
// dominating lower ones.
struct SurplusEqualityStructure {
  VertexSet w0 = 0;
  VertexSet w1 = 0;
  VertexSet w2 = 0;
  int degree_base = 0;  // out-degree of the W0 class
  bool dominations_hold = false;
  bool size_cap_holds = false;
  [[nodiscard]] bool matches() const { return dominations_hold && size_cap_holds; }
};

// Match W against case (i) (two classes d, d+1) or case (ii) (three classes
// d-1, d, d+1); nullopt when the degree classes fit neither shape.
[[nodiscard]] std::optional<SurplusEqualityStructure> surplus_equality_structure(
    const Tournament& t, VertexSet w);

struct SweepOptions {
  int min_pi2 = 0;  // skip tournaments with pi2 below this
  int jobs = 1;
};

struct SweepResult {
  int n = 0;
  std::uint64_t examined = 0;      // tournaments checked
  std::uint64_t filtered_out = 0;  // skipped by min_pi2
  struct PerTheorem {
    TheoremId theorem_id{};
    std::uint64_t failures = 0;
    std::uint64_t vacuous = 0;
    std::optional<Witness> first_witness;
  };
  std::vector<PerTheorem> per_theorem;
};

// Checks every labeled tournament on n vertices (2^{n(n-1)/2} of them)
// against every listed id.  Capacity error for n > 7.
[[nodiscard]] SweepResult sweep_exhaustive(int n, const std::vector<TheoremId>& ids,
                                           const SweepOptions& opts = {});

// Same reporting over `samples` random tournaments on n vertices; sample k
// is drawn with sub-seed derive_seed(seed, k), so the outcome is identical
// for every opts.jobs value.
[[nodiscard]] SweepResult sweep_samples(int n, const std::vector<TheoremId>& ids,
                                        std::uint64_t samples, std::uint64_t seed,
                                        const SweepOptions& opts = {});

// All regular tournaments on n (odd, 3..9) vertices up to isomorphism:
// backtracking on out-degrees, then brute-force permutation dedup.  Returns
// canonical representatives sorted by their TRN encoding.
[[nodiscard]] std::vector<Tournament> enumerate_regular(int n);

// The unique regular 7-vertex class failing {2+}-path extendability.
// Throws std::logic_error if the count is not exactly 1.
[[nodiscard]] Tournament rediscover_t0();

// Lexicographically minimal pair bitstring over all vertex relabelings
// (n! of them; deliberate brute force, practical to n = 9).
[[nodiscard]] Tournament canonical_form(const Tournament& t);

}  // namespace tourlab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tourlab/montecarlo.hpp"
#include "tourlab/tournament.hpp"
#include "tourlab/verify.hpp"

namespace tourlab {

// Report envelope shared by the CLI and the test harnesses.  Serialization
// sorts keys (nlohmann objects are ordered maps) and appends one newline, so
// a report built from the same inputs is byte-identical no matter how the
// underlying work was parallelized.  `config` must therefore never mention
// worker counts; `seed` is null for deterministic commands.
[[nodiscard]] nlohmann::json make_report(std::string_view command, nlohmann::json config,
                                         std::optional<std::uint64_t> seed,
                                         nlohmann::json result);
[[nodiscard]] std::string serialize_report(const nlohmann::json& report);

// Result payloads.
[[nodiscard]] nlohmann::json analyze_result(const Tournament& t);
[[nodiscard]] nlohmann::json extend_result(const Tournament& t, int k_threshold, int jobs);
[[nodiscard]] nlohmann::json witness_to_json(const std::optional<Witness>& w);
[[nodiscard]] nlohmann::json check_to_json(const TheoremCheckResult& r);
[[nodiscard]] nlohmann::json checks_result(const Tournament& t, const std::vector<TheoremId>& ids,
                                           const CheckOptions& opts);
[[nodiscard]] nlohmann::json sweep_to_json(const SweepResult& r);
[[nodiscard]] nlohmann::json mc_result(const TailExperiment& e);
[[nodiscard]] nlohmann::json enumerate_result(const std::vector<Tournament>& classes, int jobs);

// Per-trial CSV for the tail experiment: header plus one row per trial.
[[nodiscard]] std::string mc_csv(const TailExperiment& e);

}  // namespace tourlab

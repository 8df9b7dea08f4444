#include "tourlab/report.hpp"

#include "tourlab/extend.hpp"
#include "tourlab/metrics.hpp"

namespace tourlab {

using nlohmann::json;

json make_report(std::string_view command, json config, std::optional<std::uint64_t> seed,
                 json result) {
  return json{{"version", kVersion},
              {"command", command},
              {"config", std::move(config)},
              {"seed", seed ? json(*seed) : json(nullptr)},
              {"result", std::move(result)}};
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

json analyze_result(const Tournament& t) {
  const int n = t.n();
  const Pi2Result p = pi2_argmin(t);
  const int irr = irregularity(t);
  const int bound_num = (n % 2 == 0) ? n - 4 : n - 3;
  return json{{"n", n},
              {"i", irr},
              {"pi2", p.value},
              {"pi2_argmin_pair", json::array({p.u, p.v})},
              {"supremum_bound", bound_num / 4},
              {"lemma19_slack", (n - 4 * p.value - 3) - irr}};
}

json extend_result(const Tournament& t, int k_threshold, int jobs) {
  const ExtendabilityVerdict v = is_path_extendable(t, k_threshold, jobs);
  json cert = nullptr;
  if (v.certificate) cert = v.certificate->vertices();
  return json{{"extendable", v.extendable},
              {"k", v.k_threshold},
              {"certificate", std::move(cert)},
              {"subsets_checked", v.subsets_checked}};
}

json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"trn", w->trn}, {"claim", w->claim}, {"vertices", w->vertices}, {"path", w->path}};
}

json check_to_json(const TheoremCheckResult& r) {
  return json{{"theorem", theorem_name(r.theorem_id)},
              {"holds", r.holds},
              {"vacuous", r.vacuous},
              {"details", r.details},
              {"witness", witness_to_json(r.witness)}};
}

json checks_result(const Tournament& t, const std::vector<TheoremId>& ids,
                   const CheckOptions& opts) {
  json checks = json::object();
  bool all_hold = true;
  for (TheoremId id : ids) {
    const TheoremCheckResult r = check(t, id, opts);
    all_hold = all_hold && r.holds;
    checks[std::string(theorem_name(id))] = check_to_json(r);
  }
  return json{{"n", t.n()}, {"all_hold", all_hold}, {"checks", std::move(checks)}};
}

json sweep_to_json(const SweepResult& r) {
  json per = json::object();
  bool all_hold = true;
  for (const auto& entry : r.per_theorem) {
    all_hold = all_hold && entry.failures == 0;
    per[std::string(theorem_name(entry.theorem_id))] =
        json{{"failures", entry.failures},
             {"vacuous", entry.vacuous},
             {"first_witness", witness_to_json(entry.first_witness)}};
  }
  return json{{"n", r.n},
              {"examined", r.examined},
              {"filtered_out", r.filtered_out},
              {"all_hold", all_hold},
              {"per_theorem", std::move(per)}};
}

json mc_result(const TailExperiment& e) {
  return json{{"observed_failures", e.observed_failures},
              {"observed_fraction", e.observed_fraction()},
              {"bound", e.bound},
              {"threshold", e.threshold},
              {"vacuous", e.bound >= 1.0}};
}

json enumerate_result(const std::vector<Tournament>& classes, int jobs) {
  json rows = json::array();
  for (const Tournament& t : classes) {
    rows.push_back(json{{"trn", encode_trn(t)},
                        {"pi2", pi2(t)},
                        {"extendable_k2", is_path_extendable(t, 2, jobs).extendable}});
  }
  return json{{"count", classes.size()}, {"classes", std::move(rows)}};
}

std::string mc_csv(const TailExperiment& e) {
  std::string out = "trial,pi2,threshold,below_threshold\n";
  const std::string threshold = json(e.threshold).dump();
  for (std::size_t i = 0; i < e.pi2_values.size(); ++i) {
    const bool below = static_cast<double>(e.pi2_values[i]) < e.threshold;
    out += std::to_string(i) + "," + std::to_string(e.pi2_values[i]) + "," + threshold + "," +
           (below ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace tourlab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tourlab/construct.hpp"
#include "tourlab/report.hpp"
#include "tourlab/tournament.hpp"
#include "tourlab/verify.hpp"

using namespace tourlab;
using nlohmann::json;

namespace {

std::vector<TheoremId> all_ids() {
  return std::vector<TheoremId>(kAllTheorems.begin(), kAllTheorems.end());
}

}  // namespace

TEST_CASE("report envelope carries version, command, config, seed, result") {
  const json rep = make_report("analyze", json{{"input", "x.trn"}}, std::nullopt,
                               json{{"value", 3}});
  CHECK(rep.at("version") == "0.1.0");
  CHECK(rep.at("command") == "analyze");
  CHECK(rep.at("config").at("input") == "x.trn");
  CHECK(rep.at("seed").is_null());
  CHECK(rep.at("result").at("value") == 3);

  const json seeded = make_report("mc", json::object(), 99, json::object());
  CHECK(seeded.at("seed") == 99);
}

TEST_CASE("serialize_report is a stable golden format") {
  const json rep = make_report("analyze", json{{"n", 3}}, std::nullopt, json{{"pi2", 0}});
  CHECK(serialize_report(rep) ==
        "{\n"
        "  \"command\": \"analyze\",\n"
        "  \"config\": {\n"
        "    \"n\": 3\n"
        "  },\n"
        "  \"result\": {\n"
        "    \"pi2\": 0\n"
        "  },\n"
        "  \"seed\": null,\n"
        "  \"version\": \"0.1.0\"\n"
        "}\n");
}

TEST_CASE("analyze payload for Paley-7") {
  const json r = analyze_result(paley_tournament(7));
  CHECK(r.at("n") == 7);
  CHECK(r.at("i") == 0);
  CHECK(r.at("pi2") == 1);
  CHECK(r.at("pi2_argmin_pair") == json::array({0, 1}));
  CHECK(r.at("supremum_bound") == 1);
  CHECK(r.at("lemma19_slack") == 0);

  const json t4 = analyze_result(Tournament::from_pair_bits(4, 0b111111));
  CHECK(t4.at("i") == 3);
  CHECK(t4.at("pi2") == 0);
  CHECK(t4.at("supremum_bound") == 0);
  CHECK(t4.at("lemma19_slack") == -2);
}

TEST_CASE("extend payload reports certificates or their absence") {
  const json good = extend_result(paley_tournament(7), 1, 1);
  CHECK(good.at("extendable") == true);
  CHECK(good.at("k") == 1);
  CHECK(good.at("certificate").is_null());
  CHECK(good.at("subsets_checked") == 119);

  const json bad = extend_result(Tournament::from_pair_bits(3, 0b101), 1, 1);
  CHECK(bad.at("extendable") == false);
  CHECK(bad.at("certificate") == json::array({0, 1}));
}

TEST_CASE("checks payload flags failures with witnesses") {
  const Tournament t4 = Tournament::from_pair_bits(4, 0b111111);
  const json r = checks_result(t4, {TheoremId::PI2_SUP, TheoremId::I_PI}, {});
  CHECK(r.at("n") == 4);
  CHECK(r.at("all_hold") == false);
  CHECK(r.at("checks").at("PI2_SUP").at("holds") == true);
  CHECK(r.at("checks").at("I_PI").at("holds") == false);
  CHECK(r.at("checks").at("I_PI").at("witness").at("trn") == "4\n111111\n");
  CHECK(r.at("checks").at("I_PI").at("witness").at("claim") ==
        "i(T) = 3 exceeds n - 4*pi2 - 3 = 1");
}

TEST_CASE("sweep payload carries the frozen counts") {
  const json r = sweep_to_json(sweep_exhaustive(4, all_ids(), {}));
  CHECK(r.at("n") == 4);
  CHECK(r.at("examined") == 64);
  CHECK(r.at("filtered_out") == 0);
  CHECK(r.at("all_hold") == false);
  CHECK(r.at("per_theorem").at("I_PI").at("failures") == 40);
  CHECK(r.at("per_theorem").at("PI2_SUP").at("failures") == 0);
  CHECK(r.at("per_theorem").at("REG_SURPLUS").at("vacuous") == 64);
  CHECK_FALSE(r.at("per_theorem").at("I_PI").at("first_witness").is_null());
}

TEST_CASE("mc payload and csv") {
  TailExperiment e;
  e.n = 60;
  e.epsilon = 1.0 / 18.0;
  e.trials = 3;
  e.seed = 7;
  const TailExperiment r = pi2_tail_experiment(e, 1);
  const json m = mc_result(r);
  CHECK(m.at("observed_failures") == 3);
  CHECK(m.at("observed_fraction") == 1.0);
  CHECK(m.at("vacuous") == true);
  CHECK(m.at("threshold") == r.threshold);

  CHECK(mc_csv(r) ==
        "trial,pi2,threshold,below_threshold\n"
        "0,4,11.666666666666666,1\n"
        "1,4,11.666666666666666,1\n"
        "2,5,11.666666666666666,1\n");
}

TEST_CASE("enumerate payload freezes the three classes") {
  const json r = enumerate_result(enumerate_regular(7), 1);
  CHECK(r.at("count") == 3);
  REQUIRE(r.at("classes").size() == 3);
  CHECK(r.at("classes")[0].at("trn") == "7\n000111000110001000000\n");
  CHECK(r.at("classes")[0].at("pi2") == 0);
  CHECK(r.at("classes")[0].at("extendable_k2") == false);
  CHECK(r.at("classes")[1].at("extendable_k2") == false);
  CHECK(r.at("classes")[2].at("trn") == "7\n000111010010010100010\n");
  CHECK(r.at("classes")[2].at("pi2") == 1);
  CHECK(r.at("classes")[2].at("extendable_k2") == true);
}

TEST_CASE("serialization is byte-identical across worker counts") {
  SweepOptions one;
  SweepOptions four;
  four.jobs = 4;
  const std::string a =
      serialize_report(make_report("verify", json{{"n", 6}, {"mode", "exhaustive"}}, std::nullopt,
                                   sweep_to_json(sweep_exhaustive(6, all_ids(), one))));
  const std::string b =
      serialize_report(make_report("verify", json{{"n", 6}, {"mode", "exhaustive"}}, std::nullopt,
                                   sweep_to_json(sweep_exhaustive(6, all_ids(), four))));
  CHECK(a == b);

  CHECK(extend_result(paley_tournament(7), 1, 1) == extend_result(paley_tournament(7), 1, 4));

  TailExperiment e;
  e.n = 30;
  e.epsilon = 0.02;
  e.trials = 16;
  e.seed = 5;
  CHECK(mc_result(pi2_tail_experiment(e, 1)) == mc_result(pi2_tail_experiment(e, 4)));
  CHECK(mc_csv(pi2_tail_experiment(e, 1)) == mc_csv(pi2_tail_experiment(e, 4)));
}

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tourlab/construct.hpp"
#include "tourlab/extend.hpp"
#include "tourlab/metrics.hpp"
#include "tourlab/montecarlo.hpp"
#include "tourlab/report.hpp"
#include "tourlab/tournament.hpp"
#include "tourlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace tourlab;

class Stopwatch {
 public:
  [[nodiscard]] double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Tournament load_tournament(const std::string& path) {
  const std::string text = read_input(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty tournament input");
  return text[first] == '{' ? decode_json(text) : decode_trn(text);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << bytes;
}

void emit_report(const std::string& out, std::string_view command, json config,
                 std::optional<std::uint64_t> seed, json result, bool timing,
                 const Stopwatch& watch) {
  json report = make_report(command, std::move(config), seed, std::move(result));
  if (timing) report["elapsed_ms"] = watch.ms();
  write_output(out, serialize_report(report));
}

std::vector<TheoremId> parse_theorems(const std::string& name) {
  if (name == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  const auto id = theorem_from_name(name);
  if (!id) throw std::invalid_argument("unknown theorem id: " + name);
  return {*id};
}

json theorem_names_json(const std::vector<TheoremId>& ids) {
  json names = json::array();
  for (TheoremId id : ids) names.push_back(theorem_name(id));
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tourlab: exact laboratory for tournament path extension"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a tournament");
  std::string gen_family;
  int gen_n = 0, gen_q = 7, gen_t = 1, gen_k = 3, gen_p = 3, gen_n0 = 0, gen_n1 = 0;
  std::vector<int> gen_offsets;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-", gen_format = "trn";
  gen->add_option("--family", gen_family, "random|paley|circulant|t3|t2|figure4")
      ->required()
      ->check(CLI::IsMember({"random", "paley", "circulant", "t3", "t2", "figure4"}));
  gen->add_option("--n", gen_n, "vertex count (random, circulant)");
  gen->add_option("--q", gen_q, "prime = 3 mod 4 (paley)");
  gen->add_option("--offsets", gen_offsets, "circulant offsets, e.g. 1,2,4")->delimiter(',');
  gen->add_option("--t", gen_t, "t3 parameter (4t+3 prime)");
  gen->add_option("--p", gen_p, "t2 path order (odd, >= 3)");
  gen->add_option("--n0", gen_n0, "t2 size of N0+ and N0-");
  gen->add_option("--n1", gen_n1, "t2 size of N1+ and N1-");
  gen->add_option("--k", gen_k, "figure4 parameter (3..11)");
  gen->add_option("--seed", gen_seed, "RNG seed (random, t2, figure4)");
  gen->add_option("--format", gen_format, "trn|json")->check(CLI::IsMember({"trn", "json"}));
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->callback([&] {
    Tournament t;
    if (gen_family == "random") {
      t = random_tournament(gen_n, gen_seed);
    } else if (gen_family == "paley") {
      t = paley_tournament(gen_q);
    } else if (gen_family == "circulant") {
      t = circulant_tournament(gen_n, gen_offsets);
    } else if (gen_family == "t3") {
      t = t3_tournament(T3Spec{gen_t});
    } else if (gen_family == "t2") {
      const auto built = t2_tournament(T2Spec{gen_p, gen_n0, gen_n1}, gen_seed);
      if (!built) throw std::invalid_argument("t2: no regular completion for these parameters");
      t = *built;
    } else {
      t = figure4_tournament(gen_k, gen_seed);
    }
    write_output(gen_out, gen_format == "trn" ? encode_trn(t) : encode_json(t));
  });

  // ---- analyze ------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "basic invariants of one tournament");
  std::string an_input, an_out = "-";
  bool an_timing = false;
  analyze->add_option("--input", an_input, "TRN or JSON file ('-' for stdin)")->required();
  analyze->add_option("--out", an_out, "output path (default stdout)");
  analyze->add_flag("--timing", an_timing, "include elapsed_ms");
  analyze->callback([&] {
    const Stopwatch watch;
    const Tournament t = load_tournament(an_input);
    emit_report(an_out, "analyze", json{{"input", an_input}}, std::nullopt, analyze_result(t),
                an_timing, watch);
  });

  // ---- verify-extend --------------------------------------------------------
  auto* vx = app.add_subcommand("verify-extend", "decide path extendability by exact DP");
  std::string vx_input, vx_out = "-";
  int vx_k = 1, vx_jobs = 1;
  bool vx_timing = false;
  vx->add_option("--input", vx_input, "TRN or JSON file ('-' for stdin)")->required();
  vx->add_option("--k", vx_k, "check paths of length >= k (default 1)")
      ->check(CLI::PositiveNumber);
  vx->add_option("--jobs", vx_jobs, "worker threads")->check(CLI::PositiveNumber);
  vx->add_option("--out", vx_out, "output path (default stdout)");
  vx->add_flag("--timing", vx_timing, "include elapsed_ms");
  vx->callback([&] {
    const Stopwatch watch;
    const Tournament t = load_tournament(vx_input);
    emit_report(vx_out, "verify-extend", json{{"input", vx_input}, {"k", vx_k}}, std::nullopt,
                extend_result(t, vx_k, vx_jobs), vx_timing, watch);
  });

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check theorem statements");
  std::string vf_theorem = "all", vf_input, vf_out = "-";
  int vf_n = 0, vf_min_pi2 = 0, vf_jobs = 1;
  bool vf_exhaustive = false, vf_timing = false;
  std::uint64_t vf_samples = 0, vf_seed = 0;
  verify->add_option("--theorem", vf_theorem, "theorem id or 'all'");
  verify->add_option("--input", vf_input, "check one tournament from a file");
  verify->add_option("--n", vf_n, "vertex count for sweep modes");
  verify->add_flag("--exhaustive", vf_exhaustive, "sweep all labeled tournaments on n (n <= 7)");
  verify->add_option("--samples", vf_samples, "sweep this many random tournaments on n");
  verify->add_option("--seed", vf_seed, "seed for --samples");
  verify->add_option("--min-pi2", vf_min_pi2, "skip tournaments with pi2 below this");
  verify->add_option("--jobs", vf_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", vf_out, "output path (default stdout)");
  verify->add_flag("--timing", vf_timing, "include elapsed_ms");
  verify->callback([&] {
    const Stopwatch watch;
    const std::vector<TheoremId> ids = parse_theorems(vf_theorem);
    bool all_hold = true;
    if (!vf_input.empty()) {
      const Tournament t = load_tournament(vf_input);
      const CheckOptions opts{.want_details = true, .set_size_cap = 6, .jobs = vf_jobs};
      json result = checks_result(t, ids, opts);
      all_hold = result.at("all_hold").get<bool>();
      emit_report(vf_out, "verify",
                  json{{"input", vf_input}, {"theorems", theorem_names_json(ids)}}, std::nullopt,
                  std::move(result), vf_timing, watch);
    } else if (vf_exhaustive || vf_samples > 0) {
      if (vf_n == 0) throw std::invalid_argument("verify: sweep modes need --n");
      if (vf_exhaustive && vf_samples > 0) {
        throw std::invalid_argument("verify: --exhaustive and --samples are exclusive");
      }
      const SweepOptions opts{.min_pi2 = vf_min_pi2, .jobs = vf_jobs};
      const SweepResult sweep = vf_exhaustive
                                    ? sweep_exhaustive(vf_n, ids, opts)
                                    : sweep_samples(vf_n, ids, vf_samples, vf_seed, opts);
      json result = sweep_to_json(sweep);
      all_hold = result.at("all_hold").get<bool>();
      json config{{"n", vf_n},
                  {"mode", vf_exhaustive ? "exhaustive" : "samples"},
                  {"theorems", theorem_names_json(ids)},
                  {"min_pi2", vf_min_pi2}};
      std::optional<std::uint64_t> seed;
      if (!vf_exhaustive) {
        config["samples"] = vf_samples;
        seed = vf_seed;
      }
      emit_report(vf_out, "verify", std::move(config), seed, std::move(result), vf_timing, watch);
    } else {
      throw std::invalid_argument("verify: need --input, or --n with --exhaustive/--samples");
    }
    if (!all_hold) exit_code = 1;
  });

  // ---- mc -------------------------------------------------------------------
  auto* mc = app.add_subcommand("mc", "Monte Carlo pi2 tail experiment");
  TailExperiment mc_config;
  int mc_jobs = 1;
  std::string mc_out = "-", mc_csv_path;
  bool mc_timing = false;
  mc->add_option("--n", mc_config.n, "vertex count (<= 2048)")->required();
  mc->add_option("--p", mc_config.p, "arc probability per direction, in (0, 1/2]")->required();
  mc->add_option("--epsilon", mc_config.epsilon, "tail slack, in (0, p^2)")->required();
  mc->add_option("--trials", mc_config.trials, "number of samples")->required();
  mc->add_option("--seed", mc_config.seed, "experiment seed");
  mc->add_option("--csv", mc_csv_path, "write per-trial CSV to this path");
  mc->add_option("--jobs", mc_jobs, "worker threads")->check(CLI::PositiveNumber);
  mc->add_option("--out", mc_out, "output path (default stdout)");
  mc->add_flag("--timing", mc_timing, "include elapsed_ms");
  mc->callback([&] {
    const Stopwatch watch;
    const TailExperiment done = pi2_tail_experiment(mc_config, mc_jobs);
    if (!mc_csv_path.empty()) write_output(mc_csv_path, mc_csv(done));
    emit_report(mc_out, "mc",
                json{{"n", done.n},
                     {"p", done.p},
                     {"epsilon", done.epsilon},
                     {"trials", done.trials}},
                done.seed, mc_result(done), mc_timing, watch);
  });

  // ---- enumerate-regular ------------------------------------------------------
  auto* er = app.add_subcommand("enumerate-regular", "regular tournaments up to isomorphism");
  int er_n = 0, er_jobs = 1;
  std::string er_out = "-";
  bool er_timing = false;
  er->add_option("--n", er_n, "vertex count (odd, 3..9)")->required();
  er->add_option("--jobs", er_jobs, "worker threads")->check(CLI::PositiveNumber);
  er->add_option("--out", er_out, "output path (default stdout)");
  er->add_flag("--timing", er_timing, "include elapsed_ms");
  er->callback([&] {
    const Stopwatch watch;
    emit_report(er_out, "enumerate-regular", json{{"n", er_n}}, std::nullopt,
                enumerate_result(enumerate_regular(er_n), er_jobs), er_timing, watch);
  });

  // ---- rediscover-t0 ----------------------------------------------------------
  auto* rt = app.add_subcommand("rediscover-t0",
                                "find the 7-vertex regular class that is not {2+}-extendable");
  int rt_jobs = 1;
  std::string rt_out = "-";
  bool rt_timing = false;
  rt->add_option("--jobs", rt_jobs, "worker threads")->check(CLI::PositiveNumber);
  rt->add_option("--out", rt_out, "output path (default stdout)");
  rt->add_flag("--timing", rt_timing, "include elapsed_ms");
  rt->callback([&] {
    const Stopwatch watch;
    const Tournament t0 = rediscover_t0();
    json result = analyze_result(t0);
    result["trn"] = encode_trn(t0);
    result["extendable_k2"] = is_path_extendable(t0, 2, rt_jobs).extendable;
    emit_report(rt_out, "rediscover-t0", json::object(), std::nullopt, std::move(result),
                rt_timing, watch);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}

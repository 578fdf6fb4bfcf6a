// Licensed under the Apache License 2.0 (see LICENSE file).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <list>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mco/mco.h"

namespace {

using nlohmann::json;

// One error shape everywhere: machine-readable JSON on stderr, the status
// code as the exit code. Usage problems exit with 64.
struct CliError {
  int code;
  std::string type;
  std::string message;
};

void check(mco_status status) {
  if (status != MCO_OK)
    throw CliError{static_cast<int>(status), mco_status_name(status), mco_last_error()};
}

std::string take(char* text) {
  std::string out = text == nullptr ? "" : text;
  mco_string_free(text);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{MCO_ERR_IO, "io", "cannot open " + path + " for reading"};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CliError{MCO_ERR_IO, "io", "read failure on " + path};
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{MCO_ERR_IO, "io", "cannot open " + path + " for writing"};
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw CliError{MCO_ERR_IO, "io", "write failure on " + path};
}

void output(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

json parse_object(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw CliError{MCO_ERR_PARSE, "parse", what + " must be a JSON object"};
  return j;
}

struct ScenarioHandle {
  mco_scenario* p = nullptr;
  ~ScenarioHandle() { mco_scenario_free(p); }
};

struct TraceHandle {
  mco_trace* p = nullptr;
  ~TraceHandle() { mco_trace_free(p); }
};

void load_scenario(const std::string& path, ScenarioHandle& s) {
  check(mco_scenario_from_json(read_file(path).c_str(), &s.p));
}

// Flags mirror the generator-spec and mechanism-config JSON keys; a config
// file provides the base document and explicit flags override it.
struct GeneratorFlags {
  CLI::Option* users = nullptr;
  CLI::Option* region_side = nullptr;
  CLI::Option* min_distance = nullptr;
  CLI::Option* path_loss = nullptr;
  CLI::Option* bandwidth = nullptr;
  CLI::Option* transmit_power = nullptr;
  CLI::Option* background_power = nullptr;
  CLI::Option* input_bits = nullptr;
  CLI::Option* cycles = nullptr;
  CLI::Option* local_freqs = nullptr;
  CLI::Option* cloud_freq = nullptr;
  CLI::Option* weight_time = nullptr;
  CLI::Option* weight_energy = nullptr;
  CLI::Option* energy_per_cycle = nullptr;

  std::size_t users_v = 0;
  double region_side_v = 0, min_distance_v = 0, path_loss_v = 0, bandwidth_v = 0;
  double transmit_power_v = 0, background_power_v = 0, input_bits_v = 0, cycles_v = 0;
  double cloud_freq_v = 0, weight_time_v = 0, weight_energy_v = 0, energy_per_cycle_v = 0;
  std::vector<double> local_freqs_v;
  std::string config_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "generator spec JSON file; explicit flags override it");
    users = cmd->add_option("--users", users_v, "number of users");
    region_side = cmd->add_option("--region-side", region_side_v, "region side, meters");
    min_distance =
        cmd->add_option("--min-distance", min_distance_v, "distance floor, meters");
    path_loss = cmd->add_option("--path-loss-exponent", path_loss_v, "path loss exponent");
    bandwidth = cmd->add_option("--bandwidth", bandwidth_v, "channel bandwidth, Hz");
    transmit_power =
        cmd->add_option("--transmit-power", transmit_power_v, "transmit power, W");
    background_power =
        cmd->add_option("--background-power", background_power_v, "background power, W");
    input_bits = cmd->add_option("--input-bits", input_bits_v, "task input size, bits");
    cycles = cmd->add_option("--cycles", cycles_v, "task CPU cycles");
    local_freqs = cmd->add_option("--local-freqs", local_freqs_v,
                                  "device CPU choices, Hz (comma separated)")
                      ->delimiter(',');
    cloud_freq = cmd->add_option("--cloud-freq", cloud_freq_v, "cloud clone CPU, Hz");
    weight_time = cmd->add_option("--weight-time", weight_time_v, "time weight in [0,1]");
    weight_energy =
        cmd->add_option("--weight-energy", weight_energy_v, "energy weight in [0,1]");
    energy_per_cycle = cmd->add_option("--energy-per-cycle", energy_per_cycle_v,
                                       "J/cycle; negative picks the clock-based rule");
  }

  json build(std::uint64_t seed) const {
    json spec = config_path.empty() ? json::object()
                                    : parse_object(read_file(config_path), "generator config");
    spec["seed"] = seed;
    if (users->count()) spec["users"] = users_v;
    if (region_side->count()) spec["region_side_m"] = region_side_v;
    if (min_distance->count()) spec["min_distance_m"] = min_distance_v;
    if (path_loss->count()) spec["path_loss_exponent"] = path_loss_v;
    if (bandwidth->count()) spec["bandwidth_hz"] = bandwidth_v;
    if (transmit_power->count()) spec["transmit_power_w"] = transmit_power_v;
    if (background_power->count()) spec["background_power_w"] = background_power_v;
    if (input_bits->count()) spec["input_bits"] = input_bits_v;
    if (cycles->count()) spec["cycles"] = cycles_v;
    if (local_freqs->count()) spec["local_freq_choices_hz"] = local_freqs_v;
    if (cloud_freq->count()) spec["cloud_freq_hz"] = cloud_freq_v;
    if (weight_time->count()) spec["weight_time"] = weight_time_v;
    if (weight_energy->count()) spec["weight_energy"] = weight_energy_v;
    if (energy_per_cycle->count()) spec["energy_per_cycle_j"] = energy_per_cycle_v;
    return spec;
  }
};

struct MechanismFlags {
  std::int64_t quiet_slots = 1;
  std::string contention = "uniform-backoff";
  std::int64_t max_slots = 100000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--quiet-slots", quiet_slots,
                    "consecutive quiet slots that end the run");
    cmd->add_option("--contention", contention,
                    "uniform-backoff or seeded-random-winner");
    cmd->add_option("--max-slots", max_slots, "safety cap on simulated slots");
  }

  json build(std::uint64_t seed) const {
    return {{"quiet_slots", quiet_slots},
            {"contention", contention},
            {"seed", seed},
            {"max_slots", max_slots}};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized computation-offloading game engine"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a random scenario");
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  GeneratorFlags gen_flags;
  gen->add_option("--seed", gen_seed, "placement seed")->required();
  gen_flags.attach(gen);
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    ScenarioHandle s;
    check(mco_scenario_generate(gen_flags.build(gen_seed).dump().c_str(), &s.p));
    char* text = nullptr;
    check(mco_scenario_to_json(s.p, &text));
    output(take(text), gen_out);
  });

  // ---- run ----------------------------------------------------------
  auto* run = app.add_subcommand("run", "run the decentralized mechanism");
  std::string run_scenario, run_trace;
  std::uint64_t run_seed = 0;
  MechanismFlags run_mech;
  run->add_option("--scenario", run_scenario, "scenario JSON file")->required();
  run->add_option("--seed", run_seed, "contention seed")->required();
  run_mech.attach(run);
  run->add_option("--trace", run_trace, "write per-slot trace lines to this file");
  run->callback([&] {
    ScenarioHandle s;
    load_scenario(run_scenario, s);
    TraceHandle t;
    check(mco_run_mechanism(s.p, run_mech.build(run_seed).dump().c_str(), &t.p));
    if (!run_trace.empty()) {
      char* lines = nullptr;
      check(mco_trace_lines(t.p, &lines));
      write_file(run_trace, take(lines));
    }
    char* summary = nullptr;
    check(mco_trace_summary(t.p, &summary));
    std::cout << take(summary);
  });

  // ---- nash-check -----------------------------------------------------
  auto* nash = app.add_subcommand("nash-check", "verify a profile against all deviations");
  std::string nash_scenario, nash_profile;
  nash->add_option("--scenario", nash_scenario, "scenario JSON file")->required();
  nash->add_option("--profile", nash_profile, "decision bits, user 0 first")->required();
  nash->callback([&] {
    ScenarioHandle s;
    load_scenario(nash_scenario, s);
    int stable = 0;
    check(mco_is_nash(s.p, nash_profile.c_str(), &stable));
    json improving = json::array();
    for (size_t n = 0; n < mco_scenario_user_count(s.p); ++n) {
      int has = 0, move = 0;
      check(mco_improvement_set(s.p, nash_profile.c_str(), n, &has, &move));
      if (has)
        improving.push_back({{"user", n}, {"move", move ? "offload" : "local"}});
    }
    json out = {{"profile", nash_profile},
                {"is_nash", stable != 0},
                {"improving", std::move(improving)}};
    std::cout << out.dump(2) << "\n";
  });

  // ---- homogeneous ----------------------------------------------------
  auto* homog = app.add_subcommand(
      "homogeneous", "analytic equilibrium for equal received powers");
  std::string homog_scenario;
  homog->add_option("--scenario", homog_scenario, "scenario JSON file")->required();
  homog->callback([&] {
    ScenarioHandle s;
    load_scenario(homog_scenario, s);
    char* text = nullptr;
    check(mco_homogeneous_report(s.p, &text));
    std::cout << take(text);
  });

  // ---- optimum --------------------------------------------------------
  auto* opt = app.add_subcommand("optimum", "centralized minimum system cost");
  std::string opt_scenario;
  std::size_t opt_cap = 20;
  opt->add_option("--scenario", opt_scenario, "scenario JSON file")->required();
  opt->add_option("--cap", opt_cap, "largest N solved by exhaustive scan");
  opt->callback([&] {
    ScenarioHandle s;
    load_scenario(opt_scenario, s);
    char* text = nullptr;
    check(mco_centralized_optimum(s.p, opt_cap, &text));
    std::cout << take(text);
  });

  // ---- poa ------------------------------------------------------------
  auto* poa = app.add_subcommand(
      "poa", "equilibrium quality report: optimum, worst/best equilibrium, ratios");
  std::string poa_scenario;
  std::size_t poa_cap = 20;
  poa->add_option("--scenario", poa_scenario, "scenario JSON file")->required();
  poa->add_option("--cap", poa_cap, "enumeration cap on N");
  poa->callback([&] {
    ScenarioHandle s;
    load_scenario(poa_scenario, s);
    char* text = nullptr;
    check(mco_equilibrium_report(s.p, poa_cap, &text));
    std::cout << take(text);
  });

  // ---- experiment -------------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "seeded experiment suites");
  exp->require_subcommand(1);
  std::uint64_t exp_seed = 0;
  std::string exp_out_dir = ".";
  bool exp_svg = false;
  std::size_t exp_trials = 30;
  // Option handles live per subcommand, so each one needs its own flag set;
  // the list keeps references stable for the callbacks.
  std::list<GeneratorFlags> exp_gens;
  MechanismFlags exp_mech;
  std::vector<double> exp_grid;
  std::vector<std::size_t> exp_users_grid;
  bool exp_no_optimum = false;
  std::size_t exp_cap = 20;

  auto attach_common = [&](CLI::App* cmd) -> GeneratorFlags& {
    cmd->add_option("--seed", exp_seed, "base seed")->required();
    cmd->add_option("--out-dir", exp_out_dir, "output directory (default .)");
    cmd->add_flag("--svg", exp_svg, "also render an SVG chart");
    GeneratorFlags& gen_flags = exp_gens.emplace_back();
    gen_flags.attach(cmd);
    exp_mech.attach(cmd);
    return gen_flags;
  };

  auto run_experiment = [&](const json& opts) {
    char* result = nullptr;
    check(mco_experiment_run(opts.dump().c_str(), &result));
    const std::string result_text = take(result);
    char* files = nullptr;
    check(mco_result_emit(result_text.c_str(), exp_out_dir.c_str(), exp_svg ? 1 : 0,
                          &files));
    json written = json::parse(take(files));
    std::cout << json{{"written", std::move(written)}}.dump(2) << "\n";
  };

  auto* exp_conv = exp->add_subcommand("convergence", "one run, per-slot trajectories");
  GeneratorFlags& conv_gen = attach_common(exp_conv);
  exp_conv->callback([&] {
    run_experiment({{"experiment", "convergence"},
                    {"generator", conv_gen.build(exp_seed)},
                    {"mechanism", exp_mech.build(exp_seed)}});
  });

  auto* exp_sweep_d = exp->add_subcommand(
      "sweep-d", "mechanism vs baselines across task cycle counts");
  GeneratorFlags& sweep_d_gen = attach_common(exp_sweep_d);
  exp_sweep_d->add_option("--grid", exp_grid, "cycle counts (comma separated)")
      ->delimiter(',')
      ->required();
  exp_sweep_d->add_option("--trials", exp_trials, "trials per grid point");
  exp_sweep_d->callback([&] {
    run_experiment({{"experiment", "sweep_d"},
                    {"generator", sweep_d_gen.build(exp_seed)},
                    {"mechanism", exp_mech.build(exp_seed)},
                    {"grid", exp_grid},
                    {"trials", exp_trials}});
  });

  auto* exp_sweep_b = exp->add_subcommand(
      "sweep-b", "mechanism vs baselines across task input sizes");
  GeneratorFlags& sweep_b_gen = attach_common(exp_sweep_b);
  exp_sweep_b->add_option("--grid", exp_grid, "input sizes in bits (comma separated)")
      ->delimiter(',')
      ->required();
  exp_sweep_b->add_option("--trials", exp_trials, "trials per grid point");
  exp_sweep_b->callback([&] {
    run_experiment({{"experiment", "sweep_b"},
                    {"generator", sweep_b_gen.build(exp_seed)},
                    {"mechanism", exp_mech.build(exp_seed)},
                    {"grid", exp_grid},
                    {"trials", exp_trials}});
  });

  auto* exp_scaling = exp->add_subcommand(
      "scaling", "cost, updates and messages across user counts");
  GeneratorFlags& scaling_gen = attach_common(exp_scaling);
  exp_scaling->add_option("--n-grid", exp_users_grid, "user counts (comma separated)")
      ->delimiter(',');
  exp_scaling->add_option("--trials", exp_trials, "trials per grid point");
  exp_scaling->add_flag("--no-optimum", exp_no_optimum,
                        "skip the centralized optimum column");
  exp_scaling->add_option("--cap", exp_cap, "largest N solved by exhaustive scan");
  exp_scaling->callback([&] {
    json opts = {{"experiment", "scaling"},
                 {"generator", scaling_gen.build(exp_seed)},
                 {"mechanism", exp_mech.build(exp_seed)},
                 {"trials", exp_trials},
                 {"compute_optimum", !exp_no_optimum},
                 {"exhaustive_cap", exp_cap}};
    if (!exp_users_grid.empty()) opts["users_grid"] = exp_users_grid;
    run_experiment(opts);
  });

  // ---- emit -------------------------------------------------------------
  auto* emit = app.add_subcommand("emit", "re-emit files from a stored result JSON");
  std::string emit_result, emit_out_dir = ".";
  bool emit_svg = false;
  emit->add_option("--result", emit_result, "experiment result JSON file")->required();
  emit->add_option("--out-dir", emit_out_dir, "output directory (default .)");
  emit->add_flag("--svg", emit_svg, "also render an SVG chart");
  emit->callback([&] {
    char* files = nullptr;
    check(mco_result_emit(read_file(emit_result).c_str(), emit_out_dir.c_str(),
                          emit_svg ? 1 : 0, &files));
    json written = json::parse(take(files));
    std::cout << json{{"written", std::move(written)}}.dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << json{{"error",
                       {{"status", 64}, {"type", "usage"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 64;
  } catch (const CliError& e) {
    std::cerr << json{{"error",
                       {{"status", e.code}, {"type", e.type}, {"message", e.message}}}}
                     .dump()
              << "\n";
    return e.code;
  }
  return 0;
}

// Licensed under the Apache License 2.0 (see LICENSE file).

#include "mco/mco.h"

#include <cstring>
#include <memory>
#include <string>

#include "core/benchmark.hpp"
#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/game.hpp"
#include "core/generator.hpp"
#include "core/json_io.hpp"
#include "core/mechanism.hpp"
#include "core/model.hpp"

struct mco_scenario {
  mco::Scenario value;
};

struct mco_trace {
  mco::MechanismTrace value;
};

namespace {

thread_local std::string t_last_error;

mco_status fail(mco_status code, const std::string& message) {
  t_last_error = message;
  return code;
}

// Exceptions never cross the C boundary; each library error type maps to
// one status code, anything else is internal.
template <typename Fn>
mco_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return MCO_OK;
  } catch (const mco::InvalidArgumentError& e) {
    return fail(MCO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const mco::OutOfRangeError& e) {
    return fail(MCO_ERR_OUT_OF_RANGE, e.what());
  } catch (const mco::NotHomogeneousError& e) {
    return fail(MCO_ERR_NOT_HOMOGENEOUS, e.what());
  } catch (const mco::CapacityError& e) {
    return fail(MCO_ERR_CAPACITY, e.what());
  } catch (const mco::ParseError& e) {
    return fail(MCO_ERR_PARSE, e.what());
  } catch (const mco::IoError& e) {
    return fail(MCO_ERR_IO, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(MCO_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(MCO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MCO_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_text(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_arg(const void* p, const char* what) {
  if (p == nullptr)
    throw mco::InvalidArgumentError(std::string(what) + " must not be null");
}

mco::DecisionProfile profile_arg(const mco_scenario* s, const char* profile) {
  require_arg(profile, "profile");
  mco::DecisionProfile a = mco::DecisionProfile::from_string(profile);
  if (a.size() != s->value.users.size())
    throw mco::InvalidArgumentError("profile length does not match user count");
  return a;
}

mco::ExperimentResult dispatch_experiment(const mco::Json& opts) {
  using mco::Json;
  static const char* kKeys[] = {"experiment", "generator",   "mechanism",
                                "grid",       "users_grid",  "trials",
                                "compute_optimum", "exhaustive_cap"};
  for (const auto& item : opts.items()) {
    bool known = false;
    for (const char* k : kKeys) known |= (item.key() == k);
    if (!known)
      throw mco::ParseError("unknown key \"" + item.key() + "\" in experiment options");
  }
  if (!opts.contains("experiment") || !opts.at("experiment").is_string())
    throw mco::ParseError("experiment options need a string \"experiment\" key");
  const std::string kind = opts.at("experiment").get<std::string>();

  const mco::GeneratorSpec g = mco::generator_spec_from_json(
      opts.contains("generator") ? opts.at("generator") : Json::object());
  const mco::MechanismConfig m = mco::mechanism_config_from_json(
      opts.contains("mechanism") ? opts.at("mechanism") : Json::object());
  const std::size_t trials =
      opts.contains("trials") ? opts.at("trials").get<std::size_t>() : 30;

  auto grid_values = [&]() {
    if (!opts.contains("grid") || !opts.at("grid").is_array() || opts.at("grid").empty())
      throw mco::ParseError("this experiment needs a nonempty \"grid\" array");
    return opts.at("grid").get<std::vector<double>>();
  };

  if (kind == "convergence") return mco::experiment_convergence(g, m);
  if (kind == "sweep_d") return mco::experiment_sweep_cycles(g, m, grid_values(), trials);
  if (kind == "sweep_b") return mco::experiment_sweep_bits(g, m, grid_values(), trials);
  if (kind == "scaling") {
    mco::ScalingOptions scaling;
    scaling.trials = trials;
    if (opts.contains("users_grid"))
      scaling.users_grid = opts.at("users_grid").get<std::vector<std::size_t>>();
    if (opts.contains("compute_optimum"))
      scaling.compute_optimum = opts.at("compute_optimum").get<bool>();
    if (opts.contains("exhaustive_cap"))
      scaling.exhaustive_cap = opts.at("exhaustive_cap").get<std::size_t>();
    return mco::experiment_scaling(g, m, scaling);
  }
  throw mco::ParseError("unknown experiment \"" + kind +
                        "\" (expected convergence, sweep_d, sweep_b or scaling)");
}

}  // namespace

extern "C" {

const char* mco_version(void) { return "1.0.0"; }

const char* mco_status_name(mco_status status) {
  switch (status) {
    case MCO_OK: return "ok";
    case MCO_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MCO_ERR_OUT_OF_RANGE: return "out_of_range";
    case MCO_ERR_NOT_HOMOGENEOUS: return "not_homogeneous";
    case MCO_ERR_CAPACITY: return "capacity";
    case MCO_ERR_PARSE: return "parse";
    case MCO_ERR_IO: return "io";
    case MCO_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mco_last_error(void) { return t_last_error.c_str(); }

void mco_string_free(char* text) { delete[] text; }

mco_status mco_scenario_from_json(const char* json_text, mco_scenario** out) {
  return guarded([&] {
    require_arg(json_text, "json_text");
    require_arg(out, "out");
    auto s = std::make_unique<mco_scenario>();
    s->value = mco::scenario_from_json(mco::parse_json_text(json_text));
    *out = s.release();
  });
}

mco_status mco_scenario_generate(const char* generator_json, mco_scenario** out) {
  return guarded([&] {
    require_arg(generator_json, "generator_json");
    require_arg(out, "out");
    const mco::GeneratorSpec g =
        mco::generator_spec_from_json(mco::parse_json_text(generator_json));
    auto s = std::make_unique<mco_scenario>();
    s->value = mco::generate_scenario(g);
    *out = s.release();
  });
}

mco_status mco_scenario_to_json(const mco_scenario* s, char** out_text) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_text, "out_text");
    *out_text = dup_text(mco::scenario_to_json(s->value).dump(2) + "\n");
  });
}

size_t mco_scenario_user_count(const mco_scenario* s) {
  return s == nullptr ? 0 : s->value.users.size();
}

void mco_scenario_free(mco_scenario* s) { delete s; }

mco_status mco_uplink_rate(const mco_scenario* s, const char* profile, size_t user,
                           double* out_bits_per_s) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_bits_per_s, "out_bits_per_s");
    *out_bits_per_s = mco::uplink_rate(s->value, profile_arg(s, profile), user);
  });
}

mco_status mco_interference(const mco_scenario* s, const char* profile, size_t user,
                            double* out_watts) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_watts, "out_watts");
    *out_watts = mco::interference_at(s->value, profile_arg(s, profile), user);
  });
}

mco_status mco_user_overhead(const mco_scenario* s, const char* profile, size_t user,
                             double* out_cost) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_cost, "out_cost");
    *out_cost = mco::user_overhead(s->value, profile_arg(s, profile), user);
  });
}

mco_status mco_system_cost(const mco_scenario* s, const char* profile, double* out_cost) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_cost, "out_cost");
    *out_cost = mco::system_cost(s->value, profile_arg(s, profile));
  });
}

mco_status mco_threshold(const mco_scenario* s, size_t user, double* out_watts,
                         int* out_never) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_watts, "out_watts");
    require_arg(out_never, "out_never");
    const mco::Threshold t = mco::threshold(s->value, user);
    *out_watts = t.watts();
    *out_never = t.never() ? 1 : 0;
  });
}

mco_status mco_best_response(const mco_scenario* s, const char* profile, size_t user,
                             int* out_offload) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_offload, "out_offload");
    *out_offload =
        mco::best_response(s->value, profile_arg(s, profile), user) == mco::Decision::Offload
            ? 1
            : 0;
  });
}

mco_status mco_improvement_set(const mco_scenario* s, const char* profile, size_t user,
                               int* out_has, int* out_move) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_has, "out_has");
    require_arg(out_move, "out_move");
    const auto move = mco::improvement_set(s->value, profile_arg(s, profile), user);
    *out_has = move.has_value() ? 1 : 0;
    *out_move = move.has_value() && *move == mco::Decision::Offload ? 1 : 0;
  });
}

mco_status mco_is_nash(const mco_scenario* s, const char* profile, int* out) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out, "out");
    *out = mco::is_nash(s->value, profile_arg(s, profile)) ? 1 : 0;
  });
}

mco_status mco_potential(const mco_scenario* s, const char* profile, double* out) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out, "out");
    *out = mco::potential(s->value, profile_arg(s, profile));
  });
}

mco_status mco_enumerate_equilibria(const mco_scenario* s, size_t cap, char** out_json) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_json, "out_json");
    mco::Json arr = mco::Json::array();
    for (const auto& a : mco::enumerate_equilibria(s->value, cap))
      arr.push_back(a.to_string());
    *out_json = dup_text(arr.dump() + "\n");
  });
}

mco_status mco_homogeneous_report(const mco_scenario* s, char** out_json) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_json, "out_json");
    *out_json = dup_text(mco::homogeneous_report_json(s->value).dump(2) + "\n");
  });
}

mco_status mco_run_mechanism(const mco_scenario* s, const char* config_json,
                             mco_trace** out) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out, "out");
    mco::MechanismConfig cfg;
    if (config_json != nullptr)
      cfg = mco::mechanism_config_from_json(mco::parse_json_text(config_json));
    auto t = std::make_unique<mco_trace>();
    t->value = mco::run_mechanism(s->value, cfg);
    *out = t.release();
  });
}

mco_status mco_trace_summary(const mco_trace* t, char** out_json) {
  return guarded([&] {
    require_arg(t, "trace");
    require_arg(out_json, "out_json");
    *out_json = dup_text(mco::trace_summary_json(t->value).dump(2) + "\n");
  });
}

mco_status mco_trace_lines(const mco_trace* t, char** out_text) {
  return guarded([&] {
    require_arg(t, "trace");
    require_arg(out_text, "out_text");
    *out_text = dup_text(mco::trace_lines(t->value));
  });
}

size_t mco_trace_slot_count(const mco_trace* t) {
  return t == nullptr ? 0 : t->value.slots.size();
}

void mco_trace_free(mco_trace* t) { delete t; }

mco_status mco_centralized_optimum(const mco_scenario* s, size_t exhaustive_cap,
                                   char** out_json) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_json, "out_json");
    const mco::Optimum best = mco::centralized_optimum(s->value, exhaustive_cap);
    *out_json = dup_text(mco::optimum_to_json(best).dump(2) + "\n");
  });
}

mco_status mco_equilibrium_report(const mco_scenario* s, size_t cap, char** out_json) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out_json, "out_json");
    *out_json = dup_text(mco::report_to_json(mco::equilibrium_report(s->value, cap)).dump(2) +
                         "\n");
  });
}

mco_status mco_poa_bound(const mco_scenario* s, double* out) {
  return guarded([&] {
    require_arg(s, "scenario");
    require_arg(out, "out");
    *out = mco::poa_bound(s->value);
  });
}

mco_status mco_experiment_run(const char* opts_json, char** out_json) {
  return guarded([&] {
    require_arg(opts_json, "opts_json");
    require_arg(out_json, "out_json");
    const mco::ExperimentResult r = dispatch_experiment(mco::parse_json_text(opts_json));
    *out_json = dup_text(mco::result_to_json(r).dump(2) + "\n");
  });
}

mco_status mco_result_emit(const char* result_json, const char* out_dir, int with_svg,
                           char** out_files_json) {
  return guarded([&] {
    require_arg(result_json, "result_json");
    require_arg(out_dir, "out_dir");
    require_arg(out_files_json, "out_files_json");
    const mco::ExperimentResult r =
        mco::result_from_json(mco::parse_json_text(result_json));
    mco::Json files = mco::emit(r, out_dir, with_svg != 0);
    *out_files_json = dup_text(files.dump() + "\n");
  });
}

}  // extern "C"

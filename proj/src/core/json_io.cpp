// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/json_io.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/game.hpp"
#include "core/homogeneous.hpp"

namespace mco {

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> allowed,
                 const char* where) {
  if (!j.is_object()) throw ParseError(std::string(where) + " must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known)
      throw ParseError("unknown key \"" + item.key() + "\" in " + where);
  }
}

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing key \"") + key + "\" in " + where);
  return *it;
}

double num(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number())
    throw ParseError(std::string("key \"") + key + "\" in " + where + " must be a number");
  return v.get<double>();
}

double num_or(const Json& j, const char* key, const char* where, double fallback) {
  if (!j.contains(key)) return fallback;
  return num(j, key, where);
}

std::uint64_t uint_or(const Json& j, const char* key, const char* where,
                      std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !v.is_number_integer())
    throw ParseError(std::string("key \"") + key + "\" in " + where +
                     " must be a nonnegative integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0)
    throw ParseError(std::string("key \"") + key + "\" in " + where +
                     " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::int64_t int_or(const Json& j, const char* key, const char* where,
                    std::int64_t fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw ParseError(std::string("key \"") + key + "\" in " + where +
                     " must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

const char* contention_mode_name(ContentionMode m) {
  switch (m) {
    case ContentionMode::UniformBackoff: return "uniform-backoff";
    case ContentionMode::SeededRandomWinner: return "seeded-random-winner";
  }
  return "uniform-backoff";
}

ContentionMode contention_mode_from_name(const std::string& name) {
  if (name == "uniform-backoff") return ContentionMode::UniformBackoff;
  if (name == "seeded-random-winner") return ContentionMode::SeededRandomWinner;
  throw ParseError("unknown contention mode \"" + name +
                   "\" (expected uniform-backoff or seeded-random-winner)");
}

Json scenario_to_json(const Scenario& s) {
  Json users = Json::array();
  for (const UserProfile& u : s.users) {
    users.push_back({{"transmit_power_w", u.transmit_power},
                     {"channel_gain", u.channel_gain},
                     {"background_power_w", u.background_power},
                     {"input_bits", u.input_bits},
                     {"cycles", u.cycles},
                     {"local_freq_hz", u.local_freq},
                     {"cloud_freq_hz", u.cloud_freq},
                     {"weight_time", u.weight_time},
                     {"weight_energy", u.weight_energy},
                     {"energy_per_cycle_j", u.energy_per_cycle}});
  }
  Json j{{"bandwidth_hz", s.bandwidth}, {"users", std::move(users)}};
  if (s.meta) {
    Json positions = Json::array();
    for (const auto& p : s.meta->positions) positions.push_back({p[0], p[1]});
    j["meta"] = {{"seed", s.meta->seed},
                 {"region_side_m", s.meta->region_side},
                 {"path_loss_exponent", s.meta->path_loss_exponent},
                 {"min_distance_m", s.meta->min_distance},
                 {"base_station_m", {s.meta->base_station[0], s.meta->base_station[1]}},
                 {"positions_m", std::move(positions)}};
  }
  return j;
}

Scenario scenario_from_json(const Json& j) {
  expect_keys(j, {"bandwidth_hz", "users", "meta"}, "scenario");
  Scenario s;
  s.bandwidth = num(j, "bandwidth_hz", "scenario");
  const Json& users = field(j, "users", "scenario");
  if (!users.is_array() || users.empty())
    throw ParseError("scenario \"users\" must be a nonempty array");
  for (const Json& uj : users) {
    expect_keys(uj,
                {"transmit_power_w", "channel_gain", "background_power_w",
                 "input_bits", "cycles", "local_freq_hz", "cloud_freq_hz",
                 "weight_time", "weight_energy", "energy_per_cycle_j"},
                "scenario user");
    UserProfile u;
    u.transmit_power = num(uj, "transmit_power_w", "scenario user");
    u.channel_gain = num(uj, "channel_gain", "scenario user");
    u.background_power = num(uj, "background_power_w", "scenario user");
    u.input_bits = num(uj, "input_bits", "scenario user");
    u.cycles = num(uj, "cycles", "scenario user");
    u.local_freq = num(uj, "local_freq_hz", "scenario user");
    u.cloud_freq = num(uj, "cloud_freq_hz", "scenario user");
    u.weight_time = num(uj, "weight_time", "scenario user");
    u.weight_energy = num(uj, "weight_energy", "scenario user");
    u.energy_per_cycle = num(uj, "energy_per_cycle_j", "scenario user");
    s.users.push_back(u);
  }
  if (j.contains("meta")) {
    const Json& mj = j.at("meta");
    expect_keys(mj,
                {"seed", "region_side_m", "path_loss_exponent", "min_distance_m",
                 "base_station_m", "positions_m"},
                "scenario meta");
    ScenarioMeta meta;
    meta.seed = uint_or(mj, "seed", "scenario meta", 0);
    meta.region_side = num_or(mj, "region_side_m", "scenario meta", 0.0);
    meta.path_loss_exponent = num_or(mj, "path_loss_exponent", "scenario meta", 0.0);
    meta.min_distance = num_or(mj, "min_distance_m", "scenario meta", 0.0);
    if (mj.contains("base_station_m")) {
      const Json& b = mj.at("base_station_m");
      if (!b.is_array() || b.size() != 2)
        throw ParseError("scenario meta \"base_station_m\" must be [x, y]");
      meta.base_station = {b[0].get<double>(), b[1].get<double>()};
    }
    if (mj.contains("positions_m")) {
      for (const Json& p : mj.at("positions_m")) {
        if (!p.is_array() || p.size() != 2)
          throw ParseError("scenario meta \"positions_m\" entries must be [x, y]");
        meta.positions.push_back({p[0].get<double>(), p[1].get<double>()});
      }
    }
    s.meta = std::move(meta);
  }
  s.validate();
  return s;
}

Json generator_spec_to_json(const GeneratorSpec& g) {
  return {{"users", g.users},
          {"seed", g.seed},
          {"region_side_m", g.region_side},
          {"min_distance_m", g.min_distance},
          {"path_loss_exponent", g.path_loss_exponent},
          {"bandwidth_hz", g.bandwidth},
          {"transmit_power_w", g.transmit_power},
          {"background_power_w", g.background_power},
          {"input_bits", g.input_bits},
          {"cycles", g.cycles},
          {"local_freq_choices_hz", g.local_freq_choices},
          {"cloud_freq_hz", g.cloud_freq},
          {"weight_time", g.weight_time},
          {"weight_energy", g.weight_energy},
          {"energy_per_cycle_j", g.energy_per_cycle}};
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  expect_keys(j,
              {"users", "seed", "region_side_m", "min_distance_m",
               "path_loss_exponent", "bandwidth_hz", "transmit_power_w",
               "background_power_w", "input_bits", "cycles",
               "local_freq_choices_hz", "cloud_freq_hz", "weight_time",
               "weight_energy", "energy_per_cycle_j"},
              "generator spec");
  GeneratorSpec g;
  g.users = static_cast<std::size_t>(uint_or(j, "users", "generator spec", 0));
  g.seed = uint_or(j, "seed", "generator spec", 0);
  g.region_side = num_or(j, "region_side_m", "generator spec", g.region_side);
  g.min_distance = num_or(j, "min_distance_m", "generator spec", g.min_distance);
  g.path_loss_exponent =
      num_or(j, "path_loss_exponent", "generator spec", g.path_loss_exponent);
  g.bandwidth = num_or(j, "bandwidth_hz", "generator spec", g.bandwidth);
  g.transmit_power = num_or(j, "transmit_power_w", "generator spec", g.transmit_power);
  g.background_power =
      num_or(j, "background_power_w", "generator spec", g.background_power);
  g.input_bits = num_or(j, "input_bits", "generator spec", g.input_bits);
  g.cycles = num_or(j, "cycles", "generator spec", g.cycles);
  if (j.contains("local_freq_choices_hz")) {
    const Json& arr = j.at("local_freq_choices_hz");
    if (!arr.is_array() || arr.empty())
      throw ParseError("generator spec \"local_freq_choices_hz\" must be a nonempty array");
    g.local_freq_choices.clear();
    for (const Json& f : arr) {
      if (!f.is_number())
        throw ParseError("generator spec \"local_freq_choices_hz\" entries must be numbers");
      g.local_freq_choices.push_back(f.get<double>());
    }
  }
  g.cloud_freq = num_or(j, "cloud_freq_hz", "generator spec", g.cloud_freq);
  g.weight_time = num_or(j, "weight_time", "generator spec", g.weight_time);
  g.weight_energy = num_or(j, "weight_energy", "generator spec", g.weight_energy);
  g.energy_per_cycle =
      num_or(j, "energy_per_cycle_j", "generator spec", g.energy_per_cycle);
  return g;
}

Json mechanism_config_to_json(const MechanismConfig& c) {
  return {{"quiet_slots", c.quiet_slots},
          {"contention", contention_mode_name(c.contention)},
          {"seed", c.seed},
          {"max_slots", c.max_slots}};
}

MechanismConfig mechanism_config_from_json(const Json& j) {
  expect_keys(j, {"quiet_slots", "contention", "seed", "max_slots"},
              "mechanism config");
  MechanismConfig c;
  c.quiet_slots = int_or(j, "quiet_slots", "mechanism config", c.quiet_slots);
  if (j.contains("contention")) {
    const Json& v = j.at("contention");
    if (!v.is_string())
      throw ParseError("mechanism config \"contention\" must be a string");
    c.contention = contention_mode_from_name(v.get<std::string>());
  }
  c.seed = uint_or(j, "seed", "mechanism config", c.seed);
  c.max_slots = int_or(j, "max_slots", "mechanism config", c.max_slots);
  return c;
}

Json trace_summary_json(const MechanismTrace& t) {
  const MessageLedger ledger = message_ledger(t);
  double final_potential = t.initial_potential;
  double final_cost = t.initial_cost;
  if (!t.slots.empty()) {
    final_potential = t.slots.back().potential;
    final_cost = t.slots.back().system_cost;
  }
  return {{"slots", static_cast<std::int64_t>(t.slots.size())},
          {"updates", t.update_count},
          {"converged", t.converged},
          {"initial_profile", t.initial_profile.to_string()},
          {"final_profile", t.final_profile.to_string()},
          {"initial_potential", t.initial_potential},
          {"final_potential", final_potential},
          {"initial_cost", t.initial_cost},
          {"final_cost", final_cost},
          {"messages",
           {{"pilots", t.pilot_messages},
            {"enquiries", ledger.enquiries},
            {"replies", ledger.replies},
            {"update_broadcasts", ledger.update_broadcasts},
            {"ledger_total", ledger.total}}}};
}

Json optimum_to_json(const Optimum& o) {
  return {{"profile", o.profile.to_string()}, {"cost", o.cost}};
}

Json report_to_json(const EquilibriumReport& r) {
  return {{"optimum", {{"profile", r.optimum_profile.to_string()}, {"cost", r.optimum_cost}}},
          {"equilibria",
           {{"count", static_cast<std::int64_t>(r.equilibrium_count)},
            {"best", {{"profile", r.best_equilibrium.to_string()}, {"cost", r.best_equilibrium_cost}}},
            {"worst", {{"profile", r.worst_equilibrium.to_string()}, {"cost", r.worst_equilibrium_cost}}}}},
          {"price_of_anarchy", r.price_of_anarchy},
          {"price_of_anarchy_bound", r.price_of_anarchy_bound},
          {"baselines", {{"all_local", r.all_local_cost}, {"all_cloud", r.all_cloud_cost}}}};
}

Json homogeneous_report_json(const Scenario& s) {
  const HomogeneousView v = homogeneous_view(s);
  Json order = Json::array();
  for (const auto& e : v.order)
    order.push_back({{"user", e.user}, {"threshold_over_k", e.ratio}});
  Json group = Json::array();
  if (v.order[0].ratio >= 0.0)
    for (std::size_t user : beneficial_group(v)) group.push_back(user);
  const DecisionProfile eq = homogeneous_equilibrium(s);
  return {{"common_power_w", v.common_power},
          {"order", std::move(order)},
          {"beneficial_group", std::move(group)},
          {"equilibrium_profile", eq.to_string()},
          {"is_nash", is_nash(s, eq)}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failure on " + path);
}

Json load_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path));
}

}  // namespace mco

// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/experiments.hpp"

#include <filesystem>
#include <optional>

#include "core/benchmark.hpp"
#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/game.hpp"
#include "core/svg.hpp"

namespace mco {

namespace {

Json conventions_json() {
  return {
      {"cost_unit", "preference-weighted mix of seconds and joules"},
      {"messages",
       {{"decentralized_per_update", 3},
        {"decentralized_rule",
         "one interference enquiry, one reply and one update broadcast per "
         "decision update; pilot transmissions are recorded in traces but "
         "never counted"},
        {"centralized_per_user", 7},
        {"centralized_rule",
         "each user reports seven scalars to the scheduler: received power, "
         "background power, input size, cycle count, device CPU rate, energy "
         "per cycle, and its time/energy weight split"}}},
      {"seeding",
       "trial seed = base seed + global trial index; the trial seed drives "
       "both placement and contention"},
      {"csv", "RFC 4180, CRLF line ends, '.' decimal point, shortest "
              "round-trip numbers"}};
}

struct TrialOutcome {
  Scenario scenario;
  MechanismTrace trace;
  double mech_cost = 0.0;
  Baselines base;
};

// Every experiment trial must end in a verified equilibrium; anything else
// is an implementation bug worth failing loudly on.
TrialOutcome run_trial(GeneratorSpec g, MechanismConfig m, std::uint64_t seed) {
  g.seed = seed;
  m.seed = seed;
  TrialOutcome out;
  out.scenario = generate_scenario(g);
  out.trace = run_mechanism(out.scenario, m);
  if (!out.trace.converged || !is_nash(out.scenario, out.trace.final_profile))
    throw Error("mechanism run did not reach an equilibrium (seed " +
                format_u64(seed) + ")");
  out.mech_cost = system_cost(out.scenario, out.trace.final_profile);
  out.base = baselines(out.scenario);
  return out;
}

std::vector<std::string> names(const std::vector<ColumnSpec>& schema) {
  std::vector<std::string> out;
  out.reserve(schema.size());
  for (const auto& c : schema) out.push_back(c.name);
  return out;
}

Json schema_to_json(const std::vector<ColumnSpec>& schema) {
  Json arr = Json::array();
  for (const auto& c : schema)
    arr.push_back({{"name", c.name},
                   {"type", c.type},
                   {"unit", c.unit},
                   {"description", c.description}});
  return arr;
}

std::vector<ColumnSpec> schema_from_json(const Json& j) {
  std::vector<ColumnSpec> out;
  for (const Json& cj : j)
    out.push_back({cj.at("name").get<std::string>(), cj.at("type").get<std::string>(),
                   cj.at("unit").get<std::string>(),
                   cj.at("description").get<std::string>()});
  return out;
}

std::size_t column_index(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  throw InvalidArgumentError("no column named " + name);
}

std::optional<double> cell_number(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c))
    return static_cast<double>(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  return std::nullopt;
}

std::vector<Series> chart_series(const ExperimentResult& r);

std::string chart_for(const ExperimentResult& r) {
  if (r.id == "convergence")
    return render_line_chart("Per-user cost by decision slot", "decision slot",
                             "cost", chart_series(r));
  if (r.id == "sweep_d")
    return render_line_chart("Mean system cost by task cycle count", "task cycles",
                             "cost", chart_series(r));
  if (r.id == "sweep_b")
    return render_line_chart("Mean system cost by task input size", "input bits",
                             "cost", chart_series(r));
  return render_line_chart("Mean system cost by user count", "users", "cost",
                           chart_series(r));
}

std::vector<Series> chart_series(const ExperimentResult& r) {
  std::vector<Series> series;
  auto add_series = [&](const Table& t, const std::string& x_col,
                        const std::string& y_col, const std::string& label) {
    const std::size_t xi = column_index(t, x_col);
    const std::size_t yi = column_index(t, y_col);
    Series s;
    s.label = label;
    for (const auto& row : t.rows) {
      const auto x = cell_number(row[xi]);
      const auto y = cell_number(row[yi]);
      if (x && y) s.points.emplace_back(*x, *y);
    }
    series.push_back(std::move(s));
  };
  if (r.id == "convergence") {
    constexpr std::size_t kMaxUsers = 8;  // keep the chart legible
    for (std::size_t n = 0; n < kMaxUsers; ++n) {
      const std::string col = "cost_user_" + format_u64(n);
      bool have = false;
      for (const auto& c : r.rows.columns) have |= (c == col);
      if (!have) break;
      add_series(r.rows, "slot", col, "user " + format_u64(n));
    }
    return series;
  }
  if (r.id == "sweep_d") {
    add_series(r.aggregates, "cycles", "mean_mech_cost", "mechanism");
    add_series(r.aggregates, "cycles", "mean_all_local_cost", "all local");
    add_series(r.aggregates, "cycles", "mean_all_cloud_cost", "all cloud");
    return series;
  }
  if (r.id == "sweep_b") {
    add_series(r.aggregates, "input_bits", "mean_mech_cost", "mechanism");
    add_series(r.aggregates, "input_bits", "mean_all_local_cost", "all local");
    add_series(r.aggregates, "input_bits", "mean_all_cloud_cost", "all cloud");
    return series;
  }
  add_series(r.aggregates, "users", "mean_mech_cost", "mechanism");
  add_series(r.aggregates, "users", "mean_optimum_cost", "optimum");
  add_series(r.aggregates, "users", "mean_all_local_cost", "all local");
  add_series(r.aggregates, "users", "mean_all_cloud_cost", "all cloud");
  return series;
}

}  // namespace

ExperimentResult experiment_convergence(const GeneratorSpec& g, const MechanismConfig& m) {
  const TrialOutcome outcome = run_trial(g, m, g.seed);
  const std::size_t n_users = outcome.scenario.users.size();

  ExperimentResult r;
  r.id = "convergence";
  r.base_seed = g.seed;
  r.config = {{"generator", generator_spec_to_json(g)},
              {"mechanism", mechanism_config_to_json(m)}};
  r.conventions = conventions_json();

  r.row_schema = {
      {"slot", "integer", "", "decision slot index, starting at 0"},
      {"winner", "string", "", "id of the user that updated; empty on quiet slots"},
      {"profile", "string", "", "decision bits after the slot, user 0 first"},
      {"potential", "number", "", "potential after the slot"},
      {"system_cost", "number", "cost", "sum of per-user costs after the slot"},
      {"messages", "integer", "", "ledger messages this slot (3 per update)"},
      {"pilots", "integer", "", "pilot transmissions this slot; not in the ledger"},
  };
  for (std::size_t n = 0; n < n_users; ++n)
    r.row_schema.push_back({"cost_user_" + format_u64(n), "number", "cost",
                            "cost of user " + format_u64(n) + " after the slot"});
  r.rows.columns = names(r.row_schema);
  for (const SlotRecord& rec : outcome.trace.slots) {
    std::vector<Cell> row{rec.slot,
                          rec.winner ? Cell(format_u64(*rec.winner)) : Cell(std::string()),
                          rec.profile.to_string(),
                          rec.potential,
                          rec.system_cost,
                          rec.enquiry_messages + rec.reply_messages + rec.rtu_messages,
                          rec.pilot_messages};
    for (std::size_t n = 0; n < n_users; ++n) row.emplace_back(rec.overhead[n]);
    r.rows.add_row(std::move(row));
  }

  r.aggregate_schema = {
      {"slots", "integer", "", "total decision slots simulated"},
      {"updates", "integer", "", "decision updates performed"},
      {"converged", "integer", "", "1 when the quiet-slot exit fired"},
      {"initial_cost", "number", "cost", "system cost of the all-offload start"},
      {"final_cost", "number", "cost", "system cost at the final profile"},
      {"initial_potential", "number", "", "potential of the all-offload start"},
      {"final_potential", "number", "", "potential at the final profile"},
  };
  r.aggregates.columns = names(r.aggregate_schema);
  const auto& trace = outcome.trace;
  const double final_potential =
      trace.slots.empty() ? trace.initial_potential : trace.slots.back().potential;
  const double final_cost =
      trace.slots.empty() ? trace.initial_cost : trace.slots.back().system_cost;
  r.aggregates.add_row({static_cast<std::int64_t>(trace.slots.size()),
                        trace.update_count, std::int64_t{trace.converged ? 1 : 0},
                        trace.initial_cost, final_cost, trace.initial_potential,
                        final_potential});
  return r;
}

namespace {

// Shared skeleton of the two parameter sweeps.
ExperimentResult sweep_parameter(const std::string& id, const std::string& param_col,
                                 const std::string& param_unit,
                                 const std::string& param_desc,
                                 const GeneratorSpec& g, const MechanismConfig& m,
                                 const std::vector<double>& grid, std::size_t trials,
                                 void (*apply)(GeneratorSpec&, double)) {
  if (grid.empty()) throw InvalidArgumentError("sweep grid must not be empty");
  if (trials < 1) throw InvalidArgumentError("trials must be >= 1");

  ExperimentResult r;
  r.id = id;
  r.base_seed = g.seed;
  r.config = {{"generator", generator_spec_to_json(g)},
              {"mechanism", mechanism_config_to_json(m)},
              {"grid", grid},
              {"trials", trials}};
  r.conventions = conventions_json();

  r.row_schema = {
      {param_col, "number", param_unit, param_desc},
      {"trial", "integer", "", "trial index within the grid point"},
      {"seed", "integer", "", "derived seed: base seed + global trial index"},
      {"mech_cost", "number", "cost", "system cost at the mechanism's equilibrium"},
      {"all_local_cost", "number", "cost", "system cost when every user computes locally"},
      {"all_cloud_cost", "number", "cost", "system cost when every user offloads"},
      {"updates", "integer", "", "decision updates until convergence"},
      {"slots", "integer", "", "decision slots simulated"},
  };
  r.rows.columns = names(r.row_schema);
  r.aggregate_schema = {
      {param_col, "number", param_unit, param_desc},
      {"trials", "integer", "", "trials at this grid point"},
      {"mean_mech_cost", "number", "cost", "mean mechanism cost over trials"},
      {"mean_all_local_cost", "number", "cost", "mean all-local cost over trials"},
      {"mean_all_cloud_cost", "number", "cost", "mean all-cloud cost over trials"},
      {"mean_updates", "number", "", "mean decision updates over trials"},
  };
  r.aggregates.columns = names(r.aggregate_schema);

  std::size_t global = 0;
  for (double value : grid) {
    double sum_mech = 0.0, sum_local = 0.0, sum_cloud = 0.0, sum_updates = 0.0;
    for (std::size_t t = 0; t < trials; ++t, ++global) {
      GeneratorSpec g2 = g;
      apply(g2, value);
      const std::uint64_t seed = g.seed + global;
      const TrialOutcome outcome = run_trial(g2, m, seed);
      sum_mech += outcome.mech_cost;
      sum_local += outcome.base.all_local;
      sum_cloud += outcome.base.all_cloud;
      sum_updates += static_cast<double>(outcome.trace.update_count);
      r.rows.add_row({value, static_cast<std::int64_t>(t),
                      static_cast<std::int64_t>(seed), outcome.mech_cost,
                      outcome.base.all_local, outcome.base.all_cloud,
                      outcome.trace.update_count,
                      static_cast<std::int64_t>(outcome.trace.slots.size())});
    }
    const double inv = 1.0 / static_cast<double>(trials);
    r.aggregates.add_row({value, static_cast<std::int64_t>(trials), sum_mech * inv,
                          sum_local * inv, sum_cloud * inv, sum_updates * inv});
  }
  return r;
}

}  // namespace

ExperimentResult experiment_sweep_cycles(const GeneratorSpec& g, const MechanismConfig& m,
                                         const std::vector<double>& cycles_grid,
                                         std::size_t trials) {
  return sweep_parameter("sweep_d", "cycles", "CPU cycles",
                         "task execution demand shared by all users", g, m,
                         cycles_grid, trials,
                         [](GeneratorSpec& spec, double v) { spec.cycles = v; });
}

ExperimentResult experiment_sweep_bits(const GeneratorSpec& g, const MechanismConfig& m,
                                       const std::vector<double>& bits_grid,
                                       std::size_t trials) {
  return sweep_parameter("sweep_b", "input_bits", "bits",
                         "task input size shared by all users", g, m, bits_grid,
                         trials,
                         [](GeneratorSpec& spec, double v) { spec.input_bits = v; });
}

ExperimentResult experiment_scaling(const GeneratorSpec& g, const MechanismConfig& m,
                                    const ScalingOptions& opt) {
  if (opt.users_grid.empty()) throw InvalidArgumentError("users grid must not be empty");
  if (opt.trials < 1) throw InvalidArgumentError("trials must be >= 1");

  ExperimentResult r;
  r.id = "scaling";
  r.base_seed = g.seed;
  r.config = {{"generator", generator_spec_to_json(g)},
              {"mechanism", mechanism_config_to_json(m)},
              {"users_grid", opt.users_grid},
              {"trials", opt.trials},
              {"compute_optimum", opt.compute_optimum},
              {"exhaustive_cap", opt.exhaustive_cap}};
  r.conventions = conventions_json();

  r.row_schema = {
      {"users", "integer", "", "number of users in the cell"},
      {"trial", "integer", "", "trial index within the grid point"},
      {"seed", "integer", "", "derived seed: base seed + global trial index"},
      {"mech_cost", "number", "cost", "system cost at the mechanism's equilibrium"},
      {"optimum_cost", "number", "cost",
       "centralized minimum system cost; empty when its computation is off"},
      {"all_local_cost", "number", "cost", "system cost when every user computes locally"},
      {"all_cloud_cost", "number", "cost", "system cost when every user offloads"},
      {"updates", "integer", "", "decision updates until convergence"},
      {"slots", "integer", "", "decision slots simulated"},
      {"mech_messages", "integer", "", "decentralized ledger total, 3 per update"},
      {"centralized_messages", "integer", "", "centralized convention total, 7 per user"},
  };
  r.rows.columns = names(r.row_schema);
  r.aggregate_schema = {
      {"users", "integer", "", "number of users in the cell"},
      {"trials", "integer", "", "trials at this grid point"},
      {"mean_mech_cost", "number", "cost", "mean mechanism cost over trials"},
      {"mean_optimum_cost", "number", "cost",
       "mean centralized optimum; empty when its computation is off"},
      {"cost_ratio", "number", "",
       "mean mechanism cost over mean optimum cost; empty when the optimum is off"},
      {"mean_all_local_cost", "number", "cost", "mean all-local cost over trials"},
      {"mean_all_cloud_cost", "number", "cost", "mean all-cloud cost over trials"},
      {"mean_updates", "number", "", "mean decision updates over trials"},
      {"mean_mech_messages", "number", "", "mean decentralized ledger total"},
      {"centralized_messages", "integer", "", "centralized convention total, 7 per user"},
  };
  r.aggregates.columns = names(r.aggregate_schema);

  std::size_t global = 0;
  for (std::size_t n_users : opt.users_grid) {
    if (n_users < 1) throw InvalidArgumentError("users grid entries must be >= 1");
    double sum_mech = 0.0, sum_opt = 0.0, sum_local = 0.0, sum_cloud = 0.0;
    double sum_updates = 0.0, sum_messages = 0.0;
    const std::int64_t centralized = 7 * static_cast<std::int64_t>(n_users);
    for (std::size_t t = 0; t < opt.trials; ++t, ++global) {
      GeneratorSpec g2 = g;
      g2.users = n_users;
      const std::uint64_t seed = g.seed + global;
      const TrialOutcome outcome = run_trial(g2, m, seed);
      const MessageLedger ledger = message_ledger(outcome.trace);

      Cell optimum_cell{};
      if (opt.compute_optimum) {
        const Optimum best = centralized_optimum(outcome.scenario, opt.exhaustive_cap);
        sum_opt += best.cost;
        optimum_cell = best.cost;
      }
      sum_mech += outcome.mech_cost;
      sum_local += outcome.base.all_local;
      sum_cloud += outcome.base.all_cloud;
      sum_updates += static_cast<double>(outcome.trace.update_count);
      sum_messages += static_cast<double>(ledger.total);
      r.rows.add_row({static_cast<std::int64_t>(n_users), static_cast<std::int64_t>(t),
                      static_cast<std::int64_t>(seed), outcome.mech_cost, optimum_cell,
                      outcome.base.all_local, outcome.base.all_cloud,
                      outcome.trace.update_count,
                      static_cast<std::int64_t>(outcome.trace.slots.size()),
                      ledger.total, centralized});
    }
    const double inv = 1.0 / static_cast<double>(opt.trials);
    Cell mean_opt{};
    Cell ratio{};
    if (opt.compute_optimum) {
      mean_opt = sum_opt * inv;
      ratio = (sum_mech * inv) / (sum_opt * inv);
    }
    r.aggregates.add_row({static_cast<std::int64_t>(n_users),
                          static_cast<std::int64_t>(opt.trials), sum_mech * inv,
                          mean_opt, ratio, sum_local * inv, sum_cloud * inv,
                          sum_updates * inv, sum_messages * inv, centralized});
  }
  return r;
}

Json result_to_json(const ExperimentResult& r) {
  auto table_json = [](const Table& t, const std::vector<ColumnSpec>& schema) {
    Json data = Json::array();
    for (const auto& row : t.rows) {
      Json jr = Json::array();
      for (const Cell& c : row) {
        switch (c.index()) {
          case 0: jr.push_back(nullptr); break;
          case 1: jr.push_back(std::get<std::int64_t>(c)); break;
          case 2: jr.push_back(std::get<double>(c)); break;
          default: jr.push_back(std::get<std::string>(c)); break;
        }
      }
      data.push_back(std::move(jr));
    }
    return Json{{"columns", t.columns}, {"schema", schema_to_json(schema)},
                {"data", std::move(data)}};
  };
  return {{"id", r.id},
          {"base_seed", r.base_seed},
          {"config", r.config},
          {"conventions", r.conventions},
          {"rows", table_json(r.rows, r.row_schema)},
          {"aggregates", table_json(r.aggregates, r.aggregate_schema)}};
}

ExperimentResult result_from_json(const Json& j) {
  auto table_from = [](const Json& tj, Table& t, std::vector<ColumnSpec>& schema) {
    t.columns = tj.at("columns").get<std::vector<std::string>>();
    schema = schema_from_json(tj.at("schema"));
    for (const Json& jr : tj.at("data")) {
      std::vector<Cell> row;
      for (const Json& c : jr) {
        if (c.is_null())
          row.emplace_back(std::monostate{});
        else if (c.is_number_integer() || c.is_number_unsigned())
          row.emplace_back(c.get<std::int64_t>());
        else if (c.is_number_float())
          row.emplace_back(c.get<double>());
        else if (c.is_string())
          row.emplace_back(c.get<std::string>());
        else
          throw ParseError("experiment result cells must be null, number or string");
      }
      t.add_row(std::move(row));
    }
  };
  try {
    ExperimentResult r;
    r.id = j.at("id").get<std::string>();
    r.base_seed = j.at("base_seed").get<std::uint64_t>();
    r.config = j.at("config");
    r.conventions = j.at("conventions");
    table_from(j.at("rows"), r.rows, r.row_schema);
    table_from(j.at("aggregates"), r.aggregates, r.aggregate_schema);
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed experiment result: ") + e.what());
  }
}

std::vector<std::string> emit(const ExperimentResult& r, const std::string& out_dir,
                              bool with_svg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir + ": " + ec.message());

  const std::string seed_text = format_u64(r.base_seed);
  const std::string rows_base = r.id + "_" + seed_text;
  const std::string agg_base = r.id + "_agg_" + seed_text;
  auto path = [&](const std::string& name) {
    return (fs::path(out_dir) / name).string();
  };

  auto schema_json = [&](const std::string& csv_name,
                         const std::vector<ColumnSpec>& schema) {
    return Json{{"file", csv_name},
                {"experiment", r.id},
                {"base_seed", r.base_seed},
                {"columns", schema_to_json(schema)},
                {"conventions", r.conventions}};
  };

  std::vector<std::string> written;
  auto write = [&](const std::string& name, const std::string& text) {
    const std::string p = path(name);
    write_text_file(p, text);
    written.push_back(p);
  };

  write(rows_base + ".csv", r.rows.to_csv());
  write(agg_base + ".csv", r.aggregates.to_csv());
  write(rows_base + ".schema.json",
        schema_json(rows_base + ".csv", r.row_schema).dump(2) + "\n");
  write(agg_base + ".schema.json",
        schema_json(agg_base + ".csv", r.aggregate_schema).dump(2) + "\n");
  write(rows_base + ".json", result_to_json(r).dump(2) + "\n");
  if (with_svg) write(rows_base + ".svg", chart_for(r));
  return written;
}

}  // namespace mco

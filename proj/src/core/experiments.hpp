// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/generator.hpp"
#include "core/json_io.hpp"
#include "core/mechanism.hpp"
#include "core/table.hpp"

namespace mco {

struct ColumnSpec {
  std::string name;
  std::string type;  // "integer" | "number" | "string"
  std::string unit;  // empty when dimensionless
  std::string description;
};

// Self-describing experiment output: per-trial rows plus aggregates, the
// resolved configuration for reproduction, and the accounting conventions
// that make the message columns meaningful. (base seed, config) fixes every
// byte of the emitted files.
struct ExperimentResult {
  std::string id;
  std::uint64_t base_seed = 0;
  Json config;
  Json conventions;
  std::vector<ColumnSpec> row_schema;
  std::vector<ColumnSpec> aggregate_schema;
  Table rows;
  Table aggregates;
};

// One mechanism run on one generated scenario; rows are per-slot
// trajectories (per-user cost, potential, system cost, messages).
ExperimentResult experiment_convergence(const GeneratorSpec& g, const MechanismConfig& m);

// Mechanism vs all-local cost across a grid of task cycle counts.
ExperimentResult experiment_sweep_cycles(const GeneratorSpec& g, const MechanismConfig& m,
                                         const std::vector<double>& cycles_grid,
                                         std::size_t trials);

// Mechanism vs all-cloud cost across a grid of task input sizes.
ExperimentResult experiment_sweep_bits(const GeneratorSpec& g, const MechanismConfig& m,
                                       const std::vector<double>& bits_grid,
                                       std::size_t trials);

struct ScalingOptions {
  std::vector<std::size_t> users_grid = {2, 4, 6, 8, 10, 12, 14, 16};
  std::size_t trials = 30;
  // The optimum column is the expensive part; switch it off for large-N
  // update-count studies.
  bool compute_optimum = true;
  std::size_t exhaustive_cap = 20;
};

// Cost vs the centralized optimum and both uniform baselines, update
// counts, and message totals under both accounting conventions, per user
// count.
ExperimentResult experiment_scaling(const GeneratorSpec& g, const MechanismConfig& m,
                                    const ScalingOptions& opt);

// Writes <id>_<seed>.csv, <id>_agg_<seed>.csv, matching .schema.json
// sidecars, <id>_<seed>.json (the full result, consumable by
// result_from_json) and optionally <id>_<seed>.svg into out_dir. Returns
// the written paths in that order.
std::vector<std::string> emit(const ExperimentResult& r, const std::string& out_dir,
                              bool with_svg);

Json result_to_json(const ExperimentResult& r);
ExperimentResult result_from_json(const Json& j);

}  // namespace mco

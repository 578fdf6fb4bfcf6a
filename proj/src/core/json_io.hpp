// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>

#include <json.hpp>

#include "core/benchmark.hpp"
#include "core/generator.hpp"
#include "core/mechanism.hpp"
#include "core/model.hpp"

namespace mco {

using Json = nlohmann::json;

// Parsing is strict: unknown keys, wrong types and missing required fields
// all raise ParseError with the offending key in the message.

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

Json generator_spec_to_json(const GeneratorSpec& g);
GeneratorSpec generator_spec_from_json(const Json& j);

Json mechanism_config_to_json(const MechanismConfig& c);
MechanismConfig mechanism_config_from_json(const Json& j);

Json trace_summary_json(const MechanismTrace& t);
Json optimum_to_json(const Optimum& o);
Json report_to_json(const EquilibriumReport& r);

// View, group and constructed equilibrium for a homogeneous scenario;
// group is empty when every user prefers local execution.
Json homogeneous_report_json(const Scenario& s);

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

const char* contention_mode_name(ContentionMode m);
ContentionMode contention_mode_from_name(const std::string& name);

}  // namespace mco

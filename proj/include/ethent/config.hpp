// Copyright 2026 The ethent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Strict JSON (de)serialization of experiment configs. Keys mirror the
// struct field names in snake_case. Unknown keys, wrong types, and values
// that fail validation raise ConfigError naming the field.

#include <string_view>

#include <json.hpp>

#include "ethent/experiments.hpp"

namespace ethent {

using Json = nlohmann::ordered_json;

/// Parses text into a JSON object; ConfigError on malformed input or a
/// non-object document.
Json parse_config_document(std::string_view text);

/// Macro config from JSON text. `{}` yields the default Fig. 2 baseline.
MacroConfig load_macro_config(std::string_view text);
MicroConfig load_micro_config(std::string_view text);

Json to_json(const MacroConfig& config);
Json to_json(const MicroConfig& config);
Json to_json(const SimulateConfig& config);
Json to_json(const Figure2Config& config);
Json to_json(const PhaseConfig& config);
Json to_json(const AblationConfig& config);
Json to_json(const SensitivityConfig& config);
Json to_json(const MicroExperimentConfig& config);

SimulateConfig parse_simulate_config(const Json& doc);
Figure2Config parse_figure2_config(const Json& doc);
PhaseConfig parse_phase_config(const Json& doc);
AblationConfig parse_ablation_config(const Json& doc);
SensitivityConfig parse_sensitivity_config(const Json& doc);
MicroExperimentConfig parse_micro_config(const Json& doc);
/// Table 1 takes no parameters; only `{}` is accepted.
void parse_table1_config(const Json& doc);

}  // namespace ethent

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

/**
 * @file experiments.hpp
 * @brief Canned experiment drivers.
 *
 * Each driver takes a fully resolved config and returns an ExperimentReport
 * holding the config it ran (`inputs`), named results (`outputs`), and the
 * text of every file it wants emitted. Nothing touches the filesystem until
 * write_report() is called, and a report is reproducible bit-for-bit from its
 * inputs.
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ethent/macro.hpp"
#include "ethent/micro.hpp"
#include "ethent/threshold.hpp"

namespace ethent {

struct Artifact {
  std::string file_name;
  std::string content;
};

struct ExperimentReport {
  std::string name;
  nlohmann::ordered_json inputs;   // {"experiment", "defaults_version", "config"}
  nlohmann::ordered_json outputs;  // named scalars and small series
  std::vector<Artifact> artifacts;

  /// {"experiment", "outputs", "artifacts": [file names]}.
  nlohmann::ordered_json summary() const;
};

struct SimulateConfig {
  MacroConfig macro;
  /// Unset: full ensemble. Set: that single trial's trajectory.
  std::optional<std::size_t> trial_index;
};

struct Figure2Config {
  MacroConfig baseline;  // regularized arm differs only in gamma
  double regularized_gamma = 0.0;
};

struct PhaseConfig {
  double n_min = 1e6;
  double n_max = 1e12;
  std::size_t n_count = 50;
  double gamma_min = 0.0;
  double gamma_max = 40.0;
  std::size_t gamma_count = 50;
  double lambda_max = 1.2;
  double operating_n = 7e9;
  double operating_gamma = 20.4;
};

struct AblationConfig {
  MacroConfig combined;  // xi of this config is the combined-arm xi
  double xi_noise_only = 0.0;
  double xi_gaming_only = 0.0;
};

struct SensitivityConfig {
  MacroConfig baseline;  // trials, seed, xi, horizon; rates are the calibration targets
  double regularized_gamma = 0.0;
  double eta = 0.0;
  double sigma_eps2 = 0.0;
  double lambda_max = 0.0;
  double n_params = 0.0;
  /// tr(Sigma) = trace_per_variance * sigma_eps^2.
  double trace_per_variance = 1.0;
  std::vector<double> proxy_dist;
  std::vector<double> true_dist;
  std::vector<double> perturbations;
};

struct MicroExperimentConfig {
  MicroConfig micro;
  std::size_t n_seeds = 100;
};

SimulateConfig default_simulate_config();
Figure2Config default_figure2_config();
PhaseConfig default_phase_config();
AblationConfig default_ablation_config();
SensitivityConfig default_sensitivity_config();
MicroExperimentConfig default_micro_config();

ExperimentReport run_simulate(const SimulateConfig& config, unsigned threads = 0);
ExperimentReport run_figure2(const Figure2Config& config, unsigned threads = 0);
ExperimentReport run_table1();
ExperimentReport run_figure3(const PhaseConfig& config);
ExperimentReport run_ablation(const AblationConfig& config, unsigned threads = 0);
ExperimentReport run_sensitivity(const SensitivityConfig& config,
                                 unsigned threads = 0);
ExperimentReport run_micro_experiment(const MicroExperimentConfig& config,
                                      unsigned threads = 0);

/// Ensemble over `n_seeds` micro trials; time axis is the step index.
EnsembleSummary run_micro_ensemble(const MicroConfig& config, std::size_t n_seeds,
                                   unsigned threads = 0);

/// Table 1 rows: formula value next to the printed one.
struct Table1Row {
  std::string system;
  double n_params;
  double lambda_max;
  double gamma_crit_formula;
  double gamma_crit_printed;
  double delta_pct;  // (printed - formula) / formula * 100
};
std::vector<Table1Row> table1_rows();

/// Experiments reachable by name: simulate, figure2, table1, phase, ablate,
/// sensitivity, micro.
bool is_experiment(std::string_view name);

/// Parses `config_json` strictly for experiment `name` (unknown keys are
/// errors; omitted keys take defaults), applies `seed_override`, and runs.
/// The document may also be a previously written inputs.json. Throws
/// ConfigError on parse or validation failure.
ExperimentReport run_experiment(std::string_view name, std::string_view config_json,
                                std::optional<std::uint64_t> seed_override,
                                unsigned threads = 0);

/// Writes every artifact plus inputs.json into `dir` (created if absent) and
/// returns the written paths. Throws IoError.
std::vector<std::filesystem::path> write_report(const ExperimentReport& report,
                                                const std::filesystem::path& dir);

}  // namespace ethent

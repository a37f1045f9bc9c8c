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

#include "ethent/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "ethent/config.hpp"
#include "ethent/defaults.hpp"
#include "ethent/error.hpp"
#include "ethent/format.hpp"
#include "ethent/production.hpp"
#include "ethent/rng.hpp"
#include "ethent/stats.hpp"
#include "ethent/svg.hpp"
#include "parallel.hpp"

namespace ethent {

namespace {

constexpr const char* kBaselineColor = "#d62728";
constexpr const char* kRegularizedColor = "#1f77b4";

ExperimentReport make_report(std::string name, Json config) {
  ExperimentReport report;
  report.name = std::move(name);
  report.inputs = Json::object();
  report.inputs["experiment"] = report.name;
  report.inputs["defaults_version"] = std::string(defaults::kVersion);
  report.inputs["config"] = std::move(config);
  report.outputs = Json::object();
  return report;
}

Json ensemble_json(const EnsembleSummary& summary) {
  Json j = Json::object();
  j["final_mean"] = summary.final_mean;
  j["final_std"] = summary.final_std;
  j["final_values"] = summary.final_values;
  return j;
}

Json ttest_json(const TTestResult& t) {
  Json j = Json::object();
  // +/-inf t only arises in the flagged degenerate case; JSON has no infinity.
  if (std::isfinite(t.t_stat)) {
    j["t_stat"] = t.t_stat;
  } else {
    j["t_stat"] = t.t_stat > 0 ? "inf" : "-inf";
  }
  j["df"] = t.df;
  j["p_two_sided"] = t.p_two_sided;
  j["degenerate"] = t.degenerate;
  return j;
}

std::vector<double> step_axis(std::size_t points) {
  std::vector<double> x(points);
  for (std::size_t k = 0; k < points; ++k) x[k] = static_cast<double>(k);
  return x;
}

void add_ensemble_band(SvgPlot& plot, const EnsembleSummary& e, double s_max,
                       const std::string& color, const std::string& label) {
  const std::vector<double> x = step_axis(e.mean_path.size());
  std::vector<double> lo(e.mean_path.size());
  std::vector<double> hi(e.mean_path.size());
  for (std::size_t k = 0; k < lo.size(); ++k) {
    lo[k] = std::max(0.0, e.mean_path[k] - e.std_path[k]);
    hi[k] = std::min(s_max, e.mean_path[k] + e.std_path[k]);
  }
  plot.band(x, lo, hi, color, 0.2);
  plot.line(x, e.mean_path, color, label);
}

// Deterministic final value of a config with its diffusion switched off.
double noiseless_final(MacroConfig config) {
  config.xi = 0.0;
  config.trials = 1;
  return simulate_trial(config, 0).s_values.back();
}

double relative(double residual, double scale) {
  return scale == 0.0 ? std::abs(residual) : std::abs(residual / scale);
}

}  // namespace

Json ExperimentReport::summary() const {
  Json j = Json::object();
  j["experiment"] = name;
  j["outputs"] = outputs;
  Json files = Json::array();
  for (const Artifact& a : artifacts) files.push_back(a.file_name);
  files.push_back("inputs.json");
  j["artifacts"] = std::move(files);
  return j;
}

SimulateConfig default_simulate_config() {
  return SimulateConfig{defaults::figure2_baseline(), std::nullopt};
}

Figure2Config default_figure2_config() {
  return Figure2Config{defaults::figure2_baseline(), defaults::kRegularizedGamma};
}

PhaseConfig default_phase_config() {
  PhaseConfig c;
  c.lambda_max = defaults::kLambdaMax;
  c.operating_n = defaults::kParamCount;
  c.operating_gamma = defaults::kRegularizedGamma;
  return c;
}

AblationConfig default_ablation_config() {
  return AblationConfig{defaults::figure2_baseline(), defaults::kXiNoiseOnly,
                        defaults::kXiGamingOnly};
}

SensitivityConfig default_sensitivity_config() {
  SensitivityConfig c;
  c.baseline = defaults::figure2_baseline();
  c.baseline.trials = defaults::kSensitivityTrials;
  c.regularized_gamma = defaults::kRegularizedGamma;
  c.eta = defaults::kLearningRate;
  c.sigma_eps2 = defaults::kNoiseVariance;
  c.lambda_max = defaults::kLambdaMax;
  c.n_params = defaults::kParamCount;
  c.trace_per_variance = 1.0;
  c.proxy_dist.assign(defaults::kProxyDist.begin(), defaults::kProxyDist.end());
  c.true_dist.assign(defaults::kTrueDist.begin(), defaults::kTrueDist.end());
  c.perturbations.assign(defaults::kPerturbations.begin(),
                         defaults::kPerturbations.end());
  return c;
}

MicroExperimentConfig default_micro_config() {
  return MicroExperimentConfig{defaults::micro(), defaults::kMicroSeeds};
}

ExperimentReport run_simulate(const SimulateConfig& config, unsigned threads) {
  config.macro.validate();
  ExperimentReport report = make_report("simulate", to_json(config));
  report.outputs["drift"] = drift(config.macro.s0, config.macro);
  if (config.trial_index) {
    if (*config.trial_index >= config.macro.trials) {
      throw InvalidArgument("trial_index: must be < trials");
    }
    const Trajectory traj = simulate_trial(config.macro, *config.trial_index);
    report.outputs["trial_index"] = *config.trial_index;
    report.outputs["final_s"] = traj.s_values.back();
    report.artifacts.push_back({"simulate_trial.csv", traj.to_csv()});
  } else {
    const EnsembleSummary e = run_ensemble(config.macro, threads);
    report.outputs["ensemble"] = ensemble_json(e);
    report.artifacts.push_back({"simulate_ensemble.csv", e.to_csv()});
  }
  return report;
}

ExperimentReport run_figure2(const Figure2Config& config, unsigned threads) {
  config.baseline.validate();
  MacroConfig regularized = config.baseline;
  regularized.gamma = config.regularized_gamma;
  regularized.validate();

  const EnsembleSummary base = run_ensemble(config.baseline, threads);
  const EnsembleSummary reg = run_ensemble(regularized, threads);
  // Regularized first so that t < 0 when alignment work lowers entropy.
  const TTestResult t = pooled_t_test(reg.final_values, base.final_values);

  ExperimentReport report = make_report("figure2", to_json(config));
  report.outputs["baseline"] = ensemble_json(base);
  report.outputs["regularized"] = ensemble_json(reg);
  report.outputs["ttest"] = ttest_json(t);

  SvgPlot plot("Ethical entropy S(t)", "optimization step", "S (nats)",
               {0.0, static_cast<double>(config.baseline.steps)},
               {0.0, config.baseline.s_max});
  add_ensemble_band(plot, base, config.baseline.s_max, kBaselineColor,
                    "baseline (gamma = " + format_double(config.baseline.gamma) + ")");
  add_ensemble_band(plot, reg, config.baseline.s_max, kRegularizedColor,
                    "regularized (gamma = " + format_double(regularized.gamma) + ")");

  report.artifacts.push_back({"figure2_baseline.csv", base.to_csv()});
  report.artifacts.push_back({"figure2_regularized.csv", reg.to_csv()});
  report.artifacts.push_back({"figure2.svg", plot.render()});
  return report;
}

std::vector<Table1Row> table1_rows() {
  struct Entry {
    const char* system;
    double n;
    double lambda;
    double printed;
  };
  static constexpr Entry kEntries[] = {
      {"LLM-7B", 7e9, 1.2, 13.64},
      {"RLHF-13B", 13e9, 2.5, 29.58},
      {"Multimodal-50B", 50e9, 3.0, 37.78},
  };
  std::vector<Table1Row> rows;
  for (const Entry& e : kEntries) {
    const double formula = gamma_crit({e.n, e.lambda});
    rows.push_back({e.system, e.n, e.lambda, formula, e.printed,
                    (e.printed - formula) / formula * 100.0});
  }
  return rows;
}

ExperimentReport run_table1() {
  ExperimentReport report = make_report("table1", Json::object());
  std::string csv = "system,N,lambda_max,gamma_crit_formula,gamma_crit_paper,delta_pct\n";
  Json rows = Json::array();
  double max_delta = 0.0;
  for (const Table1Row& r : table1_rows()) {
    csv += r.system + "," + format_double(r.n_params) + "," + format_double(r.lambda_max) +
           "," + format_double(r.gamma_crit_formula) + "," +
           format_double(r.gamma_crit_printed) + "," + format_double(r.delta_pct) + "\n";
    Json row = Json::object();
    row["system"] = r.system;
    row["N"] = r.n_params;
    row["lambda_max"] = r.lambda_max;
    row["gamma_crit_formula"] = r.gamma_crit_formula;
    row["gamma_crit_printed"] = r.gamma_crit_printed;
    row["delta_pct"] = r.delta_pct;
    rows.push_back(std::move(row));
    max_delta = std::max(max_delta, std::abs(r.delta_pct));
  }
  report.outputs["rows"] = std::move(rows);
  report.outputs["max_abs_delta_pct"] = max_delta;
  report.artifacts.push_back({"table1.csv", std::move(csv)});
  return report;
}

ExperimentReport run_figure3(const PhaseConfig& config) {
  const PhaseGrid grid =
      phase_grid(log_space(config.n_min, config.n_max, config.n_count),
                 lin_space(config.gamma_min, config.gamma_max, config.gamma_count),
                 config.lambda_max);
  const SystemScale operating{config.operating_n, config.lambda_max};

  ExperimentReport report = make_report("figure3", to_json(config));
  report.outputs["operating_gamma_crit"] = gamma_crit(operating);
  report.outputs["operating_label"] =
      std::string(to_string(classify_stability(config.operating_gamma, operating)));

  // First stable gamma row per N column; null when the column never stabilizes.
  Json boundary = Json::array();
  bool monotone = true;
  for (std::size_t j = 0; j < grid.n_axis.size(); ++j) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < grid.gamma_axis.size(); ++i) {
      const bool stable = grid.at(i, j) == Stability::kStable;
      if (stable && !first) first = i;
      if (!stable && first) monotone = false;
    }
    if (first) {
      boundary.push_back(*first);
    } else {
      boundary.push_back(nullptr);
    }
  }
  report.outputs["boundary_row_index"] = std::move(boundary);
  report.outputs["monotone_in_gamma"] = monotone;

  const double n_lo = grid.n_axis.front();
  const double n_hi = grid.n_axis.size() > 1 ? grid.n_axis.back() : n_lo * 10.0;
  const double g_lo = grid.gamma_axis.front();
  const double g_hi =
      grid.gamma_axis.size() > 1 ? grid.gamma_axis.back() : g_lo + 1.0;
  SvgPlot plot("Alignment stability regions", "model size N (parameters)",
               "alignment work gamma (nats / unit time)", {n_lo, n_hi, true},
               {g_lo, g_hi});

  // Cell edges sit halfway between neighbouring axis points (geometric in N).
  auto edges = [](const std::vector<double>& axis, bool geometric, double lo,
                  double hi) {
    std::vector<double> e(axis.size() + 1);
    e.front() = lo;
    e.back() = hi;
    for (std::size_t k = 1; k < axis.size(); ++k) {
      e[k] = geometric ? std::sqrt(axis[k - 1] * axis[k]) : 0.5 * (axis[k - 1] + axis[k]);
    }
    return e;
  };
  const std::vector<double> n_edges = edges(grid.n_axis, true, n_lo, n_hi);
  const std::vector<double> g_edges = edges(grid.gamma_axis, false, g_lo, g_hi);
  for (std::size_t i = 0; i < grid.gamma_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.n_axis.size(); ++j) {
      const bool stable = grid.at(i, j) == Stability::kStable;
      plot.rect(n_edges[j], n_edges[j + 1], g_edges[i], g_edges[i + 1],
                stable ? kRegularizedColor : kBaselineColor, 0.35);
    }
  }
  const std::vector<double> curve_n = log_space(n_lo, n_hi, 200);
  std::vector<double> curve_gamma(curve_n.size());
  for (std::size_t k = 0; k < curve_n.size(); ++k) {
    curve_gamma[k] = gamma_crit({curve_n[k], config.lambda_max});
  }
  plot.line(curve_n, curve_gamma, "black",
            "gamma_crit = " + format_double(config.lambda_max / 2.0) + " ln N");
  plot.marker(config.operating_n, config.operating_gamma, "gold",
              "operating point (gamma = " + format_double(config.operating_gamma) + ")");

  report.artifacts.push_back({"figure3_grid.csv", grid.to_csv()});
  report.artifacts.push_back({"figure3.svg", plot.render()});
  return report;
}

ExperimentReport run_ablation(const AblationConfig& config, unsigned threads) {
  config.combined.validate();
  MacroConfig noise_only = config.combined;
  noise_only.sigma_gaming_rate = 0.0;
  noise_only.xi = config.xi_noise_only;
  MacroConfig gaming_only = config.combined;
  gaming_only.sigma_noise_rate = 0.0;
  gaming_only.xi = config.xi_gaming_only;
  const MacroConfig& combined = config.combined;

  struct Arm {
    const char* name;
    const MacroConfig* config;
    EnsembleSummary ensemble;
    double drift = 0.0;
    double noiseless_final = 0.0;
  };
  Arm arms[] = {{"noise_only", &noise_only, {}}, {"gaming_only", &gaming_only, {}},
                {"combined", &combined, {}}};

  ExperimentReport report = make_report("ablation", to_json(config));
  Json arms_json = Json::object();
  for (Arm& arm : arms) {
    arm.ensemble = run_ensemble(*arm.config, threads);
    arm.drift = drift(arm.config->s0, *arm.config);
    arm.noiseless_final = noiseless_final(*arm.config);
    Json j = ensemble_json(arm.ensemble);
    j["drift"] = arm.drift;
    j["xi"] = arm.config->xi;
    j["noiseless_final"] = arm.noiseless_final;
    arms_json[arm.name] = std::move(j);
    report.artifacts.push_back(
        {std::string("ablation_") + arm.name + ".csv", arm.ensemble.to_csv()});
  }
  report.outputs["arms"] = std::move(arms_json);

  const double s0 = combined.s0;
  const Arm& n = arms[0];
  const Arm& g = arms[1];
  const Arm& c = arms[2];
  // With gamma > 0 each arm pays the full alignment work, so the additive
  // reference subtracts it once.
  const double drift_residual = c.drift - (n.drift + g.drift + combined.gamma);
  const double noiseless_residual = (c.noiseless_final - s0) -
                                    ((n.noiseless_final - s0) + (g.noiseless_final - s0));
  const double ensemble_residual =
      (c.ensemble.final_mean - s0) -
      ((n.ensemble.final_mean - s0) + (g.ensemble.final_mean - s0));
  Json add = Json::object();
  add["drift_residual"] = drift_residual;
  add["drift_residual_rel"] = relative(drift_residual, c.drift);
  add["noiseless_mean_residual"] = noiseless_residual;
  add["noiseless_mean_residual_rel"] = relative(noiseless_residual, c.noiseless_final - s0);
  add["ensemble_mean_residual"] = ensemble_residual;
  add["ensemble_mean_residual_rel"] =
      relative(ensemble_residual, c.ensemble.final_mean - s0);
  report.outputs["additivity"] = std::move(add);
  return report;
}

ExperimentReport run_sensitivity(const SensitivityConfig& config,
                                 unsigned threads) {
  config.baseline.validate();
  const GoalDistribution proxy(config.proxy_dist);
  const GoalDistribution truth(config.true_dist);

  // Gains map the per-step formula rates onto the calibrated macro rates at
  // the unperturbed point; perturbations then propagate through the formulas.
  const double raw_noise = sigma_noise(config.eta, config.lambda_max,
                                       config.trace_per_variance * config.sigma_eps2);
  const double raw_gaming = sigma_gaming(config.eta, proxy, truth);
  const double noise_gain = raw_noise > 0.0 ? config.baseline.sigma_noise_rate / raw_noise : 0.0;
  const double gaming_gain =
      raw_gaming > 0.0 ? config.baseline.sigma_gaming_rate / raw_gaming : 0.0;

  struct Point {
    double eta, sigma_eps2, lambda_max;
  };
  auto rates = [&](const Point& p) {
    MacroConfig m = config.baseline;
    m.sigma_noise_rate =
        noise_gain * sigma_noise(p.eta, p.lambda_max, config.trace_per_variance * p.sigma_eps2);
    m.sigma_gaming_rate = gaming_gain * sigma_gaming(p.eta, proxy, truth);
    return m;
  };
  const Point center{config.eta, config.sigma_eps2, config.lambda_max};
  const MacroConfig center_config = rates(center);
  const EnsembleSummary center_run = run_ensemble(center_config, threads);
  const double center_mean = center_run.final_mean;

  ExperimentReport report = make_report("sensitivity", to_json(config));
  report.outputs["noise_gain"] = noise_gain;
  report.outputs["gaming_gain"] = gaming_gain;
  report.outputs["unperturbed_final_mean"] = center_mean;
  report.outputs["unperturbed_sigma_noise_rate"] = center_config.sigma_noise_rate;
  report.outputs["unperturbed_sigma_gaming_rate"] = center_config.sigma_gaming_rate;

  std::string csv =
      "parameter,perturbation,value,sigma_noise_rate,sigma_gaming_rate,final_mean,"
      "final_std,regularized_final_mean,dynamic_label,formula_label\n";
  Json params = Json::object();
  const char* kNames[] = {"eta", "sigma_eps2", "lambda_max"};
  const double kReported[] = {12.3, 9.8, 14.1};
  for (int which = 0; which < 3; ++which) {
    std::vector<double> means;
    std::vector<std::string> dynamic_labels;
    std::vector<std::string> formula_labels;
    Json rows = Json::array();
    for (double delta : config.perturbations) {
      Point p = center;
      double* target = which == 0 ? &p.eta : which == 1 ? &p.sigma_eps2 : &p.lambda_max;
      *target *= 1.0 + delta;
      const MacroConfig base_arm = rates(p);
      MacroConfig reg_arm = base_arm;
      reg_arm.gamma = config.regularized_gamma;
      const EnsembleSummary b = run_ensemble(base_arm, threads);
      const EnsembleSummary r = run_ensemble(reg_arm, threads);
      // Dynamically stable: alignment work held entropy at or below its start.
      const std::string dynamic = r.final_mean <= reg_arm.s0 ? "stable" : "drift";
      const std::string formula(to_string(
          classify_stability(config.regularized_gamma, {config.n_params, p.lambda_max})));
      means.push_back(b.final_mean);
      dynamic_labels.push_back(dynamic);
      formula_labels.push_back(formula);

      csv += std::string(kNames[which]) + "," + format_double(delta) + "," +
             format_double(*target) + "," + format_double(base_arm.sigma_noise_rate) + "," +
             format_double(base_arm.sigma_gaming_rate) + "," + format_double(b.final_mean) +
             "," + format_double(b.final_std) + "," + format_double(r.final_mean) + "," +
             dynamic + "," + formula + "\n";
      Json row = Json::object();
      row["perturbation"] = delta;
      row["value"] = *target;
      row["final_mean"] = b.final_mean;
      row["final_std"] = b.final_std;
      row["regularized_final_mean"] = r.final_mean;
      row["dynamic_label"] = dynamic;
      row["formula_label"] = formula;
      rows.push_back(std::move(row));
    }
    const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    Json j = Json::object();
    j["variation_pct"] = (*hi - *lo) / center_mean * 100.0;
    j["reported_variation_pct"] = kReported[which];
    j["dynamic_flip"] = std::adjacent_find(dynamic_labels.begin(), dynamic_labels.end(),
                                           std::not_equal_to<>()) != dynamic_labels.end();
    j["formula_flip"] = std::adjacent_find(formula_labels.begin(), formula_labels.end(),
                                           std::not_equal_to<>()) != formula_labels.end();
    j["rows"] = std::move(rows);
    params[kNames[which]] = std::move(j);
  }
  report.outputs["parameters"] = std::move(params);
  report.artifacts.push_back({"sensitivity_sweep.csv", std::move(csv)});
  return report;
}

EnsembleSummary run_micro_ensemble(const MicroConfig& config, std::size_t n_seeds,
                                   unsigned threads) {
  config.validate();
  if (n_seeds == 0) throw InvalidArgument("n_seeds: must be >= 1");
  std::vector<std::vector<double>> paths(n_seeds);
  detail::parallel_for(n_seeds, threads, [&](std::size_t i) {
    MicroConfig c = config;
    c.seed = substream_seed(config.seed, i);
    paths[i] = run_micro(c).s_values;
  });
  EnsembleSummary summary;
  summary.dt = 1.0;
  const std::size_t points = config.steps + 1;
  summary.mean_path.resize(points);
  summary.std_path.resize(points);
  std::vector<double> column(n_seeds);
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t i = 0; i < n_seeds; ++i) column[i] = paths[i][k];
    const MeanStd ms = mean_std(column);
    summary.mean_path[k] = ms.mean;
    summary.std_path[k] = ms.std;
  }
  summary.final_values = column;
  summary.final_mean = summary.mean_path.back();
  summary.final_std = summary.std_path.back();
  return summary;
}

ExperimentReport run_micro_experiment(const MicroExperimentConfig& config,
                                      unsigned threads) {
  config.micro.validate();
  ExperimentReport report = make_report("micro", to_json(config));
  const MicroTrajectory single = run_micro(config.micro);
  const EnsembleSummary ensemble = run_micro_ensemble(config.micro, config.n_seeds, threads);
  const double s_initial = single.s_values.front();
  report.outputs["initial_entropy"] = s_initial;
  report.outputs["trajectory_final_entropy"] = single.s_values.back();
  report.outputs["ensemble_final_mean"] = ensemble.final_mean;
  report.outputs["ensemble_final_std"] = ensemble.final_std;

  const bool checkable = config.micro.align_strength == 0.0 &&
                         s_initial < max_entropy(config.micro.n_goals) - 0.1;
  if (checkable) {
    const SecondLawReport law = second_law_check(config.micro, config.n_seeds, threads);
    Json j = Json::object();
    j["fraction_increased"] = law.fraction_increased;
    j["mean_delta_s"] = law.mean_delta_s;
    j["sign_test_p"] = law.sign_test_p;
    report.outputs["second_law"] = std::move(j);
  } else {
    report.outputs["second_law"] = nullptr;
  }
  report.artifacts.push_back({"micro_trajectory.csv", single.to_csv()});
  report.artifacts.push_back({"micro_ensemble.csv", ensemble.to_csv()});
  return report;
}

namespace {

struct Route {
  std::string_view cli_name;
  std::string_view report_name;
};

constexpr Route kRoutes[] = {
    {"simulate", "simulate"}, {"figure2", "figure2"},       {"table1", "table1"},
    {"phase", "figure3"},     {"ablate", "ablation"},       {"sensitivity", "sensitivity"},
    {"micro", "micro"},
};

const Route* find_route(std::string_view name) {
  for (const Route& r : kRoutes) {
    if (r.cli_name == name || r.report_name == name) return &r;
  }
  return nullptr;
}

// Unwraps a previously written inputs.json; other documents pass through.
Json config_section(const Json& doc, const Route& route) {
  if (!doc.contains("experiment")) return doc;
  for (const auto& [key, value] : doc.items()) {
    if (key != "experiment" && key != "defaults_version" && key != "config") {
      throw ConfigError(key, "unknown key in inputs document");
    }
  }
  const Json& experiment = doc["experiment"];
  if (!experiment.is_string()) throw ConfigError("experiment", "must be a string");
  const Route* recorded = find_route(experiment.get<std::string>());
  if (!recorded || recorded->report_name != route.report_name) {
    throw ConfigError("experiment", "inputs were recorded for '" +
                                        experiment.get<std::string>() + "', not '" +
                                        std::string(route.report_name) + "'");
  }
  if (!doc.contains("config")) return Json::object();
  if (!doc["config"].is_object()) throw ConfigError("config", "must be an object");
  return doc["config"];
}

}  // namespace

bool is_experiment(std::string_view name) { return find_route(name) != nullptr; }

ExperimentReport run_experiment(std::string_view name, std::string_view config_json,
                                std::optional<std::uint64_t> seed_override,
                                unsigned threads) {
  const Route* route = find_route(name);
  if (!route) throw InvalidArgument("unknown experiment '" + std::string(name) + "'");
  const Json doc = config_section(
      parse_config_document(config_json.empty() ? std::string_view("{}") : config_json),
      *route);

  const std::string_view id = route->report_name;
  if (id == "simulate") {
    SimulateConfig c = parse_simulate_config(doc);
    if (seed_override) c.macro.master_seed = *seed_override;
    return run_simulate(c, threads);
  }
  if (id == "figure2") {
    Figure2Config c = parse_figure2_config(doc);
    if (seed_override) c.baseline.master_seed = *seed_override;
    return run_figure2(c, threads);
  }
  if (id == "table1") {
    parse_table1_config(doc);
    return run_table1();
  }
  if (id == "figure3") return run_figure3(parse_phase_config(doc));
  if (id == "ablation") {
    AblationConfig c = parse_ablation_config(doc);
    if (seed_override) c.combined.master_seed = *seed_override;
    return run_ablation(c, threads);
  }
  if (id == "sensitivity") {
    SensitivityConfig c = parse_sensitivity_config(doc);
    if (seed_override) c.baseline.master_seed = *seed_override;
    return run_sensitivity(c, threads);
  }
  MicroExperimentConfig c = parse_micro_config(doc);
  if (seed_override) c.micro.seed = *seed_override;
  return run_micro_experiment(c, threads);
}

std::vector<std::filesystem::path> write_report(const ExperimentReport& report,
                                                const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& file_name, const std::string& content) {
    const std::filesystem::path path = dir / file_name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("failed to write '" + path.string() + "'");
    written.push_back(path);
  };
  for (const Artifact& a : report.artifacts) write(a.file_name, a.content);
  write("inputs.json", report.inputs.dump(2) + "\n");
  return written;
}

}  // namespace ethent

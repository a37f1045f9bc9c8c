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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ethent/config.hpp"
#include "ethent/defaults.hpp"
#include "ethent/error.hpp"

namespace ethent {
namespace {

namespace fs = std::filesystem;

const Artifact* find(const ExperimentReport& r, const std::string& name) {
  for (const Artifact& a : r.artifacts) {
    if (a.file_name == name) return &a;
  }
  return nullptr;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ethent_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Table1Test, RowsAgainstFormula) {
  const std::vector<Table1Row> rows = table1_rows();
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].system, "LLM-7B");
  EXPECT_NEAR(rows[0].gamma_crit_formula, 13.60, 0.005);
  EXPECT_EQ(rows[0].gamma_crit_printed, 13.64);
  EXPECT_NEAR(rows[0].delta_pct, 0.3, 0.05);
  EXPECT_NEAR(rows[1].gamma_crit_formula, 29.11, 0.005);
  EXPECT_NEAR(rows[1].delta_pct, 1.6, 0.05);
  EXPECT_NEAR(rows[2].gamma_crit_formula, 36.95, 0.005);
  EXPECT_NEAR(rows[2].delta_pct, 2.2, 0.05);
  for (const Table1Row& r : rows) {
    EXPECT_NEAR(r.gamma_crit_formula, r.lambda_max / 2.0 * std::log(r.n_params), 1e-12);
    EXPECT_LE(std::abs(r.delta_pct), 2.5);
  }
}

TEST(Table1Test, CsvHeader) {
  const ExperimentReport r = run_table1();
  const Artifact* csv = find(r, "table1.csv");
  ASSERT_NE(csv, nullptr);
  EXPECT_EQ(csv->content.substr(0, csv->content.find('\n')),
            "system,N,lambda_max,gamma_crit_formula,gamma_crit_paper,delta_pct");
  EXPECT_EQ(std::count(csv->content.begin(), csv->content.end(), '\n'), 4);
}

TEST(Figure2Test, ArmsAndStatistics) {
  const ExperimentReport r = run_figure2(default_figure2_config(), 0);
  EXPECT_EQ(r.name, "figure2");
  EXPECT_EQ(r.outputs["regularized"]["final_mean"].get<double>(), 0.0);
  EXPECT_EQ(r.outputs["regularized"]["final_std"].get<double>(), 0.0);
  const double mean = r.outputs["baseline"]["final_mean"].get<double>();
  const double std = r.outputs["baseline"]["final_std"].get<double>();
  EXPECT_GE(mean, 1.3);
  EXPECT_LE(mean, 2.1);
  EXPECT_GE(std, 0.6);
  EXPECT_LE(std, 1.5);
  EXPECT_EQ(r.outputs["ttest"]["df"].get<int>(), 38);
  EXPECT_LT(r.outputs["ttest"]["t_stat"].get<double>(), 0.0);
  EXPECT_LT(r.outputs["ttest"]["p_two_sided"].get<double>(), 1e-10);
  for (const char* name : {"figure2_baseline.csv", "figure2_regularized.csv", "figure2.svg"}) {
    EXPECT_NE(find(r, name), nullptr) << name;
  }
  EXPECT_EQ(find(r, "figure2.svg")->content.rfind("<svg", 0), 0u);
}

TEST(Figure2Test, ArmsDifferOnlyInGamma) {
  const ExperimentReport r = run_figure2(default_figure2_config(), 0);
  nlohmann::ordered_json config = r.inputs["config"];
  EXPECT_EQ(config["gamma"].get<double>(), 0.0);
  EXPECT_EQ(config["regularized_gamma"].get<double>(), 20.4);
  Figure2Config parsed = parse_figure2_config(config);
  MacroConfig regularized = parsed.baseline;
  regularized.gamma = parsed.regularized_gamma;
  nlohmann::ordered_json a = to_json(parsed.baseline);
  nlohmann::ordered_json b = to_json(regularized);
  a.erase("gamma");
  b.erase("gamma");
  EXPECT_EQ(a, b);
}

TEST(ReplayTest, InputsReproduceArtifactsBitForBit) {
  const ExperimentReport first = run_experiment("figure2", "{}", std::nullopt, 1);
  const ExperimentReport again =
      run_experiment("figure2", first.inputs.dump(2), std::nullopt, 4);
  ASSERT_EQ(first.artifacts.size(), again.artifacts.size());
  for (std::size_t i = 0; i < first.artifacts.size(); ++i) {
    EXPECT_EQ(first.artifacts[i].file_name, again.artifacts[i].file_name);
    EXPECT_EQ(first.artifacts[i].content, again.artifacts[i].content);
  }
  EXPECT_EQ(first.outputs, again.outputs);
  EXPECT_EQ(first.inputs, again.inputs);
}

TEST(ReplayTest, SeedOverrideIsRecorded) {
  const ExperimentReport r =
      run_experiment("simulate", R"({"steps": 100, "trials": 3})", 99, 1);
  EXPECT_EQ(r.inputs["config"]["master_seed"].get<std::uint64_t>(), 99u);
  EXPECT_EQ(r.inputs["defaults_version"].get<std::string>(), defaults::kVersion);
  const ExperimentReport replay = run_experiment("simulate", r.inputs.dump(), std::nullopt, 1);
  EXPECT_EQ(r.artifacts[0].content, replay.artifacts[0].content);
}

TEST(RunExperimentTest, RejectsUnknownAndMismatched) {
  EXPECT_THROW(run_experiment("nope", "{}", std::nullopt), InvalidArgument);
  const ExperimentReport t = run_table1();
  EXPECT_THROW(run_experiment("figure2", t.inputs.dump(), std::nullopt), ConfigError);
  EXPECT_THROW(run_experiment("figure2", R"({"dt": -1})", std::nullopt), ConfigError);
  EXPECT_TRUE(is_experiment("phase"));
  EXPECT_TRUE(is_experiment("ablate"));
  EXPECT_FALSE(is_experiment("entropy"));
}

TEST(SimulateTest, SingleTrialMatchesMacroLayer) {
  SimulateConfig c = default_simulate_config();
  c.macro.steps = 400;
  c.trial_index = 2;
  const ExperimentReport r = run_simulate(c, 1);
  ASSERT_NE(find(r, "simulate_trial.csv"), nullptr);
  EXPECT_EQ(find(r, "simulate_trial.csv")->content, simulate_trial(c.macro, 2).to_csv());
}

TEST(Figure3Test, OperatingPointAndBoundary) {
  const ExperimentReport r = run_figure3(default_phase_config());
  EXPECT_EQ(r.outputs["operating_label"].get<std::string>(), "stable");
  EXPECT_NEAR(r.outputs["operating_gamma_crit"].get<double>(), 13.60, 0.01);
  EXPECT_TRUE(r.outputs["monotone_in_gamma"].get<bool>());
  const PhaseConfig c = default_phase_config();
  const std::vector<double> n_axis = log_space(c.n_min, c.n_max, c.n_count);
  const std::vector<double> gamma_axis = lin_space(c.gamma_min, c.gamma_max, c.gamma_count);
  const auto& rows = r.outputs["boundary_row_index"];
  ASSERT_EQ(rows.size(), n_axis.size());
  for (std::size_t j = 0; j < n_axis.size(); ++j) {
    const double boundary = 0.6 * std::log(n_axis[j]);
    const std::size_t i = rows[j].get<std::size_t>();
    // First stable row: at or above the curve, with the row below it under.
    EXPECT_GE(gamma_axis[i], boundary);
    if (i > 0) {
      EXPECT_LT(gamma_axis[i - 1], boundary);
    }
  }
  const std::string& grid = find(r, "figure3_grid.csv")->content;
  EXPECT_EQ(std::count(grid.begin(), grid.end(), '\n'), 2501);
  EXPECT_NE(find(r, "figure3.svg"), nullptr);
}

TEST(AblationTest, ArmsAndAdditivity) {
  const ExperimentReport r = run_ablation(default_ablation_config(), 0);
  const auto& arms = r.outputs["arms"];
  EXPECT_NEAR(arms["noise_only"]["noiseless_final"].get<double>(), 1.12, 1e-9);
  EXPECT_NEAR(arms["gaming_only"]["noiseless_final"].get<double>(), 0.89, 1e-9);
  EXPECT_NEAR(arms["combined"]["noiseless_final"].get<double>(), 1.69, 1e-9);
  const double sum = arms["noise_only"]["drift"].get<double>() +
                     arms["gaming_only"]["drift"].get<double>();
  EXPECT_NEAR(arms["combined"]["drift"].get<double>(), sum, 1e-15);
  EXPECT_LE(std::abs(r.outputs["additivity"]["drift_residual_rel"].get<double>()), 0.02);
  EXPECT_LE(std::abs(r.outputs["additivity"]["noiseless_mean_residual_rel"].get<double>()),
            0.02);
  for (const char* name :
       {"ablation_noise_only.csv", "ablation_gaming_only.csv", "ablation_combined.csv"}) {
    EXPECT_NE(find(r, name), nullptr) << name;
  }
}

TEST(SensitivityTest, UnperturbedArmMatchesFigure2Baseline) {
  const SensitivityConfig sc = default_sensitivity_config();
  const ExperimentReport s = run_sensitivity(sc, 0);
  EXPECT_EQ(s.outputs["unperturbed_sigma_noise_rate"].get<double>(), defaults::kNoiseRate);
  EXPECT_EQ(s.outputs["unperturbed_sigma_gaming_rate"].get<double>(), defaults::kGamingRate);

  MacroConfig fig2 = default_figure2_config().baseline;
  fig2.trials = sc.baseline.trials;
  EXPECT_EQ(to_json(fig2), to_json(sc.baseline));
  const double expected = run_ensemble(fig2, 0).final_mean;
  EXPECT_EQ(s.outputs["unperturbed_final_mean"].get<double>(), expected);

  for (const char* p : {"eta", "sigma_eps2", "lambda_max"}) {
    const auto& param = s.outputs["parameters"][p];
    EXPECT_TRUE(std::isfinite(param["variation_pct"].get<double>())) << p;
    EXPECT_FALSE(param["dynamic_flip"].get<bool>()) << p;
    ASSERT_EQ(param["rows"].size(), 5u);
    EXPECT_EQ(param["rows"][2]["final_mean"].get<double>(), expected) << p;
  }
  EXPECT_EQ(s.outputs["parameters"]["eta"]["reported_variation_pct"].get<double>(), 12.3);
  EXPECT_NE(find(s, "sensitivity_sweep.csv"), nullptr);
}

TEST(MicroExperimentTest, SecondLawOutputs) {
  MicroExperimentConfig c = default_micro_config();
  c.n_seeds = 30;
  c.micro.steps = 2000;
  const ExperimentReport r = run_micro_experiment(c, 0);
  EXPECT_GE(r.outputs["second_law"]["fraction_increased"].get<double>(), 0.95);
  EXPECT_LT(r.outputs["second_law"]["sign_test_p"].get<double>(), 0.01);
  ASSERT_NE(find(r, "micro_trajectory.csv"), nullptr);
  ASSERT_NE(find(r, "micro_ensemble.csv"), nullptr);
  EXPECT_EQ(find(r, "micro_ensemble.csv")->content.rfind("step,time,mean,std\n", 0), 0u);
}

TEST(WriteReportTest, WritesEveryArtifactAndInputs) {
  TempDir dir;
  const ExperimentReport r = run_table1();
  const std::vector<fs::path> written = write_report(r, dir.path() / "nested" / "out");
  ASSERT_EQ(written.size(), r.artifacts.size() + 1);
  EXPECT_EQ(slurp(dir.path() / "nested" / "out" / "table1.csv"), r.artifacts[0].content);
  EXPECT_EQ(nlohmann::ordered_json::parse(
                slurp(dir.path() / "nested" / "out" / "inputs.json")),
            r.inputs);
}

TEST(WriteReportTest, UnwritableDirectoryIsIoError) {
  TempDir dir;
  fs::create_directories(dir.path());
  std::ofstream(dir.path() / "file") << "x";
  EXPECT_THROW(write_report(run_table1(), dir.path() / "file" / "sub"), IoError);
}

}  // namespace
}  // namespace ethent

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

// ethent command-line driver. Talks to the library only through the C API.
//
// Exit codes: 0 success, 2 usage, 3 config, 4 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ethent/ethent.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "ethent_out";
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  unsigned threads = 0;
};

struct CliError {
  int exit_code;
  std::string message;
};

std::string format_number(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ec == std::errc{} ? end : buf);
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first < last && *first == ' ') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw CliError{kExitUsage, std::string(flag) + ": '" + item + "' is not a number"};
    }
    values.push_back(v);
  }
  if (values.empty()) throw CliError{kExitUsage, std::string(flag) + ": empty list"};
  return values;
}

void check(ethent_status status, int exit_code) {
  if (status != ETHENT_OK) throw CliError{exit_code, ethent_last_error()};
}

int exit_code_for(ethent_status status) {
  switch (status) {
    case ETHENT_ERR_IO: return kExitIo;
    case ETHENT_ERR_CONFIG:
    case ETHENT_ERR_INVALID_ARGUMENT:
    case ETHENT_ERR_INFINITE_DIVERGENCE: return kExitConfig;
    default: return 1;
  }
}

/// Prints name/value pairs as `name,value` lines or one JSON object.
void print_values(const std::vector<std::pair<std::string, Json>>& values,
                  const CommonOptions& opts) {
  if (opts.format == "json") {
    Json j = Json::object();
    for (const auto& [k, v] : values) j[k] = v;
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : values) {
    if (v.is_number_float()) {
      std::cout << k << "," << format_number(v.get<double>()) << "\n";
    } else if (v.is_string()) {
      std::cout << k << "," << v.get<std::string>() << "\n";
    } else {
      std::cout << k << "," << v.dump() << "\n";
    }
  }
}

std::string read_config(const CommonOptions& opts) {
  if (opts.config_path.empty()) return "{}";
  std::ifstream in(opts.config_path, std::ios::binary);
  if (!in) throw CliError{kExitConfig, "cannot read config '" + opts.config_path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Applies flag overrides to a config document, inside "config" when the
/// document is a recorded inputs.json.
std::string with_overrides(const std::string& text, const Json& overrides) {
  if (overrides.empty()) return text;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError{kExitConfig, std::string("malformed JSON: ") + e.what()};
  }
  if (!doc.is_object()) throw CliError{kExitConfig, "config must be a JSON object"};
  Json& target = doc.contains("experiment") ? doc["config"] : doc;
  if (target.is_null()) target = Json::object();
  for (const auto& [k, v] : overrides.items()) target[k] = v;
  return doc.dump();
}

/// Flattens the `outputs` object into `path,value` lines.
void flatten(const std::string& prefix, const Json& j,
             std::vector<std::pair<std::string, Json>>& lines) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(prefix.empty() ? k : prefix + "." + k, v, lines);
    }
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(prefix + "." + std::to_string(i), j[i], lines);
    }
  } else {
    lines.emplace_back(prefix, j);
  }
}

int run_experiment(const std::string& name, const CommonOptions& opts,
                   const Json& overrides = Json::object()) {
  const std::string config = with_overrides(read_config(opts), overrides);
  const std::uint64_t* seed = opts.seed ? &*opts.seed : nullptr;
  ethent_report* raw = nullptr;
  const ethent_status status =
      ethent_experiment_run(name.c_str(), config.c_str(), seed, opts.threads, &raw);
  if (status != ETHENT_OK) throw CliError{exit_code_for(status), ethent_last_error()};
  std::unique_ptr<ethent_report, decltype(&ethent_report_free)> report(raw,
                                                                       ethent_report_free);
  check(ethent_report_write(report.get(), opts.out_dir.c_str()), kExitIo);

  const Json summary = Json::parse(ethent_report_summary_json(report.get()));
  if (opts.format == "json") {
    Json out = summary;
    out["out_dir"] = opts.out_dir;
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::vector<std::pair<std::string, Json>> lines;
  flatten("", summary["outputs"], lines);
  for (const Json& file : summary["artifacts"]) {
    lines.emplace_back("artifact", opts.out_dir + "/" + file.get<std::string>());
  }
  print_values(lines, opts);
  return kExitOk;
}

void add_common(CLI::App* sub, CommonOptions& opts, bool experiment) {
  if (experiment) {
    sub->add_option("--config", opts.config_path, "JSON config or recorded inputs.json");
    sub->add_option("--out", opts.out_dir, "output directory (created if absent)");
    sub->add_option("--seed", opts.seed, "override the config seed");
    sub->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
  }
  sub->add_option("--format", opts.format, "summary format")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ethent: ethical-entropy dynamics simulator"};
  app.require_subcommand(1);
  CommonOptions opts;

  std::string probs_text;
  auto* entropy = app.add_subcommand("entropy", "ethical entropy of a goal distribution");
  entropy->add_option("--probs", probs_text, "comma-separated probabilities")->required();
  add_common(entropy, opts, false);

  double lambda_max = 0.0;
  double n_params = 0.0;
  std::optional<double> gamma;
  auto* gamma_crit = app.add_subcommand("gamma-crit", "critical alignment work");
  gamma_crit->add_option("--lambda-max", lambda_max, "dominant Fisher eigenvalue")
      ->required();
  gamma_crit->add_option("--n", n_params, "parameter count (7e9 accepted)")->required();
  gamma_crit->add_option("--gamma", gamma, "alignment work to classify");
  add_common(gamma_crit, opts, false);

  std::string a_text;
  std::string b_text;
  auto* ttest = app.add_subcommand("ttest", "pooled two-sample t-test");
  ttest->add_option("--a", a_text, "first sample, comma-separated")->required();
  ttest->add_option("--b", b_text, "second sample, comma-separated")->required();
  add_common(ttest, opts, false);

  std::optional<std::size_t> trial;
  auto* simulate = app.add_subcommand("simulate", "macro drift-diffusion ensemble");
  simulate->add_option("--trial", trial, "emit a single trial instead of the ensemble");
  add_common(simulate, opts, true);

  struct Experiment {
    const char* name;
    const char* help;
  };
  const Experiment experiments[] = {
      {"phase", "stability phase diagram over (N, gamma)"},
      {"micro", "softmax SGD testbed and Second Law check"},
      {"ablate", "noise / gaming ablation"},
      {"sensitivity", "+/-50% parameter sensitivity sweep"},
      {"figure2", "baseline vs regularized ensembles"},
      {"table1", "critical alignment work for reference systems"},
  };
  for (const Experiment& e : experiments) {
    add_common(app.add_subcommand(e.name, e.help), opts, true);
  }

  if (argc <= 1) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*entropy) {
      const std::vector<double> probs = parse_list(probs_text, "--probs");
      double s = 0.0;
      double s_max = 0.0;
      check(ethent_shannon_entropy(probs.data(), probs.size(), &s), kExitUsage);
      check(ethent_max_entropy(probs.size(), &s_max), kExitUsage);
      print_values({{"shannon_entropy", s}, {"max_entropy", s_max}}, opts);
      return kExitOk;
    }
    if (*gamma_crit) {
      double g = 0.0;
      check(ethent_gamma_crit(n_params, lambda_max, &g), kExitUsage);
      std::vector<std::pair<std::string, Json>> values{{"gamma_crit", g}};
      if (gamma) {
        ethent_stability label = ETHENT_DRIFT;
        check(ethent_classify_stability(*gamma, n_params, lambda_max, &label), kExitUsage);
        values.emplace_back("label", label == ETHENT_STABLE ? "stable" : "drift");
      }
      print_values(values, opts);
      return kExitOk;
    }
    if (*ttest) {
      const std::vector<double> a = parse_list(a_text, "--a");
      const std::vector<double> b = parse_list(b_text, "--b");
      ethent_ttest r{};
      check(ethent_pooled_t_test(a.data(), a.size(), b.data(), b.size(), &r), kExitUsage);
      Json t = std::isfinite(r.t_stat) ? Json(r.t_stat)
                                       : Json(r.t_stat > 0 ? "inf" : "-inf");
      print_values({{"t_stat", t},
                    {"df", r.df},
                    {"p_two_sided", r.p_two_sided},
                    {"degenerate", r.degenerate != 0}},
                   opts);
      return kExitOk;
    }
    if (*simulate) {
      Json overrides = Json::object();
      if (trial) overrides["trial_index"] = *trial;
      return run_experiment("simulate", opts, overrides);
    }
    for (const Experiment& e : experiments) {
      if (*app.get_subcommand(e.name)) return run_experiment(e.name, opts);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    if (e.exit_code == kExitUsage) std::cerr << "run with --help for usage\n";
    return e.exit_code;
  }
  return kExitUsage;
}

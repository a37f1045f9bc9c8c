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

#include "ethent/config.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "ethent/defaults.hpp"
#include "ethent/error.hpp"

namespace ethent {

namespace {

/// Reads known keys from a flat object and remembers them so that leftover
/// keys can be rejected.
class FieldReader {
 public:
  explicit FieldReader(const Json& obj) : obj_(obj) {
    if (!obj_.is_object()) throw ConfigError("", "config must be a JSON object");
  }

  const Json* find(const char* key) {
    known_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  void number(const char* key, double& out) {
    if (const Json* v = find(key)) out = as_number(key, *v);
  }

  /// Counts accept integers or integral floating values such as 1e4.
  void count(const char* key, std::size_t& out) {
    if (const Json* v = find(key)) out = as_count(key, *v);
  }

  void seed(const char* key, std::uint64_t& out) {
    const Json* v = find(key);
    if (!v) return;
    if (v->is_number_unsigned()) {
      out = v->get<std::uint64_t>();
    } else if (v->is_number_integer()) {
      throw ConfigError(key, "must be a non-negative integer");
    } else if (v->is_number_float()) {
      out = as_count(key, *v);
    } else {
      throw ConfigError(key, "must be an unsigned 64-bit integer");
    }
  }

  void vector(const char* key, std::vector<double>& out) {
    const Json* v = find(key);
    if (!v) return;
    if (!v->is_array()) throw ConfigError(key, "must be an array of numbers");
    std::vector<double> values;
    for (const Json& e : *v) values.push_back(as_number(key, e));
    out = std::move(values);
  }

  bool has(const char* key) const { return obj_.contains(key); }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!known_.contains(key)) throw ConfigError(key, "unknown key");
    }
  }

  static double as_number(const char* key, const Json& v) {
    if (!v.is_number()) throw ConfigError(key, "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(key, "must be finite");
    return d;
  }

  static std::size_t as_count(const char* key, const Json& v) {
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer()) throw ConfigError(key, "must be non-negative");
    const double d = as_number(key, v);
    if (d < 0.0 || d != std::floor(d) || d >= 18446744073709551616.0) {
      throw ConfigError(key, "must be a non-negative integer");
    }
    return static_cast<std::size_t>(d);
  }

 private:
  const Json& obj_;
  std::set<std::string> known_;
};

/// Runs `check`, turning "field: message" InvalidArguments into ConfigErrors.
template <typename Check>
void validated(Check&& check) {
  try {
    check();
  } catch (const InvalidArgument& e) {
    const std::string what = e.what();
    const auto colon = what.find(':');
    if (colon != std::string::npos && what.find(' ') > colon) {
      throw ConfigError(what.substr(0, colon), what.substr(colon + 2));
    }
    throw ConfigError("", what);
  }
}

void read_macro(FieldReader& r, MacroConfig& c) {
  r.number("s0", c.s0);
  r.number("s_max", c.s_max);
  r.number("sigma_noise_rate", c.sigma_noise_rate);
  r.number("sigma_gaming_rate", c.sigma_gaming_rate);
  r.number("gamma", c.gamma);
  r.number("xi", c.xi);
  r.number("dt", c.dt);
  r.count("steps", c.steps);
  r.count("trials", c.trials);
  r.seed("master_seed", c.master_seed);
}

void write_macro(Json& j, const MacroConfig& c) {
  j["s0"] = c.s0;
  j["s_max"] = c.s_max;
  j["sigma_noise_rate"] = c.sigma_noise_rate;
  j["sigma_gaming_rate"] = c.sigma_gaming_rate;
  j["gamma"] = c.gamma;
  j["xi"] = c.xi;
  j["dt"] = c.dt;
  j["steps"] = c.steps;
  j["trials"] = c.trials;
  j["master_seed"] = c.master_seed;
}

void read_micro(FieldReader& r, MicroConfig& c) {
  r.count("n_goals", c.n_goals);
  if (r.has("n_goals") && !r.has("theta0") && c.n_goals >= 2) {
    c.theta0 = concentrated_logits(c.n_goals, std::min(defaults::kMicroInitialEntropy,
                                                       max_entropy(c.n_goals)));
  }
  if (r.has("n_goals") && !r.has("proxy_dist") && c.n_goals >= 2) {
    c.proxy_dist = GoalDistribution::uniform(c.n_goals);
  }
  r.vector("theta0", c.theta0);
  std::vector<double> proxy;
  r.vector("proxy_dist", proxy);
  if (r.has("proxy_dist")) {
    try {
      c.proxy_dist = GoalDistribution(std::move(proxy));
    } catch (const InvalidArgument& e) {
      throw ConfigError("proxy_dist", e.what());
    }
  }
  r.count("intended_goal", c.intended_goal);
  r.number("eta", c.eta);
  r.number("sigma_eps", c.sigma_eps);
  r.number("align_strength", c.align_strength);
  r.count("steps", c.steps);
  r.seed("seed", c.seed);
}

void write_micro(Json& j, const MicroConfig& c) {
  j["n_goals"] = c.n_goals;
  j["theta0"] = c.theta0;
  j["proxy_dist"] = std::vector<double>(c.proxy_dist.probs().begin(),
                                        c.proxy_dist.probs().end());
  j["intended_goal"] = c.intended_goal;
  j["eta"] = c.eta;
  j["sigma_eps"] = c.sigma_eps;
  j["align_strength"] = c.align_strength;
  j["steps"] = c.steps;
  j["seed"] = c.seed;
}

void validate_distribution(const char* key, const std::vector<double>& probs) {
  try {
    GoalDistribution d(probs);
  } catch (const InvalidArgument& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

Json parse_config_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  return doc;
}

MacroConfig load_macro_config(std::string_view text) {
  return parse_simulate_config(parse_config_document(text)).macro;
}

MicroConfig load_micro_config(std::string_view text) {
  const Json doc = parse_config_document(text);
  MicroConfig c = defaults::micro();
  FieldReader r(doc);
  read_micro(r, c);
  r.finish();
  validated([&] { c.validate(); });
  return c;
}

Json to_json(const MacroConfig& config) {
  Json j = Json::object();
  write_macro(j, config);
  return j;
}

Json to_json(const MicroConfig& config) {
  Json j = Json::object();
  write_micro(j, config);
  return j;
}

Json to_json(const SimulateConfig& config) {
  Json j = to_json(config.macro);
  if (config.trial_index) {
    j["trial_index"] = *config.trial_index;
  } else {
    j["trial_index"] = nullptr;
  }
  return j;
}

Json to_json(const Figure2Config& config) {
  Json j = to_json(config.baseline);
  j["regularized_gamma"] = config.regularized_gamma;
  return j;
}

Json to_json(const PhaseConfig& c) {
  Json j = Json::object();
  j["n_min"] = c.n_min;
  j["n_max"] = c.n_max;
  j["n_count"] = c.n_count;
  j["gamma_min"] = c.gamma_min;
  j["gamma_max"] = c.gamma_max;
  j["gamma_count"] = c.gamma_count;
  j["lambda_max"] = c.lambda_max;
  j["operating_n"] = c.operating_n;
  j["operating_gamma"] = c.operating_gamma;
  return j;
}

Json to_json(const AblationConfig& config) {
  Json j = to_json(config.combined);
  j["xi_noise_only"] = config.xi_noise_only;
  j["xi_gaming_only"] = config.xi_gaming_only;
  return j;
}

Json to_json(const SensitivityConfig& c) {
  Json j = to_json(c.baseline);
  j["regularized_gamma"] = c.regularized_gamma;
  j["eta"] = c.eta;
  j["sigma_eps2"] = c.sigma_eps2;
  j["lambda_max"] = c.lambda_max;
  j["n_params"] = c.n_params;
  j["trace_per_variance"] = c.trace_per_variance;
  j["proxy_dist"] = c.proxy_dist;
  j["true_dist"] = c.true_dist;
  j["perturbations"] = c.perturbations;
  return j;
}

Json to_json(const MicroExperimentConfig& config) {
  Json j = to_json(config.micro);
  j["n_seeds"] = config.n_seeds;
  return j;
}

SimulateConfig parse_simulate_config(const Json& doc) {
  SimulateConfig c = default_simulate_config();
  FieldReader r(doc);
  read_macro(r, c.macro);
  if (const Json* v = r.find("trial_index"); v && !v->is_null()) {
    c.trial_index = FieldReader::as_count("trial_index", *v);
  }
  r.finish();
  validated([&] { c.macro.validate(); });
  if (c.trial_index && *c.trial_index >= c.macro.trials) {
    throw ConfigError("trial_index", "must be < trials");
  }
  return c;
}

Figure2Config parse_figure2_config(const Json& doc) {
  Figure2Config c = default_figure2_config();
  FieldReader r(doc);
  read_macro(r, c.baseline);
  r.number("regularized_gamma", c.regularized_gamma);
  r.finish();
  validated([&] { c.baseline.validate(); });
  if (!(c.regularized_gamma >= 0.0)) {
    throw ConfigError("regularized_gamma", "must be >= 0");
  }
  return c;
}

PhaseConfig parse_phase_config(const Json& doc) {
  PhaseConfig c = default_phase_config();
  FieldReader r(doc);
  r.number("n_min", c.n_min);
  r.number("n_max", c.n_max);
  r.count("n_count", c.n_count);
  r.number("gamma_min", c.gamma_min);
  r.number("gamma_max", c.gamma_max);
  r.count("gamma_count", c.gamma_count);
  r.number("lambda_max", c.lambda_max);
  r.number("operating_n", c.operating_n);
  r.number("operating_gamma", c.operating_gamma);
  r.finish();
  if (!(c.n_min >= 2.0)) throw ConfigError("n_min", "must be >= 2");
  if (!(c.n_max >= c.n_min)) throw ConfigError("n_max", "must be >= n_min");
  if (c.n_count < 1) throw ConfigError("n_count", "must be >= 1");
  if (!(c.gamma_min >= 0.0)) throw ConfigError("gamma_min", "must be >= 0");
  if (!(c.gamma_max >= c.gamma_min)) {
    throw ConfigError("gamma_max", "must be >= gamma_min");
  }
  if (c.gamma_count < 1) throw ConfigError("gamma_count", "must be >= 1");
  if ((c.n_count > 1) != (c.n_max > c.n_min)) {
    throw ConfigError("n_count", "axis with one point needs n_min = n_max and vice versa");
  }
  if ((c.gamma_count > 1) != (c.gamma_max > c.gamma_min)) {
    throw ConfigError("gamma_count",
                      "axis with one point needs gamma_min = gamma_max and vice versa");
  }
  if (!(c.lambda_max > 0.0)) throw ConfigError("lambda_max", "must be > 0");
  if (!(c.operating_n >= 2.0)) throw ConfigError("operating_n", "must be >= 2");
  if (!(c.operating_gamma >= 0.0)) throw ConfigError("operating_gamma", "must be >= 0");
  return c;
}

AblationConfig parse_ablation_config(const Json& doc) {
  AblationConfig c = default_ablation_config();
  FieldReader r(doc);
  read_macro(r, c.combined);
  r.number("xi_noise_only", c.xi_noise_only);
  r.number("xi_gaming_only", c.xi_gaming_only);
  r.finish();
  validated([&] { c.combined.validate(); });
  if (!(c.xi_noise_only >= 0.0)) throw ConfigError("xi_noise_only", "must be >= 0");
  if (!(c.xi_gaming_only >= 0.0)) throw ConfigError("xi_gaming_only", "must be >= 0");
  return c;
}

SensitivityConfig parse_sensitivity_config(const Json& doc) {
  SensitivityConfig c = default_sensitivity_config();
  FieldReader r(doc);
  read_macro(r, c.baseline);
  r.number("regularized_gamma", c.regularized_gamma);
  r.number("eta", c.eta);
  r.number("sigma_eps2", c.sigma_eps2);
  r.number("lambda_max", c.lambda_max);
  r.number("n_params", c.n_params);
  r.number("trace_per_variance", c.trace_per_variance);
  r.vector("proxy_dist", c.proxy_dist);
  r.vector("true_dist", c.true_dist);
  r.vector("perturbations", c.perturbations);
  r.finish();
  validated([&] { c.baseline.validate(); });
  if (!(c.regularized_gamma >= 0.0)) {
    throw ConfigError("regularized_gamma", "must be >= 0");
  }
  if (!(c.eta > 0.0)) throw ConfigError("eta", "must be > 0");
  if (!(c.sigma_eps2 > 0.0)) throw ConfigError("sigma_eps2", "must be > 0");
  if (!(c.lambda_max > 0.0)) throw ConfigError("lambda_max", "must be > 0");
  if (!(c.n_params >= 2.0)) throw ConfigError("n_params", "must be >= 2");
  if (!(c.trace_per_variance > 0.0)) {
    throw ConfigError("trace_per_variance", "must be > 0");
  }
  validate_distribution("proxy_dist", c.proxy_dist);
  validate_distribution("true_dist", c.true_dist);
  if (c.proxy_dist.size() != c.true_dist.size()) {
    throw ConfigError("true_dist", "length must match proxy_dist");
  }
  if (c.perturbations.empty()) throw ConfigError("perturbations", "must be non-empty");
  for (double p : c.perturbations) {
    if (!(p > -1.0)) throw ConfigError("perturbations", "each value must be > -1");
  }
  return c;
}

MicroExperimentConfig parse_micro_config(const Json& doc) {
  MicroExperimentConfig c = default_micro_config();
  FieldReader r(doc);
  read_micro(r, c.micro);
  r.count("n_seeds", c.n_seeds);
  r.finish();
  validated([&] { c.micro.validate(); });
  if (c.n_seeds < 1) throw ConfigError("n_seeds", "must be >= 1");
  return c;
}

void parse_table1_config(const Json& doc) {
  FieldReader r(doc);
  r.finish();
}

}  // namespace ethent

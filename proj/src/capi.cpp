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

#include "ethent/ethent.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ethent/entropy.hpp"
#include "ethent/error.hpp"
#include "ethent/experiments.hpp"
#include "ethent/production.hpp"
#include "ethent/stats.hpp"
#include "ethent/threshold.hpp"

struct ethent_report {
  ethent::ExperimentReport report;
  std::string summary_json;
  std::string inputs_json;
};

namespace {

thread_local std::string g_last_error;

ethent_status fail(ethent_status status, const char* message) {
  g_last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <typename Body>
ethent_status guarded(Body&& body) {
  try {
    body();
    return ETHENT_OK;
  } catch (const ethent::InfiniteDivergence& e) {
    return fail(ETHENT_ERR_INFINITE_DIVERGENCE, e.what());
  } catch (const ethent::InvalidArgument& e) {
    return fail(ETHENT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ethent::ConfigError& e) {
    return fail(ETHENT_ERR_CONFIG, e.what());
  } catch (const ethent::IoError& e) {
    return fail(ETHENT_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ETHENT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ETHENT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ETHENT_ERR_INTERNAL, "unknown error");
  }
}

void require_out(const void* out) {
  if (out == nullptr) throw ethent::InvalidArgument("output pointer is null");
}

std::vector<double> copy_array(const double* data, size_t n, const char* what) {
  if (data == nullptr && n > 0) {
    throw ethent::InvalidArgument(std::string(what) + " is null");
  }
  return n == 0 ? std::vector<double>{} : std::vector<double>(data, data + n);
}

}  // namespace

extern "C" {

const char* ethent_version(void) { return "1.0.0"; }

const char* ethent_last_error(void) { return g_last_error.c_str(); }

const char* ethent_status_name(ethent_status status) {
  switch (status) {
    case ETHENT_OK: return "ok";
    case ETHENT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ETHENT_ERR_INFINITE_DIVERGENCE: return "infinite divergence";
    case ETHENT_ERR_CONFIG: return "config error";
    case ETHENT_ERR_IO: return "i/o error";
    case ETHENT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ethent_status ethent_shannon_entropy(const double* probs, size_t n, double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::shannon_entropy(ethent::GoalDistribution(copy_array(probs, n, "probs")));
  });
}

ethent_status ethent_max_entropy(size_t n, double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::max_entropy(n);
  });
}

ethent_status ethent_kl_divergence(const double* p, const double* q, size_t n,
                                   double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::kl_divergence(ethent::GoalDistribution(copy_array(p, n, "p")),
                                 ethent::GoalDistribution(copy_array(q, n, "q")));
  });
}

ethent_status ethent_alignment_energy(double s, double k0, double t_e, double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::alignment_energy(s, {k0, t_e});
  });
}

ethent_status ethent_entropy_rate(const double* probs, const double* dp_dt, size_t n,
                                  double* out) {
  return guarded([&] {
    require_out(out);
    const std::vector<double> rates = copy_array(dp_dt, n, "dp_dt");
    *out = ethent::entropy_rate_chain_rule(
        ethent::GoalDistribution(copy_array(probs, n, "probs")), rates);
  });
}

ethent_status ethent_sigma_noise(double eta, double lambda_max, double trace_sigma,
                                 double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::sigma_noise(eta, lambda_max, trace_sigma);
  });
}

ethent_status ethent_sigma_gaming(double eta, const double* proxy, const double* truth,
                                  size_t n, double alpha_instr, double instrumental_i,
                                  double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::sigma_gaming_amplified(
        eta, ethent::GoalDistribution(copy_array(proxy, n, "proxy")),
        ethent::GoalDistribution(copy_array(truth, n, "truth")), alpha_instr,
        instrumental_i);
  });
}

ethent_status ethent_gamma_crit(double n_params, double lambda_max, double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::gamma_crit({n_params, lambda_max});
  });
}

ethent_status ethent_classify_stability(double gamma, double n_params,
                                        double lambda_max, ethent_stability* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::classify_stability(gamma, {n_params, lambda_max}) ==
                   ethent::Stability::kStable
               ? ETHENT_STABLE
               : ETHENT_DRIFT;
  });
}

ethent_status ethent_pooled_t_test(const double* a, size_t n_a, const double* b,
                                   size_t n_b, ethent_ttest* out) {
  return guarded([&] {
    require_out(out);
    const ethent::TTestResult r =
        ethent::pooled_t_test(copy_array(a, n_a, "a"), copy_array(b, n_b, "b"));
    *out = ethent_ttest{r.t_stat, r.df, r.p_two_sided, r.degenerate ? 1 : 0};
  });
}

ethent_status ethent_sign_test(const double* deltas, size_t n, double* p_out) {
  return guarded([&] {
    require_out(p_out);
    *p_out = ethent::sign_test(copy_array(deltas, n, "deltas"));
  });
}

ethent_status ethent_regularized_incomplete_beta(double x, double a, double b,
                                                 double* out) {
  return guarded([&] {
    require_out(out);
    *out = ethent::regularized_incomplete_beta(x, a, b);
  });
}

int ethent_is_experiment(const char* name) {
  return name != nullptr && ethent::is_experiment(name) ? 1 : 0;
}

ethent_status ethent_experiment_run(const char* name, const char* config_json,
                                    const uint64_t* seed, unsigned threads,
                                    ethent_report** out) {
  return guarded([&] {
    require_out(out);
    if (name == nullptr) throw ethent::InvalidArgument("experiment name is null");
    std::optional<std::uint64_t> override_seed;
    if (seed != nullptr) override_seed = *seed;
    auto handle = std::make_unique<ethent_report>();
    handle->report = ethent::run_experiment(
        name, config_json == nullptr ? "" : config_json, override_seed, threads);
    handle->summary_json = handle->report.summary().dump();
    handle->inputs_json = handle->report.inputs.dump(2);
    *out = handle.release();
  });
}

void ethent_report_free(ethent_report* report) { delete report; }

const char* ethent_report_name(const ethent_report* report) {
  return report == nullptr ? nullptr : report->report.name.c_str();
}

const char* ethent_report_summary_json(const ethent_report* report) {
  return report == nullptr ? nullptr : report->summary_json.c_str();
}

const char* ethent_report_inputs_json(const ethent_report* report) {
  return report == nullptr ? nullptr : report->inputs_json.c_str();
}

size_t ethent_report_artifact_count(const ethent_report* report) {
  return report == nullptr ? 0 : report->report.artifacts.size();
}

const char* ethent_report_artifact_name(const ethent_report* report, size_t index) {
  if (report == nullptr || index >= report->report.artifacts.size()) return nullptr;
  return report->report.artifacts[index].file_name.c_str();
}

const char* ethent_report_artifact_content(const ethent_report* report, size_t index) {
  if (report == nullptr || index >= report->report.artifacts.size()) return nullptr;
  return report->report.artifacts[index].content.c_str();
}

ethent_status ethent_report_write(const ethent_report* report, const char* out_dir) {
  return guarded([&] {
    if (report == nullptr) throw ethent::InvalidArgument("report is null");
    if (out_dir == nullptr) throw ethent::InvalidArgument("out_dir is null");
    ethent::write_report(report->report, out_dir);
  });
}

}  // extern "C"

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

/*
 * C interface to the ethent library.
 *
 * Every function returns an ethent_status. On failure a description of the
 * last error on the calling thread is available from ethent_last_error()
 * until the next failing call on that thread. Output parameters are written
 * only on ETHENT_OK.
 *
 * Experiment reports are opaque handles owned by the caller and released with
 * ethent_report_free(). Strings returned by report accessors live as long as
 * the report.
 */
#ifndef ETHENT_ETHENT_H_
#define ETHENT_ETHENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ETHENT_API __declspec(dllexport)
#else
#define ETHENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ethent_status {
  ETHENT_OK = 0,
  ETHENT_ERR_INVALID_ARGUMENT = 1,
  ETHENT_ERR_INFINITE_DIVERGENCE = 2,
  ETHENT_ERR_CONFIG = 3,
  ETHENT_ERR_IO = 4,
  ETHENT_ERR_INTERNAL = 5
} ethent_status;

typedef enum ethent_stability {
  ETHENT_STABLE = 0,
  ETHENT_DRIFT = 1
} ethent_stability;

typedef struct ethent_ttest {
  double t_stat;
  size_t df;
  double p_two_sided;
  int degenerate;
} ethent_ttest;

typedef struct ethent_report ethent_report;

ETHENT_API const char* ethent_version(void);
ETHENT_API const char* ethent_last_error(void);
ETHENT_API const char* ethent_status_name(ethent_status status);

/* Information-theoretic core. Distributions are validated on entry. */
ETHENT_API ethent_status ethent_shannon_entropy(const double* probs, size_t n,
                                                double* out);
ETHENT_API ethent_status ethent_max_entropy(size_t n, double* out);
ETHENT_API ethent_status ethent_kl_divergence(const double* p, const double* q,
                                              size_t n, double* out);
ETHENT_API ethent_status ethent_alignment_energy(double s, double k0, double t_e,
                                                 double* out);
ETHENT_API ethent_status ethent_entropy_rate(const double* probs,
                                             const double* dp_dt, size_t n,
                                             double* out);

/* Production channels. */
ETHENT_API ethent_status ethent_sigma_noise(double eta, double lambda_max,
                                            double trace_sigma, double* out);
ETHENT_API ethent_status ethent_sigma_gaming(double eta, const double* proxy,
                                             const double* truth, size_t n,
                                             double alpha_instr,
                                             double instrumental_i, double* out);

/* Stability boundary. */
ETHENT_API ethent_status ethent_gamma_crit(double n_params, double lambda_max,
                                           double* out);
ETHENT_API ethent_status ethent_classify_stability(double gamma, double n_params,
                                                   double lambda_max,
                                                   ethent_stability* out);

/* Statistics. */
ETHENT_API ethent_status ethent_pooled_t_test(const double* a, size_t n_a,
                                              const double* b, size_t n_b,
                                              ethent_ttest* out);
ETHENT_API ethent_status ethent_sign_test(const double* deltas, size_t n,
                                          double* p_out);
ETHENT_API ethent_status ethent_regularized_incomplete_beta(double x, double a,
                                                            double b, double* out);

/*
 * Experiments. `name` is one of simulate, figure2, table1, phase, ablate,
 * sensitivity, micro. `config_json` may be NULL or empty for all defaults, a
 * flat JSON object of config fields, or a previously written inputs.json.
 * `seed` overrides the config seed when non-NULL. `threads` = 0 uses the
 * hardware concurrency; results do not depend on it.
 */
ETHENT_API int ethent_is_experiment(const char* name);
ETHENT_API ethent_status ethent_experiment_run(const char* name,
                                               const char* config_json,
                                               const uint64_t* seed,
                                               unsigned threads,
                                               ethent_report** out);
ETHENT_API void ethent_report_free(ethent_report* report);
ETHENT_API const char* ethent_report_name(const ethent_report* report);
/* {"experiment", "outputs", "artifacts"} as compact JSON. */
ETHENT_API const char* ethent_report_summary_json(const ethent_report* report);
ETHENT_API const char* ethent_report_inputs_json(const ethent_report* report);
ETHENT_API size_t ethent_report_artifact_count(const ethent_report* report);
ETHENT_API const char* ethent_report_artifact_name(const ethent_report* report,
                                                   size_t index);
ETHENT_API const char* ethent_report_artifact_content(const ethent_report* report,
                                                      size_t index);
/* Writes all artifacts and inputs.json into out_dir, creating it if needed. */
ETHENT_API ethent_status ethent_report_write(const ethent_report* report,
                                             const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* ETHENT_ETHENT_H_ */

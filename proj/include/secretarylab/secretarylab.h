/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the secretary-algorithm simulation library.
 *
 * Every function returns SECLAB_OK (0) on success or a nonzero status; the
 * failure message is retrievable with seclab_last_error() on the same
 * thread. Strings returned through char** out-parameters are heap copies
 * the caller releases with seclab_string_free().
 */

#ifndef SECRETARYLAB_SECRETARYLAB_H_
#define SECRETARYLAB_SECRETARYLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SECLAB_API __declspec(dllexport)
#else
#define SECLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seclab_status {
  SECLAB_OK = 0,
  SECLAB_INVALID_ARGUMENT = 1,
  SECLAB_LIMIT_EXCEEDED = 2,
  SECLAB_CONTRACT_VIOLATION = 3,
  SECLAB_UNSUPPORTED = 4,
  SECLAB_PARSE = 5,
  SECLAB_IO = 6,
  SECLAB_DOMAIN = 7
} seclab_status;

/* Message for the most recent failure on the calling thread. Never NULL. */
SECLAB_API const char* seclab_last_error(void);

SECLAB_API const char* seclab_version(void);

SECLAB_API void seclab_string_free(char* text);

/* ---- Instances ------------------------------------------------------- */

typedef struct seclab_instance seclab_instance;

SECLAB_API seclab_status seclab_instance_parse(const char* json_text,
                                               seclab_instance** out);

SECLAB_API seclab_status seclab_instance_load(const char* path,
                                              seclab_instance** out);

/* request_json: {"kind": "...", "n": 8, "seed": 7, "valuation": "coverage",
 * "capacity": 2, "blocks": 3, "depth": 2, "k": 2, "n_right": 4,
 * "density": 0.5}. Only "kind" is required; the rest default per kind. */
SECLAB_API seclab_status seclab_instance_generate(const char* request_json,
                                                  seclab_instance** out);

SECLAB_API seclab_status seclab_instance_serialize(const seclab_instance* h,
                                                   char** out_json);

SECLAB_API seclab_status seclab_instance_save(const seclab_instance* h,
                                              const char* path);

/* {"name", "kind", "n", "edge_valued", "edges"? } */
SECLAB_API seclab_status seclab_instance_info(const seclab_instance* h,
                                              char** out_json);

SECLAB_API void seclab_instance_free(seclab_instance* h);

/* Structural validation of instance text. Returns a report even when checks
 * fail: {"pass": bool, "checks": [{"check", "pass", "detail"}, ...]}. Only
 * unparseable text fails the call itself (SECLAB_PARSE). */
SECLAB_API seclab_status seclab_validate_text(const char* json_text,
                                              char** out_report_json);

/* ---- Experiments ------------------------------------------------------ */

typedef struct seclab_experiment_config {
  /* "online", "simulate", "online-sbvm" or "simulate-sbvm" */
  const char* algorithm;
  double p;
  uint64_t trials;
  uint64_t master_seed;
  uint32_t workers;
  int json_lines;   /* 0 = CSV, nonzero = one JSON object per line */
  int compute_opt;  /* nonzero computes OPT when within the brute-force cap */
  int timing;       /* nonzero fills the ms column (breaks byte stability) */
} seclab_experiment_config;

/* Renders the per-trial records plus the trailing summary row (trial -1). */
SECLAB_API seclab_status seclab_run_experiment(
    const seclab_instance* h, const seclab_experiment_config* config,
    char** out_text);

typedef struct seclab_ratio_summary {
  double opt;
  double mean;
  double se;
  double min;
  double max;
  uint64_t trials;
} seclab_ratio_summary;

SECLAB_API seclab_status seclab_empirical_ratio(
    const seclab_instance* h, const char* algorithm, double p, uint64_t trials,
    uint64_t master_seed, uint32_t workers, seclab_ratio_summary* out);

/* Per-element survival estimates for the exact optimum of a linear-valued
 * instance: JSON array of {"element", "hits", "trials", "rate", "se",
 * "wilson_low", "wilson_high"}. */
SECLAB_API seclab_status seclab_survival(const seclab_instance* h, double p,
                                         uint64_t trials, uint64_t master_seed,
                                         uint32_t workers, double wilson_z,
                                         char** out_json);

/* ---- Bound calculators ------------------------------------------------ */

/* Inputs that do not apply to a calculator are reported as NaN. */
typedef struct seclab_bound_report {
  double p;
  double t;
  double k;
  double c;
  double beta;
  double theta;
  double gamma;
  double alpha;
  double a;
  double guarantee;
  double claimed_ratio;
} seclab_bound_report;

/* diagnostic may be NULL; otherwise it receives a (possibly empty) note. */
SECLAB_API seclab_status seclab_laminar_bound(double p, double t,
                                              seclab_bound_report* out,
                                              char** diagnostic);

SECLAB_API seclab_status seclab_intersection_bound(uint64_t k, double c,
                                                   seclab_bound_report* out,
                                                   char** diagnostic);

SECLAB_API seclab_status seclab_transversal_bound(double p, double t,
                                                  seclab_bound_report* out,
                                                  char** diagnostic);

SECLAB_API seclab_status seclab_linear_laminar_bound(double p,
                                                     seclab_bound_report* out,
                                                     char** diagnostic);

/* ---- Distribution identity check -------------------------------------- */

typedef struct seclab_coupling_report {
  uint64_t n;
  double p;
  double tv_distance;
  uint64_t online_support;
  uint64_t simulate_support;
  double truncated_mass;
} seclab_coupling_report;

/* Exact comparison of the online and simulated-greedy (H, M, N) laws.
 * inconsistent_tie_break nonzero flips the simulated side to largest-index
 * tie-breaking, the negative control. */
SECLAB_API seclab_status seclab_verify_coupling(const seclab_instance* h,
                                                double p,
                                                int inconsistent_tie_break,
                                                seclab_coupling_report* out);

/* ---- Head-before-tail probabilities ------------------------------------ */

SECLAB_API seclab_status seclab_gp(uint64_t m, uint64_t n, double p,
                                   double* out);

SECLAB_API seclab_status seclab_gp_enumerated(uint64_t m, uint64_t n, double p,
                                              double* out);

SECLAB_API seclab_status seclab_gp_upper_bound(uint64_t m, uint64_t n,
                                               double p, double* out);

SECLAB_API seclab_status seclab_prop2_bound(uint64_t mu, double p,
                                            double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SECRETARYLAB_SECRETARYLAB_H_ */

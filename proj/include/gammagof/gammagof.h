/* Copyright 2026 The gammagof Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to the gamma goodness-of-fit library.
 *
 * Every fallible call returns a gg_status. On failure a message is available
 * from gg_last_error() until the next call on the same thread. Handles are
 * opaque, owned by the caller, and released with the matching _free call.
 * Strings returned through char** are released with gg_string_free. */

#ifndef GAMMAGOF_GAMMAGOF_H
#define GAMMAGOF_GAMMAGOF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef GAMMAGOF_BUILDING_LIBRARY
#    define GG_API __declspec(dllexport)
#  else
#    define GG_API __declspec(dllimport)
#  endif
#else
#  define GG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
  GG_OK = 0,
  GG_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-domain input */
  GG_ERR_DEGENERATE = 2,       /* sample cannot be fitted */
  GG_ERR_NUMERICAL = 3,        /* quadrature, root finding or series failure */
  GG_ERR_WEIGHT = 4,           /* censoring survival reached zero at an event */
  GG_ERR_PARSE = 5,
  GG_ERR_IO = 6,
  GG_ERR_INTERNAL = 7
} gg_status;

typedef enum gg_estimator { GG_ESTIMATOR_MOMENT = 0, GG_ESTIMATOR_MLE = 1 } gg_estimator;

typedef enum gg_statistic {
  GG_STATISTIC_DELTA = 0,
  GG_STATISTIC_HME = 1,
  GG_STATISTIC_BE = 2,
  GG_STATISTIC_KS = 3,
  GG_STATISTIC_CVM = 4
} gg_statistic;

typedef enum gg_scheme { GG_SCHEME_PARAMETRIC = 0, GG_SCHEME_RESAMPLE = 1 } gg_scheme;

typedef enum gg_variance { GG_VARIANCE_REWEIGHTED = 0, GG_VARIANCE_ADJUSTED = 1 } gg_variance;

typedef struct gg_params {
  double shape;
  double scale;
} gg_params;

typedef struct gg_sample gg_sample;
typedef struct gg_censored gg_censored;
typedef struct gg_report gg_report;

GG_API const char* gg_version(void);
GG_API const char* gg_last_error(void);
GG_API const char* gg_status_string(gg_status s);
GG_API void gg_string_free(char* s);

/* Samples */
GG_API gg_status gg_sample_create(const double* values, size_t n, gg_sample** out);
GG_API void gg_sample_free(gg_sample* s);
GG_API size_t gg_sample_size(const gg_sample* s);

/* events[i] is 1 for an observed lifetime, 0 for a censoring time. */
GG_API gg_status gg_censored_create(const double* times, const uint8_t* events, size_t n,
                                    gg_censored** out);
GG_API void gg_censored_free(gg_censored* s);
GG_API size_t gg_censored_size(const gg_censored* s);
GG_API size_t gg_censored_events(const gg_censored* s);
/* Copies times and indicators into caller buffers of length gg_censored_size. */
GG_API gg_status gg_censored_copy(const gg_censored* s, double* times, uint8_t* events);

/* CSV with a `time` column and optional `status` column. *has_status reports
 * whether the file carried indicators. */
GG_API gg_status gg_dataset_load(const char* path, gg_censored** out, int* has_status);

/* Gamma law with shape k and scale lambda. */
GG_API gg_status gg_gamma_pdf(double x, gg_params p, double* out);
GG_API gg_status gg_gamma_cdf(double x, gg_params p, double* out);

GG_API gg_status gg_fit(const gg_sample* s, gg_estimator e, gg_params* out);
GG_API gg_status gg_fit_censored(const gg_censored* s, gg_params* out);

/* Statistic at supplied parameters, or at the fit by `e` when params is NULL.
 * decay is the exponential weight rate for HME and BE. */
GG_API gg_status gg_statistic_value(const gg_sample* s, gg_statistic kind, const gg_params* params,
                                    gg_estimator e, double decay, double* out);

typedef struct gg_delta_result {
  double value;
  double u1;
  double u2;
  gg_params params;
} gg_delta_result;

GG_API gg_status gg_delta(const gg_sample* s, gg_estimator e, gg_delta_result* out);

typedef struct gg_censored_result {
  double value;
  double d1;
  double d2;
  double d3;
  gg_params params;
} gg_censored_result;

GG_API gg_status gg_delta_censored(const gg_censored* s, gg_censored_result* out);
GG_API gg_status gg_variance_censored(const gg_censored* s, gg_variance method, double* out);

typedef struct gg_test_options {
  double alpha;
  size_t bootstrap;
  uint64_t seed;
  gg_estimator estimator;
  gg_scheme scheme;
  gg_variance variance;
} gg_test_options;

/* alpha 0.05, B 10000, seed 1, moments, parametric, reweighted. */
GG_API void gg_test_options_default(gg_test_options* o);

GG_API gg_status gg_test_complete(const gg_sample* s, const gg_test_options* o, gg_report** out);
GG_API gg_status gg_test_censored(const gg_censored* s, const gg_test_options* o,
                                  gg_report** out);

GG_API void gg_report_free(gg_report* r);
GG_API int gg_report_reject(const gg_report* r);
GG_API double gg_report_statistic(const gg_report* r);
GG_API gg_status gg_report_set_source(gg_report* r, const char* source);
GG_API gg_status gg_report_set_elapsed(gg_report* r, double seconds);
GG_API gg_status gg_report_json(const gg_report* r, char** out);
GG_API gg_status gg_report_summary(const gg_report* r, char** out);
GG_API gg_status gg_report_from_json(const char* json, gg_report** out);

/* Zero fields keep the scenario's own value; has_seed selects seed. */
typedef struct gg_sim_overrides {
  size_t reps;
  size_t bootstrap;
  int has_seed;
  uint64_t seed;
  unsigned threads;
} gg_sim_overrides;

/* Tables 1..6 as CSV. overrides may be NULL. */
GG_API gg_status gg_simulate_table(int table, const gg_sim_overrides* overrides, char** csv);
/* Scenario given as a JSON document. */
GG_API gg_status gg_simulate_custom(const char* scenario_json, const gg_sim_overrides* overrides,
                                    char** csv);

#ifdef __cplusplus
}
#endif

#endif /* GAMMAGOF_GAMMAGOF_H */

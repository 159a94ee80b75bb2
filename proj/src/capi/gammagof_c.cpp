// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "gammagof/gammagof.h"

#include <cstring>
#include <new>
#include <string>

#include "core/dataset.hpp"
#include "core/errors.hpp"
#include "core/estimators.hpp"
#include "core/gof_censored.hpp"
#include "core/gof_core.hpp"
#include "core/report.hpp"
#include "core/resampling.hpp"
#include "core/simulation.hpp"

struct gg_sample {
  gammagof::Sample s;
};

struct gg_censored {
  gammagof::CensoredSample s;
};

struct gg_report {
  gammagof::ReportFile r;
};

namespace {

thread_local std::string last_error;

gg_status fail(gg_status code, const char* what) {
  last_error = what;
  return code;
}

template <class F>
gg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return GG_OK;
  } catch (const gammagof::WeightSingularityError& e) {
    return fail(GG_ERR_WEIGHT, e.what());
  } catch (const gammagof::DegenerateSampleError& e) {
    return fail(GG_ERR_DEGENERATE, e.what());
  } catch (const gammagof::NumericalError& e) {
    return fail(GG_ERR_NUMERICAL, e.what());
  } catch (const gammagof::ParseError& e) {
    return fail(GG_ERR_PARSE, e.what());
  } catch (const gammagof::IoError& e) {
    return fail(GG_ERR_IO, e.what());
  } catch (const gammagof::DomainError& e) {
    return fail(GG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const gammagof::Error& e) {
    return fail(GG_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GG_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw gammagof::DomainError(std::string(name) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gammagof::GammaParams to_params(gg_params p) { return {p.shape, p.scale}; }
gg_params from_params(const gammagof::GammaParams& p) { return {p.shape, p.scale}; }

gammagof::Estimator to_estimator(gg_estimator e) {
  switch (e) {
    case GG_ESTIMATOR_MOMENT: return gammagof::Estimator::Moment;
    case GG_ESTIMATOR_MLE: return gammagof::Estimator::MaximumLikelihood;
  }
  throw gammagof::DomainError("unknown estimator");
}

gammagof::StatisticKind to_statistic(gg_statistic k) {
  switch (k) {
    case GG_STATISTIC_DELTA: return gammagof::StatisticKind::Delta;
    case GG_STATISTIC_HME: return gammagof::StatisticKind::Hme;
    case GG_STATISTIC_BE: return gammagof::StatisticKind::Be;
    case GG_STATISTIC_KS: return gammagof::StatisticKind::Ks;
    case GG_STATISTIC_CVM: return gammagof::StatisticKind::Cvm;
  }
  throw gammagof::DomainError("unknown statistic");
}

gammagof::BootstrapScheme to_scheme(gg_scheme s) {
  switch (s) {
    case GG_SCHEME_PARAMETRIC: return gammagof::BootstrapScheme::Parametric;
    case GG_SCHEME_RESAMPLE: return gammagof::BootstrapScheme::ResampleSynthetic;
  }
  throw gammagof::DomainError("unknown bootstrap scheme");
}

gammagof::VarianceMethod to_variance(gg_variance v) {
  switch (v) {
    case GG_VARIANCE_REWEIGHTED: return gammagof::VarianceMethod::Reweighted;
    case GG_VARIANCE_ADJUSTED: return gammagof::VarianceMethod::EstimationAdjusted;
  }
  throw gammagof::DomainError("unknown variance method");
}

void apply(gammagof::Scenario& s, const gg_sim_overrides* o) {
  if (o == nullptr) return;
  if (o->reps != 0) s.replications = o->reps;
  if (o->bootstrap != 0 && s.censoring == 0.0) s.bootstrap = o->bootstrap;
  if (o->has_seed) s.seed = o->seed;
  if (o->threads != 0) s.threads = o->threads;
}

}  // namespace

extern "C" {

const char* gg_version(void) { return "0.1.0"; }

const char* gg_last_error(void) { return last_error.c_str(); }

const char* gg_status_string(gg_status s) {
  switch (s) {
    case GG_OK: return "ok";
    case GG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GG_ERR_DEGENERATE: return "degenerate sample";
    case GG_ERR_NUMERICAL: return "numerical failure";
    case GG_ERR_WEIGHT: return "censoring weight singularity";
    case GG_ERR_PARSE: return "parse error";
    case GG_ERR_IO: return "i/o error";
    case GG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gg_string_free(char* s) { delete[] s; }

gg_status gg_sample_create(const double* values, size_t n, gg_sample** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n > 0) require(values, "values");
    *out = new gg_sample{gammagof::Sample(std::vector<double>(values, values + n))};
  });
}

void gg_sample_free(gg_sample* s) { delete s; }

size_t gg_sample_size(const gg_sample* s) { return s ? s->s.size() : 0; }

gg_status gg_censored_create(const double* times, const uint8_t* events, size_t n,
                             gg_censored** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n > 0) {
      require(times, "times");
      require(events, "events");
    }
    *out = new gg_censored{gammagof::CensoredSample(std::vector<double>(times, times + n),
                                                    std::vector<std::uint8_t>(events, events + n))};
  });
}

void gg_censored_free(gg_censored* s) { delete s; }

size_t gg_censored_size(const gg_censored* s) { return s ? s->s.size() : 0; }

size_t gg_censored_events(const gg_censored* s) { return s ? s->s.event_count() : 0; }

gg_status gg_censored_copy(const gg_censored* s, double* times, uint8_t* events) {
  return guarded([&] {
    require(s, "sample");
    for (std::size_t i = 0; i < s->s.size(); ++i) {
      if (times) times[i] = s->s.time(i);
      if (events) events[i] = s->s.event(i) ? 1 : 0;
    }
  });
}

gg_status gg_dataset_load(const char* path, gg_censored** out, int* has_status) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    auto d = gammagof::load_dataset(path);
    if (has_status) *has_status = d.has_status ? 1 : 0;
    *out = new gg_censored{std::move(d.data)};
  });
}

gg_status gg_gamma_pdf(double x, gg_params p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = gammagof::gamma_pdf(x, to_params(p));
  });
}

gg_status gg_gamma_cdf(double x, gg_params p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = gammagof::gamma_cdf(x, to_params(p));
  });
}

gg_status gg_fit(const gg_sample* s, gg_estimator e, gg_params* out) {
  return guarded([&] {
    require(s, "sample");
    require(out, "out");
    *out = from_params(gammagof::fit_gamma(s->s.values(), to_estimator(e)));
  });
}

gg_status gg_fit_censored(const gg_censored* s, gg_params* out) {
  return guarded([&] {
    require(s, "sample");
    require(out, "out");
    *out = from_params(gammagof::moment_estimates_censored(s->s));
  });
}

gg_status gg_statistic_value(const gg_sample* s, gg_statistic kind, const gg_params* params,
                             gg_estimator e, double decay, double* out) {
  return guarded([&] {
    require(s, "sample");
    require(out, "out");
    const auto x = s->s.values();
    const auto fitted = params ? to_params(*params) : gammagof::fit_gamma(x, to_estimator(e));
    fitted.validate();
    *out = gammagof::evaluate_statistic(to_statistic(kind), x, fitted, decay);
  });
}

gg_status gg_delta(const gg_sample* s, gg_estimator e, gg_delta_result* out) {
  return guarded([&] {
    require(s, "sample");
    require(out, "out");
    const auto r = gammagof::delta_statistic(s->s.values(), to_estimator(e));
    *out = {r.value, r.u1, r.u2, from_params(r.params)};
  });
}

gg_status gg_delta_censored(const gg_censored* s, gg_censored_result* out) {
  return guarded([&] {
    require(s, "sample");
    require(out, "out");
    const auto r = gammagof::delta_censored(s->s);
    *out = {r.value, r.d1, r.d2, r.d3, from_params(r.params)};
  });
}

gg_status gg_variance_censored(const gg_censored* s, gg_variance method, double* out) {
  return guarded([&] {
    require(s, "sample");
    require(out, "out");
    const auto fitted = gammagof::moment_estimates_censored(s->s);
    *out = gammagof::variance_censored(s->s, fitted, to_variance(method));
  });
}

void gg_test_options_default(gg_test_options* o) {
  if (o == nullptr) return;
  o->alpha = 0.05;
  o->bootstrap = 10000;
  o->seed = 1;
  o->estimator = GG_ESTIMATOR_MOMENT;
  o->scheme = GG_SCHEME_PARAMETRIC;
  o->variance = GG_VARIANCE_REWEIGHTED;
}

gg_status gg_test_complete(const gg_sample* s, const gg_test_options* o, gg_report** out) {
  return guarded([&] {
    require(s, "sample");
    require(o, "options");
    require(out, "out");
    *out = nullptr;
    gammagof::BootstrapOptions opts;
    opts.estimator = to_estimator(o->estimator);
    opts.scheme = to_scheme(o->scheme);
    const auto r = gammagof::gof_test_complete(s->s.values(), o->alpha, o->bootstrap, o->seed, opts);
    *out = new gg_report{gammagof::make_report(r)};
  });
}

gg_status gg_test_censored(const gg_censored* s, const gg_test_options* o, gg_report** out) {
  return guarded([&] {
    require(s, "sample");
    require(o, "options");
    require(out, "out");
    *out = nullptr;
    const auto r = gammagof::censored_test(s->s, o->alpha, to_variance(o->variance));
    *out = new gg_report{gammagof::make_report(r)};
  });
}

void gg_report_free(gg_report* r) { delete r; }

int gg_report_reject(const gg_report* r) { return r && r->r.reject ? 1 : 0; }

double gg_report_statistic(const gg_report* r) { return r ? r->r.statistic : 0.0; }

gg_status gg_report_set_source(gg_report* r, const char* source) {
  return guarded([&] {
    require(r, "report");
    r->r.source = source ? source : "";
  });
}

gg_status gg_report_set_elapsed(gg_report* r, double seconds) {
  return guarded([&] {
    require(r, "report");
    r->r.elapsed_seconds = seconds;
  });
}

gg_status gg_report_json(const gg_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(gammagof::report_json(r->r));
  });
}

gg_status gg_report_summary(const gg_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(gammagof::report_summary(r->r));
  });
}

gg_status gg_report_from_json(const char* json, gg_report** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw gammagof::DomainError(std::string("invalid JSON: ") + e.what());
    }
    *out = new gg_report{gammagof::report_from_json(j)};
  });
}

gg_status gg_simulate_table(int table, const gg_sim_overrides* overrides, char** csv) {
  return guarded([&] {
    require(csv, "csv");
    *csv = nullptr;
    auto s = gammagof::table_scenario(table);
    apply(s, overrides);
    *csv = copy_string(gammagof::table_csv(gammagof::run_scenario(s)));
  });
}

gg_status gg_simulate_custom(const char* scenario_json, const gg_sim_overrides* overrides,
                             char** csv) {
  return guarded([&] {
    require(scenario_json, "scenario");
    require(csv, "csv");
    *csv = nullptr;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(scenario_json);
    } catch (const nlohmann::json::exception& e) {
      throw gammagof::DomainError(std::string("invalid JSON: ") + e.what());
    }
    auto s = gammagof::scenario_from_json(j);
    apply(s, overrides);
    *csv = copy_string(gammagof::table_csv(gammagof::run_scenario(s)));
  });
}

}  // extern "C"

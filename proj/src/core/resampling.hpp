// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/distributions.hpp"
#include "core/estimators.hpp"
#include "core/gof_censored.hpp"
#include "core/gof_core.hpp"

namespace gammagof {

enum class BootstrapScheme {
  // B fresh samples from the fitted gamma law.
  Parametric,
  // One synthetic sample from the fitted law, then B resamples of it with
  // replacement.
  ResampleSynthetic,
};

const char* scheme_name(BootstrapScheme s);
BootstrapScheme parse_scheme(const std::string& name);

struct BootstrapOptions {
  Estimator estimator = Estimator::Moment;
  BootstrapScheme scheme = BootstrapScheme::Parametric;
  double decay = 1.0;  // weight e^{-at} for HME / BE
};

struct CriticalValues {
  double lower = 0.0;  // empirical α/2 quantile (two-sided) or -inf (upper-tail tests)
  double upper = 0.0;  // empirical 1-α/2 (two-sided) or 1-α quantile
  double alpha = 0.05;
  std::size_t bootstrap = 0;
  std::uint64_t seed = 0;
};

// Linear interpolation between order statistics, h = (B-1)p.
double empirical_quantile(std::span<const double> sorted, double p);

// Δ̂ is two-sided; HME, BE, KS and CvM reject in the upper tail.
bool two_sided(StatisticKind kind);

CriticalValues critical_values_from(std::span<const double> sorted, double alpha, bool two_sided);

// Sorted null distributions of each requested statistic, all computed on the
// same B bootstrap samples. Degenerate draws are redrawn, at most 10·B
// attempts in total.
std::vector<std::vector<double>> bootstrap_distributions(const GammaParams& p, std::size_t n,
                                                         std::size_t bootstrap, std::uint64_t seed,
                                                         std::span<const StatisticKind> kinds,
                                                         const BootstrapOptions& opts = {});

CriticalValues bootstrap_critical_values(const GammaParams& p, std::size_t n, std::size_t bootstrap,
                                         double alpha, std::uint64_t seed,
                                         const BootstrapOptions& opts = {});

struct TestReport {
  TestStatistic statistic;
  CriticalValues critical;
  Estimator estimator = Estimator::Moment;
  BootstrapScheme scheme = BootstrapScheme::Parametric;
  std::size_t n = 0;
  bool reject = false;
};

TestReport gof_test_complete(std::span<const double> x, double alpha, std::size_t bootstrap,
                             std::uint64_t seed, const BootstrapOptions& opts = {});

struct PowerEstimate {
  Alternative alternative;
  StatisticKind statistic = StatisticKind::Delta;
  std::size_t n = 0;
  std::size_t replications = 0;  // requested R
  std::size_t used = 0;          // R minus excluded
  std::size_t excluded = 0;      // degenerate fits or too few events
  std::size_t bootstrap = 0;     // 0 for the normal-based censored test
  double alpha = 0.05;
  double censoring = 0.0;        // target P(T > C); 0 for complete data
  std::size_t rejections = 0;
  double rate = 0.0;
  double se = 0.0;
};

struct PowerStudyConfig {
  Alternative alternative;
  std::size_t n = 50;
  std::size_t replications = 1000;
  std::size_t bootstrap = 500;
  std::vector<double> alphas{0.05};
  std::vector<StatisticKind> statistics{StatisticKind::Delta};
  std::uint64_t seed = 1;
  BootstrapOptions options;
  unsigned threads = 0;  // 0: default_thread_count()
};

// One estimate per (statistic, α), statistics outermost.
std::vector<PowerEstimate> power_study(const PowerStudyConfig& cfg);
PowerEstimate power_study(const Alternative& alt, std::size_t n, std::size_t replications,
                          std::size_t bootstrap, double alpha, std::uint64_t seed);

// Scale b of exponential censoring C with P(T > C) = q.
double calibrate_censoring_rate(const Alternative& lifetime, double q);
// P(T > C) for exponential C with scale b.
double censoring_probability(const Alternative& lifetime, double b);

struct CensoredPowerConfig {
  Alternative alternative;
  std::size_t n = 100;
  std::size_t replications = 1000;
  std::vector<double> alphas{0.05};
  double censoring = 0.2;
  std::uint64_t seed = 1;
  VarianceMethod variance = VarianceMethod::Reweighted;
  unsigned threads = 0;
};

std::vector<PowerEstimate> power_study_censored(const CensoredPowerConfig& cfg);

// Lifetimes from `lifetime`, censored by independent exponential(b) times.
CensoredSample censored_draw(const Alternative& lifetime, double b, std::size_t n, Rng& rng);

// GAMMAGOF_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

void set_standard_error(PowerEstimate& e);

}  // namespace gammagof

// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "core/errors.hpp"
#include "core/resampling.hpp"

using namespace gammagof;

TEST_CASE("type-7 quantiles") {
  const std::vector<double> s{1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(empirical_quantile(s, 0.0) == 1.0);
  CHECK(empirical_quantile(s, 1.0) == 5.0);
  CHECK(empirical_quantile(s, 0.5) == 3.0);
  CHECK(empirical_quantile(s, 0.1) == doctest::Approx(1.4));
  CHECK(empirical_quantile(s, 0.95) == doctest::Approx(4.8));
  CHECK_THROWS_AS(empirical_quantile(std::vector<double>{}, 0.5), DomainError);
  CHECK_THROWS_AS(empirical_quantile(s, 1.5), DomainError);

  const auto cv = critical_values_from(s, 1.0, true);
  CHECK(cv.lower == 3.0);
  CHECK(cv.upper == 3.0);
  const auto up = critical_values_from(s, 0.25, false);
  CHECK(std::isinf(up.lower));
  CHECK(up.upper == doctest::Approx(4.0));
  CHECK(two_sided(StatisticKind::Delta));
  CHECK_FALSE(two_sided(StatisticKind::Cvm));
}

TEST_CASE("bootstrap critical values") {
  const auto cv = bootstrap_critical_values({1.0, 1.0}, 20, 10000, 0.05, 7);
  CHECK(cv.lower < 0.0);
  CHECK(cv.upper > 0.0);
  CHECK(cv.lower <= cv.upper);
  CHECK(cv.bootstrap == 10000);
  const auto med = bootstrap_critical_values({1.0, 1.0}, 20, 1000, 1.0, 7);
  CHECK(med.lower == med.upper);

  const auto again = bootstrap_critical_values({1.0, 1.0}, 20, 10000, 0.05, 7);
  CHECK(again.lower == cv.lower);
  CHECK(again.upper == cv.upper);
  CHECK(bootstrap_critical_values({1.0, 1.0}, 20, 10000, 0.05, 8).upper != cv.upper);

  CHECK_THROWS_AS(bootstrap_critical_values({1.0, 1.0}, 20, 99, 0.05, 7), DomainError);
  CHECK_THROWS_AS(bootstrap_critical_values({1.0, 1.0}, 1, 500, 0.05, 7), DomainError);
}

TEST_CASE("quantile bracketing on bootstrap distributions") {
  const StatisticKind kinds[] = {StatisticKind::Delta, StatisticKind::Ks};
  const std::size_t B = 2000;
  const auto dist = bootstrap_distributions({2.0, 3.0}, 30, B, 3, kinds);
  for (double alpha : {0.01, 0.05, 0.1}) {
    const auto cv = critical_values_from(dist[0], alpha, true);
    const double below = std::count_if(dist[0].begin(), dist[0].end(),
                                       [&](double v) { return v < cv.lower; }) / double(B);
    const double above = std::count_if(dist[0].begin(), dist[0].end(),
                                       [&](double v) { return v > cv.upper; }) / double(B);
    CHECK(below <= alpha / 2.0);
    CHECK(below >= alpha / 2.0 - 1.0 / B);
    CHECK(above <= alpha / 2.0);
    CHECK(above >= alpha / 2.0 - 1.0 / B);
  }
  CHECK(std::is_sorted(dist[1].begin(), dist[1].end()));
}

TEST_CASE("resample-synthetic scheme runs and is reproducible") {
  BootstrapOptions opts;
  opts.scheme = BootstrapScheme::ResampleSynthetic;
  const auto a = bootstrap_critical_values({3.0, 1.0}, 20, 1000, 0.05, 5, opts);
  const auto b = bootstrap_critical_values({3.0, 1.0}, 20, 1000, 0.05, 5, opts);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
  CHECK(parse_scheme("resample") == BootstrapScheme::ResampleSynthetic);
  CHECK_THROWS_AS(parse_scheme("jackknife"), DomainError);
}

TEST_CASE("complete-data test report") {
  Rng rng(9);
  const auto x = sample_gamma({3.0, 2.0}, 60, rng);
  const auto r = gof_test_complete(x, 0.05, 1000, 4);
  CHECK(r.n == 60);
  CHECK(r.reject == (r.statistic.value < r.critical.lower || r.statistic.value > r.critical.upper));
  CHECK(r.critical.seed == 4);
}

TEST_CASE("large gamma sample is accepted") {
  Rng rng(10);
  const auto x = sample_gamma({3.0, 2.0}, 10000, rng);
  CHECK_FALSE(gof_test_complete(x, 0.05, 300, 1).reject);
}

TEST_CASE("power study determinism across thread counts") {
  PowerStudyConfig cfg;
  cfg.alternative = Alternative::lognormal(2.0, 1.0);
  cfg.n = 30;
  cfg.replications = 40;
  cfg.bootstrap = 200;
  cfg.alphas = {0.01, 0.05};
  cfg.statistics = {StatisticKind::Delta, StatisticKind::Cvm};
  cfg.seed = 12;
  cfg.threads = 1;
  const auto one = power_study(cfg);
  cfg.threads = 4;
  const auto four = power_study(cfg);
  REQUIRE(one.size() == 4);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].rejections == four[i].rejections);
    CHECK(one[i].rate == four[i].rate);
    CHECK(one[i].used + one[i].excluded == 40);
    CHECK(one[i].se == doctest::Approx(std::sqrt(one[i].rate * (1 - one[i].rate) / one[i].used)));
  }
  CHECK(one[0].statistic == StatisticKind::Delta);
  CHECK(one[0].alpha == 0.01);
  CHECK(one[3].statistic == StatisticKind::Cvm);
  CHECK(one[0].rate <= one[1].rate);
}

TEST_CASE("censoring calibration") {
  CHECK(calibrate_censoring_rate(Alternative::exponential(1.0), 0.5) == doctest::Approx(1.0).epsilon(1e-6));
  const auto g = Alternative::gamma(1.0, 1.0);
  const double b = calibrate_censoring_rate(g, 0.2);
  CHECK(std::fabs(censoring_probability(g, b) - 0.2) <= 1e-4);
  CHECK(calibrate_censoring_rate(g, 0.05) > b);
  Rng rng(13);
  const auto cs = censored_draw(g, b, 1000000, rng);
  CHECK(std::fabs(cs.censored_fraction() - 0.2) < 0.002);

  for (const auto& alt : {Alternative::lognormal(2.0, 1.0), Alternative::weibull(2.0, 1.0),
                          Alternative::pareto(2.0, 1.0)}) {
    for (double q : {0.2, 0.4}) {
      CHECK(std::fabs(censoring_probability(alt, calibrate_censoring_rate(alt, q)) - q) <= 1e-4);
    }
  }
  CHECK_THROWS_AS(calibrate_censoring_rate(g, 0.0), DomainError);
  CHECK_THROWS_AS(calibrate_censoring_rate(g, 1.0), DomainError);
}

TEST_CASE("censored power study bookkeeping") {
  CensoredPowerConfig cfg;
  cfg.alternative = Alternative::gamma(1.0, 1.0);
  cfg.n = 8;
  cfg.replications = 100;
  cfg.alphas = {0.01, 0.05};
  cfg.censoring = 0.6;
  cfg.seed = 2;
  const auto r = power_study_censored(cfg);
  REQUIRE(r.size() == 2);
  CHECK(r[0].used + r[0].excluded == 100);
  CHECK(r[0].excluded > 0);
  CHECK(r[0].rejections <= r[1].rejections);
  cfg.threads = 3;
  CHECK(power_study_censored(cfg)[1].rejections == r[1].rejections);
}

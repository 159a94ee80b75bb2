// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "core/errors.hpp"

namespace gammagof {

const char* estimator_name(Estimator e) {
  return e == Estimator::Moment ? "moment" : "mle";
}

Estimator parse_estimator(const std::string& name) {
  if (name == "moment" || name == "moments") return Estimator::Moment;
  if (name == "mle" || name == "ml") return Estimator::MaximumLikelihood;
  throw DomainError("unknown estimator '" + name + "' (expected moment or mle)");
}

GammaParams moments_to_params(double first, double second) {
  const double var = second - first * first;
  if (!(first > 0.0) || !(var > 0.0) || !std::isfinite(var)) {
    throw DegenerateSampleError("implied variance is not positive; moment estimates undefined");
  }
  return {first * first / var, var / first};
}

GammaParams moment_estimates(std::span<const double> x) {
  if (x.size() < 2) throw DomainError("moment estimates need at least two observations");
  const double n = static_cast<double>(x.size());
  // Shifted accumulation keeps mean-of-squares minus squared-mean accurate.
  const double pivot = x[0];
  double s1 = 0.0, s2 = 0.0;
  for (double v : x) {
    const double d = v - pivot;
    s1 += d;
    s2 += d * d;
  }
  const double mean = pivot + s1 / n;
  const double var = s2 / n - (s1 / n) * (s1 / n);
  if (!(var > 0.0)) throw DegenerateSampleError("sample variance is zero; moment estimates undefined");
  return {mean * mean / var, var / mean};
}

namespace {

// g(k) = log k - ψ(k) and g'(k). Above k = 50 the asymptotic series is used;
// the direct difference loses digits there.
void log_minus_digamma(double k, double& g, double& dg) {
  if (k < 50.0) {
    g = std::log(k) - boost::math::digamma(k);
    dg = 1.0 / k - boost::math::trigamma(k);
    return;
  }
  const double r = 1.0 / k, r2 = r * r;
  g = r * (0.5 + r * (1.0 / 12.0 + r2 * (-1.0 / 120.0 + r2 * (1.0 / 252.0 - r2 / 240.0))));
  dg = -r2 * (0.5 + r * (1.0 / 6.0 + r2 * (-1.0 / 30.0 + r2 * (1.0 / 42.0 - r2 / 30.0))));
}

}  // namespace

GammaParams mle_estimates(std::span<const double> x) {
  if (x.size() < 2) throw DomainError("maximum-likelihood fit needs at least two observations");
  const double n = static_cast<double>(x.size());
  double sum = 0.0, sum_log = 0.0;
  for (double v : x) {
    sum += v;
    sum_log += std::log(v);
  }
  const double mean = sum / n;
  const double s = std::log(mean) - sum_log / n;
  if (!(s > 1e-14)) throw DegenerateSampleError("all observations equal; likelihood has no maximum");
  // Minka's closed-form start, then Newton on g(k) = s.
  double k = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
  for (int it = 0; it < 100; ++it) {
    double g = 0.0, dg = 0.0;
    log_minus_digamma(k, g, dg);
    double next = k - (g - s) / dg;
    if (next <= 0.0) next = 0.5 * k;
    if (std::fabs(next - k) <= 1e-12 * k) return {next, mean / next};
    k = next;
  }
  throw NumericalError("gamma maximum-likelihood iteration did not converge");
}

GammaParams fit_gamma(std::span<const double> x, Estimator e) {
  return e == Estimator::Moment ? moment_estimates(x) : mle_estimates(x);
}

KaplanMeierCurve::KaplanMeierCurve(std::vector<double> jump_times, std::vector<double> survival)
    : jump_times_(std::move(jump_times)), survival_(std::move(survival)) {
  if (jump_times_.size() != survival_.size()) throw DomainError("KM curve: size mismatch");
}

double KaplanMeierCurve::at(double t) const {
  const auto it = std::upper_bound(jump_times_.begin(), jump_times_.end(), t);
  if (it == jump_times_.begin()) return 1.0;
  return survival_[static_cast<std::size_t>(it - jump_times_.begin()) - 1];
}

double KaplanMeierCurve::left_limit(double t) const {
  const auto it = std::lower_bound(jump_times_.begin(), jump_times_.end(), t);
  if (it == jump_times_.begin()) return 1.0;
  return survival_[static_cast<std::size_t>(it - jump_times_.begin()) - 1];
}

KaplanMeierCurve km_censoring_survival(const CensoredSample& cs) {
  const std::size_t n = cs.size();
  if (n == 0) throw DomainError("Kaplan-Meier: empty sample");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cs.time(a) < cs.time(b); });

  std::vector<double> times, surv;
  double s = 1.0;
  std::size_t at_risk = n;
  for (std::size_t pos = 0; pos < n;) {
    const double t = cs.time(order[pos]);
    std::size_t failures = 0, censorings = 0;
    std::size_t end = pos;
    for (; end < n && cs.time(order[end]) == t; ++end) {
      if (cs.event(order[end])) ++failures; else ++censorings;
    }
    if (censorings > 0) {
      const std::size_t risk = at_risk - failures;
      s *= 1.0 - static_cast<double>(censorings) / static_cast<double>(risk);
      times.push_back(t);
      surv.push_back(s);
    }
    at_risk -= end - pos;
    pos = end;
  }
  return KaplanMeierCurve(std::move(times), std::move(surv));
}

std::vector<double> ipcw_weights(const CensoredSample& cs, const KaplanMeierCurve& k) {
  std::vector<double> w(cs.size(), 0.0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs.event(i)) continue;
    const double kc = k.left_limit(cs.time(i));
    if (!(kc > 0.0)) {
      throw WeightSingularityError(
          i, "censoring survival is zero at uncensored observation " + std::to_string(i));
    }
    w[i] = 1.0 / kc;
  }
  return w;
}

double ipcw_mean(const CensoredSample& cs, int power, const KaplanMeierCurve& k) {
  if (power != 1 && power != 2) throw DomainError("ipcw_mean: power must be 1 or 2");
  if (cs.size() == 0) throw DomainError("ipcw_mean: empty sample");
  const auto w = ipcw_weights(cs, k);
  double acc = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const double y = cs.time(i);
    acc += w[i] * (power == 1 ? y : y * y);
  }
  return acc / static_cast<double>(cs.size());
}

GammaParams moment_estimates_censored(const CensoredSample& cs, const KaplanMeierCurve& k) {
  if (cs.event_count() < 2) {
    throw DegenerateSampleError("censored moment estimates need at least two uncensored observations");
  }
  bool all_events = cs.event_count() == cs.size();
  if (all_events) return moment_estimates(cs.times());
  return moments_to_params(ipcw_mean(cs, 1, k), ipcw_mean(cs, 2, k));
}

GammaParams moment_estimates_censored(const CensoredSample& cs) {
  return moment_estimates_censored(cs, km_censoring_survival(cs));
}

}  // namespace gammagof

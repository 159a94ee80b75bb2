// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/distributions.hpp"
#include "core/samples.hpp"

namespace gammagof {

enum class Estimator { Moment, MaximumLikelihood };

const char* estimator_name(Estimator e);
Estimator parse_estimator(const std::string& name);

// k̂ = mean²/var, λ̂ = var/mean with the n-denominator variance.
GammaParams moment_estimates(std::span<const double> x);
inline GammaParams moment_estimates(const Sample& s) { return moment_estimates(s.values()); }

// Maximum-likelihood fit: Newton iteration on log k - ψ(k) = log x̄ - mean(log x).
GammaParams mle_estimates(std::span<const double> x);

GammaParams fit_gamma(std::span<const double> x, Estimator e);

// Product-limit estimate of the censoring survival K_c(t) = P(C > t). Roles
// are flipped relative to the usual curve: δ = 0 rows are the events. At a
// shared time, failures leave the risk set before the censorings there.
class KaplanMeierCurve {
 public:
  KaplanMeierCurve() = default;
  KaplanMeierCurve(std::vector<double> jump_times, std::vector<double> survival);

  // Right-continuous value K(t).
  double at(double t) const;
  // Left limit K(t-).
  double left_limit(double t) const;

  std::span<const double> jump_times() const { return jump_times_; }
  std::span<const double> survival() const { return survival_; }

 private:
  std::vector<double> jump_times_;
  std::vector<double> survival_;
};

KaplanMeierCurve km_censoring_survival(const CensoredSample& cs);

// Inverse-probability-of-censoring weights δ_i / K(Y_i-). Throws
// WeightSingularityError naming the first event with a zero weight.
std::vector<double> ipcw_weights(const CensoredSample& cs, const KaplanMeierCurve& k);

// (1/n) Σ Y_i^power δ_i / K(Y_i-), power ∈ {1, 2}.
double ipcw_mean(const CensoredSample& cs, int power, const KaplanMeierCurve& k);

// Moment estimators built from the two IPCW moments.
GammaParams moment_estimates_censored(const CensoredSample& cs);
GammaParams moment_estimates_censored(const CensoredSample& cs, const KaplanMeierCurve& k);
// Same, from precomputed first and second IPCW moments.
GammaParams moments_to_params(double first, double second);

}  // namespace gammagof

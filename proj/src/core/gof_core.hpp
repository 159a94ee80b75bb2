// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "core/distributions.hpp"
#include "core/estimators.hpp"

namespace gammagof {

// h1(x1, x2) = min(x1, x2).
inline double kernel_min(double x1, double x2) { return x1 < x2 ? x1 : x2; }

// h2(x1, x2) = ½ (x1/x2 · I(x1 < x2) + x2/x1 · I(x2 < x1)). Exact ties give 0.
inline double kernel_ratio(double x1, double x2) {
  if (x1 < x2) return 0.5 * x1 / x2;
  if (x2 < x1) return 0.5 * x2 / x1;
  return 0.0;
}

using PairKernel = std::function<double(double, double)>;

// Average of a symmetric kernel over all unordered pairs.
double u_statistic(std::span<const double> x, const PairKernel& kernel);

// U1 and U2 by sorted-order routes: O(n log n) for U1, one ordered pass per
// pair for U2.
double u_min(std::span<const double> x);
double u_ratio(std::span<const double> x);

struct TestStatistic {
  double value = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  GammaParams params;
};

// Δ̂ = U1/λ̂ + (1 - k̂)·U2 - k̂/2.
TestStatistic delta_statistic(std::span<const double> x, Estimator e = Estimator::Moment);
TestStatistic delta_statistic(std::span<const double> x, const GammaParams& fitted);
inline TestStatistic delta_statistic(const Sample& s, Estimator e = Estimator::Moment) {
  return delta_statistic(s.values(), e);
}

double ks_statistic(std::span<const double> x, const GammaParams& p);
double cvm_statistic(std::span<const double> x, const GammaParams& p);

// Laplace-transform statistic ∫ Z1n(t)² e^{-at} dt on Y = X/λ̂,
// Z1n(t) = √n[(1+t)L'(t) + k̂ L(t)]. Adaptive Gauss–Kronrod on a truncated
// range.
double hme_statistic(std::span<const double> x, const GammaParams& fitted, double decay = 1.0);
// Fixed-point statistic ∫ Z2n(t)² e^{-at} dt, closed form per segment
// between order statistics of Y.
double be_statistic(std::span<const double> x, const GammaParams& fitted, double decay = 1.0);

// Integrands, exposed for the dense-grid checks.
double hme_z(std::span<const double> y_scaled, double shape, double t);
double be_z(std::span<const double> y_scaled, double shape, double t);

enum class StatisticKind { Delta, Hme, Be, Ks, Cvm };
const char* statistic_name(StatisticKind s);
StatisticKind parse_statistic(const std::string& name);

// Statistic evaluated for a sample at the given fit. Δ̂ ignores `decay`.
double evaluate_statistic(StatisticKind kind, std::span<const double> x, const GammaParams& fitted,
                          double decay = 1.0);

}  // namespace gammagof

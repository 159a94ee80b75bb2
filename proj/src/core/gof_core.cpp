// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/gof_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "core/quadrature.hpp"

namespace gammagof {
namespace {

std::vector<double> sorted_copy(std::span<const double> x) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  return s;
}

void require_pairs(std::size_t n) {
  if (n < 2) throw DomainError("U-statistic needs at least two observations");
}

std::vector<double> scaled_by(std::span<const double> x, double scale) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / scale;
  return y;
}

}  // namespace

double u_statistic(std::span<const double> x, const PairKernel& kernel) {
  const std::size_t n = x.size();
  require_pairs(n);
  double acc = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) acc += kernel(x[i], x[j]);
  }
  return 2.0 * acc / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double u_min(std::span<const double> x) {
  const std::size_t n = x.size();
  require_pairs(n);
  const auto s = sorted_copy(x);
  // The i-th smallest value is the minimum of exactly n - 1 - i pairs.
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += s[i] * static_cast<double>(n - 1 - i);
  return 2.0 * acc / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double u_ratio(std::span<const double> x) {
  const std::size_t n = x.size();
  require_pairs(n);
  const auto s = sorted_copy(x);
  // Σ_{pairs, a<b} a/b = Σ_b (1/b)·Σ_{a strictly below b} a.
  double acc = 0.0;
  double below = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t end = i;
    double block = 0.0;
    for (; end < n && s[end] == s[i]; ++end) block += s[end];
    acc += static_cast<double>(end - i) * below / s[i];
    below += block;
    i = end;
  }
  return acc / (static_cast<double>(n) * static_cast<double>(n - 1));
}

TestStatistic delta_statistic(std::span<const double> x, const GammaParams& fitted) {
  fitted.validate();
  TestStatistic t;
  t.u1 = u_min(x);
  t.u2 = u_ratio(x);
  t.params = fitted;
  t.value = t.u1 / fitted.scale + (1.0 - fitted.shape) * t.u2 - 0.5 * fitted.shape;
  return t;
}

TestStatistic delta_statistic(std::span<const double> x, Estimator e) {
  require_pairs(x.size());
  return delta_statistic(x, fit_gamma(x, e));
}

double ks_statistic(std::span<const double> x, const GammaParams& p) {
  if (x.empty()) throw DomainError("KS statistic: empty sample");
  const auto s = sorted_copy(x);
  const double n = static_cast<double>(s.size());
  double d_plus = -1.0, d_minus = -1.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = gamma_cdf(s[i], p);
    d_plus = std::max(d_plus, static_cast<double>(i + 1) / n - f);
    d_minus = std::max(d_minus, f - static_cast<double>(i) / n);
  }
  return std::max(d_plus, d_minus);
}

double cvm_statistic(std::span<const double> x, const GammaParams& p) {
  if (x.empty()) throw DomainError("CvM statistic: empty sample");
  const auto s = sorted_copy(x);
  const double n = static_cast<double>(s.size());
  double acc = 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double r = gamma_cdf(s[i], p) - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    acc += r * r;
  }
  return acc;
}

double hme_z(std::span<const double> y, double shape, double t) {
  const double n = static_cast<double>(y.size());
  double laplace = 0.0, derivative = 0.0;
  for (double v : y) {
    const double e = std::exp(-t * v);
    laplace += e;
    derivative -= v * e;
  }
  laplace /= n;
  derivative /= n;
  return std::sqrt(n) * ((1.0 + t) * derivative + shape * laplace);
}

double be_z(std::span<const double> y, double shape, double t) {
  const double n = static_cast<double>(y.size());
  double fixed_point = 0.0, ecdf = 0.0;
  for (double v : y) {
    fixed_point += ((1.0 - shape) / v + 1.0) * std::min(v, t);
    if (v <= t) ecdf += 1.0;
  }
  return std::sqrt(n) * (fixed_point - ecdf) / n;
}

double hme_statistic(std::span<const double> x, const GammaParams& fitted, double decay) {
  fitted.validate();
  if (x.size() < 2) throw DomainError("HME statistic needs at least two observations");
  if (!(decay > 0.0)) throw DomainError("weight decay must be positive");
  const auto y = scaled_by(x, fitted.scale);
  const double n = static_cast<double>(y.size());
  double y_min = y[0], y_mean = 0.0;
  for (double v : y) {
    y_min = std::min(y_min, v);
    y_mean += v / n;
  }
  auto integrand = [&](double t) {
    const double z = hme_z(y, fitted.shape, t);
    return z * z * std::exp(-decay * t);
  };
  // |Z(t)| <= √n((1+t)ȳ + k)e^{-t·min y}; grow T until the tail bound is
  // negligible against the accumulated integral.
  const double rate = decay + 2.0 * y_min;
  const double b0 = y_mean + fitted.shape;
  auto tail_bound = [&](double from) {
    return n * quadratic_exp_integral(b0 * b0, 2.0 * b0 * y_mean, y_mean * y_mean, rate, from,
                                      std::numeric_limits<double>::infinity());
  };
  double upper = 10.0 / rate;
  double value = integrate(integrand, 0.0, upper, 1e-12, 1e-6);
  for (int grow = 0; grow < 60 && tail_bound(upper) > 1e-12 * std::fmax(value, 1e-300); ++grow) {
    const double next = 2.0 * upper;
    value += integrate(integrand, upper, next, 1e-12, 1e-6);
    upper = next;
  }
  return value;
}

double be_statistic(std::span<const double> x, const GammaParams& fitted, double decay) {
  fitted.validate();
  if (x.size() < 2) throw DomainError("BE statistic needs at least two observations");
  if (!(decay > 0.0)) throw DomainError("weight decay must be positive");
  auto y = scaled_by(x, fitted.scale);
  std::sort(y.begin(), y.end());
  const std::size_t n = y.size();
  const double nd = static_cast<double>(n);
  std::vector<double> c(n);
  double slope_tail = 0.0;  // Σ_{y_i > t} c_i, starts with every point above t = 0
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = (1.0 - fitted.shape) / y[i] + 1.0;
    slope_tail += c[i];
  }
  // On [y_(m), y_(m+1)) the integrand is n^{-1}(A + B t)² e^{-at} with
  // A = Σ_{i<=m} c_i y_i - m and B = Σ_{i>m} c_i.
  double intercept = 0.0;
  double prev = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i <= n;) {
    const double next = i < n ? y[i] : std::numeric_limits<double>::infinity();
    if (next > prev) {
      total += quadratic_exp_integral(intercept * intercept, 2.0 * intercept * slope_tail,
                                      slope_tail * slope_tail, decay, prev, next);
    }
    if (i == n) break;
    std::size_t end = i;
    for (; end < n && y[end] == y[i]; ++end) {
      intercept += c[end] * y[end] - 1.0;
      slope_tail -= c[end];
    }
    prev = next;
    i = end;
  }
  return total / nd;
}

const char* statistic_name(StatisticKind s) {
  switch (s) {
    case StatisticKind::Delta: return "delta";
    case StatisticKind::Hme: return "hme";
    case StatisticKind::Be: return "be";
    case StatisticKind::Ks: return "ks";
    case StatisticKind::Cvm: return "cvm";
  }
  return "unknown";
}

StatisticKind parse_statistic(const std::string& name) {
  if (name == "delta") return StatisticKind::Delta;
  if (name == "hme") return StatisticKind::Hme;
  if (name == "be") return StatisticKind::Be;
  if (name == "ks") return StatisticKind::Ks;
  if (name == "cvm") return StatisticKind::Cvm;
  throw DomainError("unknown statistic '" + name + "' (expected delta, hme, be, ks or cvm)");
}

double evaluate_statistic(StatisticKind kind, std::span<const double> x, const GammaParams& fitted,
                          double decay) {
  switch (kind) {
    case StatisticKind::Delta: return delta_statistic(x, fitted).value;
    case StatisticKind::Hme: return hme_statistic(x, fitted, decay);
    case StatisticKind::Be: return be_statistic(x, fitted, decay);
    case StatisticKind::Ks: return ks_statistic(x, fitted);
    case StatisticKind::Cvm: return cvm_statistic(x, fitted);
  }
  return 0.0;
}

}  // namespace gammagof

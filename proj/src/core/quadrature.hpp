// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "core/errors.hpp"

namespace gammagof {

// Adaptive 61-point Gauss–Kronrod on [lo, hi] (hi may be +inf). Throws
// NumericalError when the estimated relative error exceeds `max_rel_error`.
template <class F>
double integrate(F&& f, double lo, double hi, double tol = 1e-12, double max_rel_error = 1e-6) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, lo, hi, 20, tol, &error, &l1);
  if (!std::isfinite(value) || error > max_rel_error * std::fmax(l1, std::numeric_limits<double>::min())) {
    throw NumericalError("adaptive quadrature did not reach its tolerance");
  }
  return value;
}

// ∫_lo^hi (c0 + c1 t + c2 t²) e^{-rate·t} dt for rate > 0; hi may be +inf.
inline double quadratic_exp_integral(double c0, double c1, double c2, double rate, double lo,
                                     double hi) {
  auto antiderivative = [&](double t) {
    if (std::isinf(t)) return 0.0;
    const double p = c0 + c1 * t + c2 * t * t;
    const double dp = c1 + 2.0 * c2 * t;
    const double ddp = 2.0 * c2;
    return -std::exp(-rate * t) * (p / rate + dp / (rate * rate) + ddp / (rate * rate * rate));
  };
  return antiderivative(hi) - antiderivative(lo);
}

}  // namespace gammagof

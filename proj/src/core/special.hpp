// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace gammagof {

// Regularized lower incomplete gamma P(a, x) = γ(a, x) / Γ(a), a > 0, x >= 0.
// Series expansion for x < a + 1, Lentz continued fraction for Q otherwise.
double regularized_gamma_p(double a, double x);

// Complement Q(a, x) = 1 - P(a, x), computed without cancellation.
double regularized_gamma_q(double a, double x);

// Standard normal CDF and upper-tail quantile helpers.
double normal_cdf(double z);
double normal_upper_quantile(double alpha);

}  // namespace gammagof

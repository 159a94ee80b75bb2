// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "core/distributions.hpp"
#include "core/estimators.hpp"
#include "core/samples.hpp"

namespace gammagof {

// IPCW pair estimators. Only pairs of uncensored observations contribute,
// each weighted by 1/(K(Y_i-)K(Y_j-)).
//   delta1c: 2/(n(n-1)) Σ_{i>j} min(Y_i, Y_j) w_i w_j            → E min(X1, X2)
//   delta2c: 1/(n(n-1)) Σ_{i>j} (ratio both ways) w_i w_j        → E[X1/X2 I(X1<X2)]
//   delta3c: 1/(n(n-1)) Σ_{i>j} (I(Y_i<Y_j)+I(Y_j<Y_i)) w_i w_j  → P(X1 < X2)
double delta1c(const CensoredSample& cs, const KaplanMeierCurve& k);
double delta2c(const CensoredSample& cs, const KaplanMeierCurve& k);
double delta3c(const CensoredSample& cs, const KaplanMeierCurve& k);

struct CensoredStatistic {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  GammaParams params;
};

// Δ̂_c = Δ̂1c/λ̂_c + (1 - k̂_c)Δ̂2c - k̂_c Δ̂3c with IPCW moment estimates.
CensoredStatistic delta_censored(const CensoredSample& cs);
CensoredStatistic delta_censored(const CensoredSample& cs, const KaplanMeierCurve& k);

enum class VarianceMethod {
  // Reweighting estimator built from the projection ĥ1 and the censoring
  // martingale correction.
  Reweighted,
  // Reweighted, with the first-order effect of estimating (k, λ) from the
  // IPCW moments folded into the projection.
  EstimationAdjusted,
};

const char* variance_method_name(VarianceMethod m);
VarianceMethod parse_variance_method(const std::string& name);

// σ̂_c² = 4/(n-1) Σ (V_i - V̄)², with
//   V_i = ĥ1(Y_i) δ_i / K(Y_i-) + ŵ(Y_i)(1 - δ_i)
//         - Σ_j ŵ(Y_j)(1 - δ_j) I(Y_i >= Y_j) / #{l : Y_l >= Y_j},
//   ĥ1(x) = (1/n) Σ_i h(x, Y_i) δ_i / K(Y_i-),
//   ŵ(t)  = [(1/n) Σ_i ĥ1(Y_i) δ_i / K(Y_i-) I(Y_i > t)] / R(t),
//   R(t)  = (1/n) #{i : Y_i > t},  ŵ(t) = 0 where R(t) = 0,
// and h the symmetric kernel of Δ at the fitted (k, λ).
double variance_censored(const CensoredSample& cs, const GammaParams& fitted,
                         VarianceMethod method = VarianceMethod::Reweighted);
double variance_censored(const CensoredSample& cs, const GammaParams& fitted,
                         const KaplanMeierCurve& k, VarianceMethod method);

// h(x, y) = ½[2 min(x,y)/λ + (1-k)(x/y I(x<y) + y/x I(y<x)) - k(I(x<y) + I(y<x))].
double censored_kernel(double x, double y, const GammaParams& p);

struct CensoredTestReport {
  CensoredStatistic statistic;
  double variance = 0.0;  // σ̂_c²
  double z = 0.0;         // √n |Δ̂_c| / σ̂_c
  double p_value = 1.0;   // two-sided normal
  double critical = 0.0;  // Z_{α/2}
  double alpha = 0.05;
  bool reject = false;
  std::size_t n = 0;
  std::size_t events = 0;
  VarianceMethod method = VarianceMethod::Reweighted;
};

CensoredTestReport censored_test(const CensoredSample& cs, double alpha,
                                 VarianceMethod method = VarianceMethod::Reweighted);

}  // namespace gammagof

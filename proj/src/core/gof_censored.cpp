// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/gof_censored.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "core/errors.hpp"
#include "core/special.hpp"

namespace gammagof {
namespace {

struct WeightedPoint {
  double y;
  double w;
};

// Uncensored observations with their IPCW weights, ascending in time.
std::vector<WeightedPoint> weighted_events(const CensoredSample& cs, const KaplanMeierCurve& k) {
  const auto w = ipcw_weights(cs, k);
  std::vector<WeightedPoint> pts;
  pts.reserve(cs.event_count());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs.event(i)) pts.push_back({cs.time(i), w[i]});
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
  return pts;
}

double pair_count(const CensoredSample& cs) {
  const double n = static_cast<double>(cs.size());
  if (cs.size() < 2) throw DomainError("censored U-statistics need at least two observations");
  return n * (n - 1.0);
}

// Visits blocks of tied times: f(begin, end) over indices of `pts`.
template <class F>
void for_each_tie_block(const std::vector<WeightedPoint>& pts, F&& f) {
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t end = i;
    while (end < pts.size() && pts[end].y == pts[i].y) ++end;
    f(i, end);
    i = end;
  }
}

}  // namespace

double delta1c(const CensoredSample& cs, const KaplanMeierCurve& k) {
  const double pairs = pair_count(cs);
  const auto pts = weighted_events(cs, k);
  // In ascending order each point is the minimum of every pair it forms
  // with a later point (tied partners share the same minimum).
  double later = 0.0;
  for (const auto& p : pts) later += p.w;
  double acc = 0.0;
  for (const auto& p : pts) {
    later -= p.w;
    acc += p.y * p.w * later;
  }
  return 2.0 * acc / pairs;
}

double delta2c(const CensoredSample& cs, const KaplanMeierCurve& k) {
  const double pairs = pair_count(cs);
  const auto pts = weighted_events(cs, k);
  double below = 0.0;  // Σ y·w over strictly smaller times
  double acc = 0.0;
  for_each_tie_block(pts, [&](std::size_t b, std::size_t e) {
    double block = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      acc += pts[i].w / pts[i].y * below;
      block += pts[i].y * pts[i].w;
    }
    below += block;
  });
  return acc / pairs;
}

double delta3c(const CensoredSample& cs, const KaplanMeierCurve& k) {
  const double pairs = pair_count(cs);
  const auto pts = weighted_events(cs, k);
  double below = 0.0;  // Σ w over strictly smaller times
  double acc = 0.0;
  for_each_tie_block(pts, [&](std::size_t b, std::size_t e) {
    double block = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      acc += pts[i].w * below;
      block += pts[i].w;
    }
    below += block;
  });
  return acc / pairs;
}

CensoredStatistic delta_censored(const CensoredSample& cs, const KaplanMeierCurve& k) {
  CensoredStatistic s;
  s.params = moment_estimates_censored(cs, k);
  s.d1 = delta1c(cs, k);
  s.d2 = delta2c(cs, k);
  s.d3 = delta3c(cs, k);
  s.value = s.d1 / s.params.scale + (1.0 - s.params.shape) * s.d2 - s.params.shape * s.d3;
  return s;
}

CensoredStatistic delta_censored(const CensoredSample& cs) {
  return delta_censored(cs, km_censoring_survival(cs));
}

const char* variance_method_name(VarianceMethod m) {
  return m == VarianceMethod::Reweighted ? "reweighted" : "estimation-adjusted";
}

VarianceMethod parse_variance_method(const std::string& name) {
  if (name == "reweighted") return VarianceMethod::Reweighted;
  if (name == "estimation-adjusted" || name == "adjusted") return VarianceMethod::EstimationAdjusted;
  throw DomainError("unknown variance method '" + name + "' (expected reweighted or adjusted)");
}

double censored_kernel(double x, double y, const GammaParams& p) {
  double ratio = 0.0, order = 0.0;
  if (x < y) {
    ratio = x / y;
    order = 1.0;
  } else if (y < x) {
    ratio = y / x;
    order = 1.0;
  }
  return 0.5 * (2.0 * std::min(x, y) / p.scale + (1.0 - p.shape) * ratio - p.shape * order);
}

double variance_censored(const CensoredSample& cs, const GammaParams& fitted,
                         const KaplanMeierCurve& k, VarianceMethod method) {
  fitted.validate();
  const std::size_t n = cs.size();
  if (n < 3) throw DomainError("variance estimate needs at least three observations");
  const double nd = static_cast<double>(n);
  const auto w = ipcw_weights(cs, k);

  // Projection ĥ1 at every uncensored time (censored rows never use it).
  std::vector<double> proj(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!cs.event(a)) continue;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (cs.event(i)) acc += censored_kernel(cs.time(a), cs.time(i), fitted) * w[i];
    }
    proj[a] = acc / nd;
  }

  if (method == VarianceMethod::EstimationAdjusted) {
    // Δ̂_c = Φ(d1, d2, d3, k(m1, m2), λ(m1, m2)); add ½(∂Φ/∂m1·y + ∂Φ/∂m2·y²)
    // to the projection.
    const double m1 = ipcw_mean(cs, 1, k);
    const double m2 = ipcw_mean(cs, 2, k);
    const double var = m2 - m1 * m1;
    const double d1 = delta1c(cs, k), d2 = delta2c(cs, k), d3 = delta3c(cs, k);
    const double dphi_dk = -d2 - d3;
    const double dphi_dl = -d1 / (fitted.scale * fitted.scale);
    const double dk_dm1 = 2.0 * m1 / var + 2.0 * m1 * m1 * m1 / (var * var);
    const double dk_dm2 = -m1 * m1 / (var * var);
    const double dl_dm1 = -1.0 - m2 / (m1 * m1);
    const double dl_dm2 = 1.0 / m1;
    const double c1 = dphi_dk * dk_dm1 + dphi_dl * dl_dm1;
    const double c2 = dphi_dk * dk_dm2 + dphi_dl * dl_dm2;
    for (std::size_t a = 0; a < n; ++a) {
      if (!cs.event(a)) continue;
      const double y = cs.time(a);
      proj[a] += 0.5 * (c1 * y + c2 * y * y);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cs.time(a) < cs.time(b); });

  double tail_mass = 0.0;  // Σ ĥ1·δ·w over times strictly greater than current block
  for (std::size_t i = 0; i < n; ++i) tail_mass += proj[i] * w[i];

  // Walk tie blocks upward, accumulating the Nelson–Aalen-weighted
  // compensator Σ_j ŵ(Y_j)(1-δ_j)/#{Y >= Y_j}.
  std::vector<double> w_hat(n, 0.0), compensator(n, 0.0);
  double cumulative = 0.0;
  std::size_t before = 0;
  for (std::size_t pos = 0; pos < n;) {
    const double t = cs.time(order[pos]);
    std::size_t end = pos;
    std::size_t censored = 0;
    for (; end < n && cs.time(order[end]) == t; ++end) {
      const std::size_t i = order[end];
      tail_mass -= proj[i] * w[i];
      if (!cs.event(i)) ++censored;
    }
    const std::size_t at_or_after = n - before;
    const std::size_t after = n - end;
    const double wt = after > 0 ? tail_mass / static_cast<double>(after) : 0.0;
    cumulative += static_cast<double>(censored) * wt / static_cast<double>(at_or_after);
    for (std::size_t q = pos; q < end; ++q) {
      w_hat[order[q]] = wt;
      compensator[order[q]] = cumulative;
    }
    before = end;
    pos = end;
  }

  std::vector<double> v(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = proj[i] * w[i] + (cs.event(i) ? 0.0 : w_hat[i]) - compensator[i];
    mean += v[i];
  }
  mean /= nd;
  double ss = 0.0;
  for (double vi : v) ss += (vi - mean) * (vi - mean);
  return 4.0 * ss / (nd - 1.0);
}

double variance_censored(const CensoredSample& cs, const GammaParams& fitted,
                         VarianceMethod method) {
  return variance_censored(cs, fitted, km_censoring_survival(cs), method);
}

CensoredTestReport censored_test(const CensoredSample& cs, double alpha, VarianceMethod method) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("significance level must lie in (0, 1)");
  const auto k = km_censoring_survival(cs);
  CensoredTestReport r;
  r.statistic = delta_censored(cs, k);
  r.variance = variance_censored(cs, r.statistic.params, k, method);
  if (!(r.variance > 0.0)) throw DegenerateSampleError("estimated variance is zero");
  r.n = cs.size();
  r.events = cs.event_count();
  r.alpha = alpha;
  r.method = method;
  r.z = std::sqrt(static_cast<double>(r.n)) * std::fabs(r.statistic.value) / std::sqrt(r.variance);
  r.p_value = std::erfc(r.z / std::sqrt(2.0));
  r.critical = normal_upper_quantile(alpha / 2.0);
  r.reject = r.z > r.critical;
  return r;
}

}  // namespace gammagof

// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/rng.hpp"

namespace gammagof {

// Gamma law with density λ^{-k} x^{k-1} e^{-x/λ} / Γ(k).
struct GammaParams {
  double shape = 1.0;  // k
  double scale = 1.0;  // λ

  void validate() const;
  double mean() const { return shape * scale; }
  double variance() const { return shape * scale * scale; }
  bool operator==(const GammaParams&) const = default;
};

enum class Family { Gamma, Exponential, Weibull, Lognormal, Pareto };

const char* family_name(Family f);
Family parse_family(const std::string& name);

// Lifetime law used as the null or an alternative.
//   gamma:       first = shape k,     second = scale λ
//   exponential: first = scale
//   weibull:     first = shape k,     second = scale λ,  F = 1 - exp(-(x/λ)^k)
//   lognormal:   first = location μ,  second = σ,        F = Φ((ln x - μ)/σ)
//   pareto:      first = index α,     second = scale λ,  F = 1 - (λ/x)^α on x > λ
struct Alternative {
  Family family = Family::Gamma;
  double first = 1.0;
  double second = 1.0;

  static Alternative gamma(double shape, double scale) { return {Family::Gamma, shape, scale}; }
  static Alternative exponential(double scale) { return {Family::Exponential, scale, 0.0}; }
  static Alternative weibull(double shape, double scale) { return {Family::Weibull, shape, scale}; }
  static Alternative lognormal(double mu, double sigma) { return {Family::Lognormal, mu, sigma}; }
  static Alternative pareto(double index, double scale) { return {Family::Pareto, index, scale}; }

  void validate() const;
  std::string label() const;  // e.g. "weibull(2,1)"
};

double gamma_pdf(double x, const GammaParams& p);
double gamma_cdf(double x, const GammaParams& p);
// Survival 1 - F(x) without cancellation in the upper tail.
double gamma_sf(double x, const GammaParams& p);

double alternative_cdf(const Alternative& spec, double x);
double alternative_sf(const Alternative& spec, double x);

// Marsaglia–Tsang squeeze sampler for unit-scale gamma; shape < 1 is
// boosted through G(k) = G(k+1)·U^{1/k}.
class GammaSampler {
 public:
  explicit GammaSampler(double shape);
  double operator()(Rng& rng) const;

 private:
  double shape_;
  double boosted_;  // shape actually fed to the squeeze step (>= 1)
  double d_;
  double c_;
};

double draw(const Alternative& spec, Rng& rng);
std::vector<double> sample(const Alternative& spec, std::size_t n, Rng& rng);
// Gamma draws as scale·G(k, 1), so equal seeds give exactly proportional samples.
std::vector<double> sample_gamma(const GammaParams& p, std::size_t n, Rng& rng);

}  // namespace gammagof

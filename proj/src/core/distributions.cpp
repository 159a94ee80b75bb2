// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "core/errors.hpp"
#include "core/special.hpp"

namespace gammagof {
namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void GammaParams::validate() const {
  if (!positive(shape) || !positive(scale)) {
    throw DomainError("gamma parameters must be positive and finite");
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Gamma: return "gamma";
    case Family::Exponential: return "exponential";
    case Family::Weibull: return "weibull";
    case Family::Lognormal: return "lognormal";
    case Family::Pareto: return "pareto";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "gamma") return Family::Gamma;
  if (name == "exponential") return Family::Exponential;
  if (name == "weibull") return Family::Weibull;
  if (name == "lognormal") return Family::Lognormal;
  if (name == "pareto") return Family::Pareto;
  throw DomainError("unknown distribution family '" + name + "'");
}

void Alternative::validate() const {
  switch (family) {
    case Family::Exponential:
      if (!positive(first)) throw DomainError("exponential scale must be positive");
      return;
    case Family::Lognormal:
      if (!std::isfinite(first) || !positive(second)) {
        throw DomainError("lognormal needs finite location and positive sigma");
      }
      return;
    default:
      if (!positive(first) || !positive(second)) {
        throw DomainError(std::string(family_name(family)) + " parameters must be positive");
      }
  }
}

std::string Alternative::label() const {
  std::ostringstream os;
  os << family_name(family) << '(' << first;
  if (family != Family::Exponential) os << ',' << second;
  os << ')';
  return os.str();
}

double gamma_pdf(double x, const GammaParams& p) {
  p.validate();
  if (!(x > 0.0)) throw DomainError("gamma_pdf: x must be positive");
  const double z = x / p.scale;
  return std::exp((p.shape - 1.0) * std::log(z) - z - std::lgamma(p.shape)) / p.scale;
}

double gamma_cdf(double x, const GammaParams& p) {
  p.validate();
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(p.shape, x / p.scale);
}

double gamma_sf(double x, const GammaParams& p) {
  p.validate();
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(p.shape, x / p.scale);
}

double alternative_sf(const Alternative& spec, double x) {
  spec.validate();
  switch (spec.family) {
    case Family::Gamma:
      return gamma_sf(x, {spec.first, spec.second});
    case Family::Exponential:
      return x <= 0.0 ? 1.0 : std::exp(-x / spec.first);
    case Family::Weibull:
      return x <= 0.0 ? 1.0 : std::exp(-std::pow(x / spec.second, spec.first));
    case Family::Lognormal:
      return x <= 0.0 ? 1.0
                      : 0.5 * std::erfc((std::log(x) - spec.first) / (spec.second * std::sqrt(2.0)));
    case Family::Pareto:
      return x <= spec.second ? 1.0 : std::pow(spec.second / x, spec.first);
  }
  return 1.0;
}

double alternative_cdf(const Alternative& spec, double x) {
  spec.validate();
  switch (spec.family) {
    case Family::Gamma:
      return gamma_cdf(x, {spec.first, spec.second});
    case Family::Exponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-x / spec.first);
    case Family::Weibull:
      return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / spec.second, spec.first));
    case Family::Lognormal:
      return x <= 0.0 ? 0.0 : normal_cdf((std::log(x) - spec.first) / spec.second);
    case Family::Pareto:
      return x <= spec.second ? 0.0 : -std::expm1(spec.first * std::log(spec.second / x));
  }
  return 0.0;
}

GammaSampler::GammaSampler(double shape) : shape_(shape) {
  if (!positive(shape)) throw DomainError("gamma sampler: shape must be positive");
  boosted_ = shape < 1.0 ? shape + 1.0 : shape;
  d_ = boosted_ - 1.0 / 3.0;
  c_ = 1.0 / std::sqrt(9.0 * d_);
}

double GammaSampler::operator()(Rng& rng) const {
  double x;
  for (;;) {
    const double z = rng.normal();
    double v = 1.0 + c_ * z;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.uniform();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) {
      x = d_ * v;
      break;
    }
    if (std::log(u) < 0.5 * z2 + d_ * (1.0 - v + std::log(v))) {
      x = d_ * v;
      break;
    }
  }
  if (shape_ < 1.0) {
    // Log scale: U^{1/k} underflows for tiny k.
    const double lx = std::log(x) + std::log(rng.uniform()) / shape_;
    x = std::exp(lx);
    if (x <= 0.0) x = std::numeric_limits<double>::min();
  }
  return x;
}

double draw(const Alternative& spec, Rng& rng) {
  switch (spec.family) {
    case Family::Gamma:
      return spec.second * GammaSampler(spec.first)(rng);
    case Family::Exponential:
      return -spec.first * std::log(rng.uniform());
    case Family::Weibull:
      return spec.second * std::pow(-std::log(rng.uniform()), 1.0 / spec.first);
    case Family::Lognormal:
      return std::exp(spec.first + spec.second * rng.normal());
    case Family::Pareto:
      return spec.second * std::pow(rng.uniform(), -1.0 / spec.first);
  }
  return 0.0;
}

std::vector<double> sample(const Alternative& spec, std::size_t n, Rng& rng) {
  spec.validate();
  if (n == 0) throw DomainError("sample size must be at least 1");
  if (spec.family == Family::Gamma) return sample_gamma({spec.first, spec.second}, n, rng);
  std::vector<double> out(n);
  for (auto& v : out) v = draw(spec, rng);
  return out;
}

std::vector<double> sample_gamma(const GammaParams& p, std::size_t n, Rng& rng) {
  p.validate();
  const GammaSampler unit(p.shape);
  std::vector<double> out(n);
  for (auto& v : out) v = p.scale * unit(rng);
  return out;
}

}  // namespace gammagof

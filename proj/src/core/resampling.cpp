// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/quadrature.hpp"
#include "core/special.hpp"

namespace gammagof {
namespace {

constexpr std::uint64_t kBootstrapStream = 0xb0075a3b1e5eedULL;
constexpr std::uint64_t kCensoringStream = 0xce75011edULL;

// Fits and evaluates every requested statistic on one sample. Returns false
// for samples the estimator cannot handle.
bool evaluate_all(std::span<const double> x, std::span<const StatisticKind> kinds,
                  const BootstrapOptions& opts, std::vector<double>& out) {
  GammaParams fit;
  try {
    fit = fit_gamma(x, opts.estimator);
    fit.validate();
  } catch (const DegenerateSampleError&) {
    return false;
  } catch (const DomainError&) {
    return false;
  } catch (const NumericalError&) {
    return false;
  }
  out.resize(kinds.size());
  for (std::size_t s = 0; s < kinds.size(); ++s) {
    out[s] = evaluate_statistic(kinds[s], x, fit, opts.decay);
    if (!std::isfinite(out[s])) return false;
  }
  return true;
}

}  // namespace

const char* scheme_name(BootstrapScheme s) {
  return s == BootstrapScheme::Parametric ? "parametric" : "resample";
}

BootstrapScheme parse_scheme(const std::string& name) {
  if (name == "parametric") return BootstrapScheme::Parametric;
  if (name == "resample") return BootstrapScheme::ResampleSynthetic;
  throw DomainError("unknown bootstrap scheme '" + name + "' (expected parametric or resample)");
}

double empirical_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("quantile of an empty distribution");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

bool two_sided(StatisticKind kind) { return kind == StatisticKind::Delta; }

CriticalValues critical_values_from(std::span<const double> sorted, double alpha, bool both) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("significance level must lie in (0, 1]");
  CriticalValues cv;
  cv.alpha = alpha;
  cv.bootstrap = sorted.size();
  if (both) {
    cv.lower = empirical_quantile(sorted, alpha / 2.0);
    cv.upper = empirical_quantile(sorted, 1.0 - alpha / 2.0);
  } else {
    cv.lower = -std::numeric_limits<double>::infinity();
    cv.upper = empirical_quantile(sorted, 1.0 - alpha);
  }
  return cv;
}

std::vector<std::vector<double>> bootstrap_distributions(const GammaParams& p, std::size_t n,
                                                         std::size_t bootstrap, std::uint64_t seed,
                                                         std::span<const StatisticKind> kinds,
                                                         const BootstrapOptions& opts) {
  p.validate();
  if (n < 2) throw DomainError("bootstrap sample size must be at least 2");
  if (bootstrap < 100) throw DomainError("bootstrap size must be at least 100");
  if (kinds.empty()) throw DomainError("no statistic requested");

  Rng rng(seed);
  const GammaSampler unit(p.shape);
  std::vector<double> synthetic;
  if (opts.scheme == BootstrapScheme::ResampleSynthetic) {
    // The synthetic base sample itself must admit a fit.
    std::vector<double> scratch;
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt >= 10 * bootstrap) throw DegenerateSampleError("could not draw a usable base sample");
      synthetic.assign(n, 0.0);
      for (auto& v : synthetic) v = p.scale * unit(rng);
      if (evaluate_all(synthetic, kinds, opts, scratch)) break;
    }
  }

  std::vector<std::vector<double>> dist(kinds.size());
  for (auto& d : dist) d.reserve(bootstrap);
  std::vector<double> x(n), values;
  std::size_t attempts = 0;
  while (dist[0].size() < bootstrap) {
    if (++attempts > 10 * bootstrap) {
      throw DegenerateSampleError("too many degenerate bootstrap samples");
    }
    if (opts.scheme == BootstrapScheme::Parametric) {
      for (auto& v : x) v = p.scale * unit(rng);
    } else {
      for (auto& v : x) v = synthetic[rng.below(n)];
    }
    if (!evaluate_all(x, kinds, opts, values)) continue;
    for (std::size_t s = 0; s < kinds.size(); ++s) dist[s].push_back(values[s]);
  }
  for (auto& d : dist) std::sort(d.begin(), d.end());
  return dist;
}

CriticalValues bootstrap_critical_values(const GammaParams& p, std::size_t n, std::size_t bootstrap,
                                         double alpha, std::uint64_t seed,
                                         const BootstrapOptions& opts) {
  const StatisticKind kind = StatisticKind::Delta;
  const auto dist = bootstrap_distributions(p, n, bootstrap, seed, {&kind, 1}, opts);
  auto cv = critical_values_from(dist[0], alpha, true);
  cv.seed = seed;
  return cv;
}

TestReport gof_test_complete(std::span<const double> x, double alpha, std::size_t bootstrap,
                             std::uint64_t seed, const BootstrapOptions& opts) {
  TestReport r;
  r.n = x.size();
  r.estimator = opts.estimator;
  r.scheme = opts.scheme;
  r.statistic = delta_statistic(x, opts.estimator);
  r.critical = bootstrap_critical_values(r.statistic.params, x.size(), bootstrap, alpha, seed, opts);
  r.reject = r.statistic.value < r.critical.lower || r.statistic.value > r.critical.upper;
  return r;
}

void set_standard_error(PowerEstimate& e) {
  if (e.used == 0) {
    e.rate = 0.0;
    e.se = 0.0;
    return;
  }
  e.rate = static_cast<double>(e.rejections) / static_cast<double>(e.used);
  e.se = std::sqrt(e.rate * (1.0 - e.rate) / static_cast<double>(e.used));
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("GAMMAGOF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<PowerEstimate> power_study(const PowerStudyConfig& cfg) {
  cfg.alternative.validate();
  if (cfg.replications < 1) throw DomainError("power study needs at least one replication");
  if (cfg.alphas.empty() || cfg.statistics.empty()) throw DomainError("no level or statistic requested");
  const std::size_t levels = cfg.alphas.size();
  const std::size_t stats = cfg.statistics.size();

  // Decisions per (statistic, α) for one replication; unused when excluded.
  struct Outcome {
    bool used = false;
    std::vector<std::uint8_t> reject;
  };
  std::vector<Outcome> outcomes(cfg.replications);
  const unsigned threads = cfg.threads == 0 ? default_thread_count() : cfg.threads;

  parallel_for(cfg.replications, threads, [&](std::size_t r) {
    Rng rng = Rng::stream(cfg.seed, r);
    const auto x = sample(cfg.alternative, cfg.n, rng);
    GammaParams fit;
    try {
      fit = fit_gamma(x, cfg.options.estimator);
      fit.validate();
    } catch (const Error&) {
      return;
    }
    std::vector<double> observed(stats);
    for (std::size_t s = 0; s < stats; ++s) {
      observed[s] = evaluate_statistic(cfg.statistics[s], x, fit, cfg.options.decay);
    }
    std::vector<std::vector<double>> dist;
    try {
      dist = bootstrap_distributions(fit, cfg.n, cfg.bootstrap,
                                     derive_seed(cfg.seed ^ kBootstrapStream, r), cfg.statistics,
                                     cfg.options);
    } catch (const DegenerateSampleError&) {
      return;
    }
    Outcome o;
    o.used = true;
    o.reject.resize(stats * levels);
    for (std::size_t s = 0; s < stats; ++s) {
      for (std::size_t a = 0; a < levels; ++a) {
        const auto cv = critical_values_from(dist[s], cfg.alphas[a], two_sided(cfg.statistics[s]));
        o.reject[s * levels + a] = observed[s] < cv.lower || observed[s] > cv.upper;
      }
    }
    outcomes[r] = std::move(o);
  });

  std::vector<PowerEstimate> out;
  out.reserve(stats * levels);
  for (std::size_t s = 0; s < stats; ++s) {
    for (std::size_t a = 0; a < levels; ++a) {
      PowerEstimate e;
      e.alternative = cfg.alternative;
      e.statistic = cfg.statistics[s];
      e.n = cfg.n;
      e.replications = cfg.replications;
      e.bootstrap = cfg.bootstrap;
      e.alpha = cfg.alphas[a];
      for (const auto& o : outcomes) {
        if (!o.used) {
          ++e.excluded;
          continue;
        }
        ++e.used;
        e.rejections += o.reject[s * levels + a];
      }
      set_standard_error(e);
      out.push_back(e);
    }
  }
  return out;
}

PowerEstimate power_study(const Alternative& alt, std::size_t n, std::size_t replications,
                          std::size_t bootstrap, double alpha, std::uint64_t seed) {
  PowerStudyConfig cfg;
  cfg.alternative = alt;
  cfg.n = n;
  cfg.replications = replications;
  cfg.bootstrap = bootstrap;
  cfg.alphas = {alpha};
  cfg.seed = seed;
  return power_study(cfg).front();
}

double censoring_probability(const Alternative& lifetime, double b) {
  lifetime.validate();
  if (!(b > 0.0)) throw DomainError("censoring scale must be positive");
  // P(T > C) = ∫ S_T(c) f_C(c) dc = ∫_0^∞ S_T(b u) e^{-u} du.
  auto integrand = [&](double u) { return alternative_sf(lifetime, b * u) * std::exp(-u); };
  const double inf = std::numeric_limits<double>::infinity();
  if (lifetime.family == Family::Pareto) {
    const double kink = lifetime.second / b;  // S_T = 1 below the support edge
    return -std::expm1(-kink) + integrate(integrand, kink, inf, 1e-12, 1e-8);
  }
  return integrate(integrand, 0.0, inf, 1e-12, 1e-8);
}

double calibrate_censoring_rate(const Alternative& lifetime, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("target censoring probability must lie in (0, 1)");
  // P(T > C) decreases from 1 to 0 as b grows; bracket on the log scale.
  double lo = 1.0, hi = 1.0;
  for (int i = 0; censoring_probability(lifetime, lo) < q; ++i) {
    if (i > 200) throw NumericalError("censoring calibration: lower bracket not found");
    lo *= 0.5;
  }
  for (int i = 0; censoring_probability(lifetime, hi) > q; ++i) {
    if (i > 200) throw NumericalError("censoring calibration: upper bracket not found");
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi / lo - 1.0 > 1e-12; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (censoring_probability(lifetime, mid) > q) lo = mid; else hi = mid;
  }
  const double b = std::sqrt(lo * hi);
  if (std::fabs(censoring_probability(lifetime, b) - q) > 1e-4) {
    throw NumericalError("censoring calibration did not reach the target");
  }
  return b;
}

CensoredSample censored_draw(const Alternative& lifetime, double b, std::size_t n, Rng& rng) {
  const auto x = sample(lifetime, n, rng);
  std::vector<double> times(n);
  std::vector<std::uint8_t> events(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = -b * std::log(rng.uniform());
    times[i] = std::min(x[i], c);
    events[i] = x[i] <= c ? 1 : 0;
  }
  return CensoredSample(std::move(times), std::move(events));
}

std::vector<PowerEstimate> power_study_censored(const CensoredPowerConfig& cfg) {
  cfg.alternative.validate();
  if (cfg.replications < 1) throw DomainError("power study needs at least one replication");
  if (cfg.alphas.empty()) throw DomainError("no level requested");
  const double b = calibrate_censoring_rate(cfg.alternative, cfg.censoring);
  const std::size_t levels = cfg.alphas.size();
  std::vector<double> z(cfg.replications, -1.0);  // -1 marks an excluded replication
  const unsigned threads = cfg.threads == 0 ? default_thread_count() : cfg.threads;

  parallel_for(cfg.replications, threads, [&](std::size_t r) {
    Rng rng = Rng::stream(cfg.seed ^ kCensoringStream, r);
    const auto cs = censored_draw(cfg.alternative, b, cfg.n, rng);
    if (cs.event_count() < 3) return;
    try {
      z[r] = censored_test(cs, cfg.alphas.front(), cfg.variance).z;
    } catch (const Error&) {
      z[r] = -1.0;
    }
  });

  std::vector<PowerEstimate> out;
  for (std::size_t a = 0; a < levels; ++a) {
    PowerEstimate e;
    e.alternative = cfg.alternative;
    e.statistic = StatisticKind::Delta;
    e.n = cfg.n;
    e.replications = cfg.replications;
    e.alpha = cfg.alphas[a];
    e.censoring = cfg.censoring;
    const double crit = normal_upper_quantile(cfg.alphas[a] / 2.0);
    for (double v : z) {
      if (v < 0.0) {
        ++e.excluded;
        continue;
      }
      ++e.used;
      e.rejections += v > crit ? 1 : 0;
    }
    set_standard_error(e);
    out.push_back(e);
  }
  return out;
}

}  // namespace gammagof

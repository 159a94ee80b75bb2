// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"

#include "core/distributions.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/special.hpp"

using namespace gammagof;

namespace {

double pdf_integral(double lo, double hi, const GammaParams& p) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([&](double x) { return x > 0.0 ? gamma_pdf(x, p) : 0.0; }, lo, hi);
}

double ks_distance(std::vector<double> x, const Alternative& spec) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = alternative_cdf(spec, x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

}  // namespace

TEST_CASE("gamma_pdf closed forms") {
  CHECK(gamma_pdf(1.0, {1.0, 1.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(gamma_pdf(0.5, {2.0, 1.0}) == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_pdf(0.0, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(gamma_pdf(-1.0, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(gamma_pdf(1.0, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(gamma_pdf(1.0, {1.0, -2.0}), DomainError);
}

TEST_CASE("gamma_pdf matches central difference of gamma_cdf") {
  const GammaParams p{3.7, 0.9};
  const double h = 1e-5;
  const double fd = (gamma_cdf(2.3 + h, p) - gamma_cdf(2.3 - h, p)) / (2 * h);
  CHECK(std::fabs(gamma_pdf(2.3, p) - fd) < 1e-6);
}

TEST_CASE("gamma_cdf boundaries and exponential case") {
  CHECK(gamma_cdf(2.5, {1.0, 2.5}) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(gamma_cdf(0.0, {3.0, 1.0}) == 0.0);
  CHECK(gamma_cdf(1e-300, {2.0, 1.0}) < 1e-299);
  CHECK(gamma_cdf(1e4, {2.0, 1.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(gamma_cdf(1.0, {-1.0, 1.0}), DomainError);
  CHECK(gamma_cdf(-0.5, {1.0, 1.0}) == 0.0);
}

TEST_CASE("gamma_cdf agrees with quadrature of gamma_pdf") {
  CHECK(std::fabs(gamma_cdf(4.0, {3.2, 1.5}) - pdf_integral(0.0, 4.0, {3.2, 1.5})) < 1e-8);
  for (double k : {0.1, 0.7, 2.0, 9.5, 40.0, 100.0}) {
    for (double q : {0.2, 1.0, 3.0}) {
      const GammaParams p{k, 1.3};
      const double x = q * p.mean();
      CHECK(std::fabs(gamma_cdf(x, p) - pdf_integral(0.0, x, p)) < 1e-10);
    }
  }
}

TEST_CASE("gamma_cdf is monotone and inverts by bisection") {
  const GammaParams p{2.4, 0.8};
  double prev = 0.0;
  for (double x = 0.01; x < 20.0; x += 0.01) {
    const double f = gamma_cdf(x, p);
    CHECK(f >= prev);
    prev = f;
  }
  for (int i = 1; i <= 99; ++i) {
    const double prob = i / 100.0;
    double lo = 0.0, hi = 100.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gamma_cdf(mid, p) < prob ? lo : hi) = mid;
    }
    CHECK(std::fabs(gamma_cdf(0.5 * (lo + hi), p) - prob) < 1e-8);
  }
}

TEST_CASE("gamma_pdf integrates to one") {
  for (double k : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const GammaParams p{k, 1.7};
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(std::fabs(pdf_integral(0.0, inf, p) - 1.0) < 1e-8);
  }
}

TEST_CASE("P + Q = 1") {
  for (double a : {0.3, 1.0, 4.0, 25.0}) {
    for (double x : {0.01, 0.5, 3.0, 30.0}) {
      CHECK(regularized_gamma_p(a, x) + regularized_gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("normal helpers") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_upper_quantile(0.025) == doctest::Approx(1.959963985).epsilon(1e-9));
  CHECK(normal_upper_quantile(0.005) == doctest::Approx(2.575829304).epsilon(1e-9));
}

TEST_CASE("alternative_cdf plug-ins") {
  CHECK(alternative_cdf(Alternative::weibull(2.0, 1.0), 1.0) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(alternative_cdf(Alternative::lognormal(0.0, 1.0), 1.0) == doctest::Approx(0.5));
  CHECK(alternative_cdf(Alternative::pareto(2.0, 1.0), 1.0) == 0.0);
  CHECK(alternative_cdf(Alternative::pareto(2.0, 1.0), 0.5) == 0.0);
  CHECK(alternative_cdf(Alternative::pareto(2.0, 1.0), 2.0) == doctest::Approx(0.75));
  CHECK(alternative_cdf(Alternative::exponential(2.0), 2.0) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(alternative_cdf(Alternative::weibull(2.0, 1.0), -1.0) == 0.0);
  CHECK_THROWS_AS(Alternative::lognormal(0.0, 0.0).validate(), DomainError);
  CHECK_THROWS_AS(Alternative::pareto(-1.0, 1.0).validate(), DomainError);
}

TEST_CASE("sampling moments and tails") {
  const std::size_t n = 100000;
  Rng rng(11);
  const auto e = sample(Alternative::gamma(1.0, 1.0), n, rng);
  double mean = 0.0;
  for (double v : e) mean += v;
  mean /= n;
  CHECK(std::fabs(mean - 1.0) < 3.0 / std::sqrt(double(n)));

  auto ln = sample(Alternative::lognormal(2.0, 1.0), n, rng);
  std::nth_element(ln.begin(), ln.begin() + n / 2, ln.end());
  // SE of the median: 1 / (2 f(m) √n), f(m) = 1/(m σ √(2π)).
  const double m = std::exp(2.0);
  const double se = m * std::sqrt(2.0 * M_PI) / (2.0 * std::sqrt(double(n)));
  CHECK(std::fabs(ln[n / 2] - m) < 3.0 * se);

  const auto pa = sample(Alternative::pareto(2.0, 1.0), n, rng);
  CHECK(*std::min_element(pa.begin(), pa.end()) > 1.0);
  const double above = std::count_if(pa.begin(), pa.end(), [](double v) { return v > 2.0; }) / double(n);
  CHECK(std::fabs(above - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / n));
}

TEST_CASE("empirical CDF of draws matches every family") {
  Rng rng(5);
  for (const auto& spec : {Alternative::gamma(0.3, 2.0), Alternative::gamma(4.5, 0.5),
                           Alternative::exponential(3.0), Alternative::weibull(2.0, 1.0),
                           Alternative::lognormal(2.0, 1.0), Alternative::pareto(2.0, 1.0)}) {
    CAPTURE(spec.label());
    CHECK(ks_distance(sample(spec, 100000, rng), spec) < 0.01);
  }
}

TEST_CASE("seeded draws are reproducible and scale-factored") {
  Rng a(99), b(99), c(99);
  const auto x = sample(Alternative::gamma(2.5, 1.0), 50, a);
  const auto y = sample(Alternative::gamma(2.5, 1.0), 50, b);
  const auto z = sample(Alternative::gamma(2.5, 3.75), 50, c);
  CHECK(x == y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(z[i] == doctest::Approx(3.75 * x[i]).epsilon(1e-15));
  for (double v : sample(Alternative::gamma(0.05, 1.0), 2000, a)) CHECK(v > 0.0);
}

TEST_CASE("rng streams") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  Rng r(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    CHECK((u > 0.0 && u < 1.0));
    CHECK(r.below(7) < 7u);
  }
  Rng s1 = Rng::stream(7, 4), s2 = Rng::stream(7, 4);
  CHECK(s1.normal() == s2.normal());
}

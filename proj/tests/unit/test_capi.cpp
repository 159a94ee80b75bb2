// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

#include "gammagof/gammagof.h"

#ifndef GAMMAGOF_DATA_DIR
#error "GAMMAGOF_DATA_DIR must be defined"
#endif

TEST_CASE("sample handles and errors") {
  const double x[] = {1.0, 2.0, 3.0, 5.0, 8.0};
  gg_sample* s = nullptr;
  REQUIRE(gg_sample_create(x, 5, &s) == GG_OK);
  CHECK(gg_sample_size(s) == 5);

  gg_params p{};
  CHECK(gg_fit(s, GG_ESTIMATOR_MOMENT, &p) == GG_OK);
  CHECK(p.shape * p.scale == doctest::Approx(3.8));

  gg_delta_result d{};
  CHECK(gg_delta(s, GG_ESTIMATOR_MOMENT, &d) == GG_OK);
  double v = 0.0;
  CHECK(gg_statistic_value(s, GG_STATISTIC_DELTA, nullptr, GG_ESTIMATOR_MOMENT, 1.0, &v) == GG_OK);
  CHECK(v == d.value);
  CHECK(gg_statistic_value(s, GG_STATISTIC_CVM, &p, GG_ESTIMATOR_MOMENT, 1.0, &v) == GG_OK);
  CHECK(v > 0.0);

  const double bad[] = {1.0, -1.0};
  gg_sample* t = reinterpret_cast<gg_sample*>(0x1);
  CHECK(gg_sample_create(bad, 2, &t) == GG_ERR_INVALID_ARGUMENT);
  CHECK(t == nullptr);
  CHECK(std::string(gg_last_error()).find("positive") != std::string::npos);
  CHECK(gg_sample_create(nullptr, 3, &t) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_fit(nullptr, GG_ESTIMATOR_MOMENT, &p) == GG_ERR_INVALID_ARGUMENT);

  const double flat[] = {2.0, 2.0, 2.0};
  REQUIRE(gg_sample_create(flat, 3, &t) == GG_OK);
  CHECK(gg_fit(t, GG_ESTIMATOR_MOMENT, &p) == GG_ERR_DEGENERATE);
  gg_sample_free(t);
  gg_sample_free(s);
  gg_sample_free(nullptr);
}

TEST_CASE("densities") {
  double v = 0.0;
  CHECK(gg_gamma_pdf(1.0, {1.0, 1.0}, &v) == GG_OK);
  CHECK(v == doctest::Approx(std::exp(-1.0)));
  CHECK(gg_gamma_cdf(1.0, {1.0, 1.0}, &v) == GG_OK);
  CHECK(v == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(gg_gamma_pdf(-1.0, {1.0, 1.0}, &v) == GG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gg_status_string(GG_ERR_WEIGHT)) == "censoring weight singularity");
}

TEST_CASE("tests and reports through the C interface") {
  gg_censored* data = nullptr;
  int has_status = -1;
  REQUIRE(gg_dataset_load(GAMMAGOF_DATA_DIR "/ball_bearings.csv", &data, &has_status) == GG_OK);
  CHECK(has_status == 0);
  const std::size_t n = gg_censored_size(data);
  CHECK(n == 23);
  std::vector<double> t(n);
  std::vector<uint8_t> e(n);
  CHECK(gg_censored_copy(data, t.data(), e.data()) == GG_OK);
  gg_sample* s = nullptr;
  REQUIRE(gg_sample_create(t.data(), n, &s) == GG_OK);

  gg_test_options o;
  gg_test_options_default(&o);
  CHECK(o.bootstrap == 10000);
  o.bootstrap = 500;
  o.estimator = GG_ESTIMATOR_MLE;
  gg_report* r = nullptr;
  REQUIRE(gg_test_complete(s, &o, &r) == GG_OK);
  CHECK(gg_report_statistic(r) == doctest::Approx(-0.0376).epsilon(0.01));
  CHECK(gg_report_set_source(r, "bearings") == GG_OK);

  char* json = nullptr;
  REQUIRE(gg_report_json(r, &json) == GG_OK);
  gg_report* back = nullptr;
  REQUIRE(gg_report_from_json(json, &back) == GG_OK);
  char* json2 = nullptr;
  REQUIRE(gg_report_json(back, &json2) == GG_OK);
  CHECK(std::strcmp(json, json2) == 0);
  CHECK(gg_report_reject(back) == gg_report_reject(r));
  char* text = nullptr;
  REQUIRE(gg_report_summary(r, &text) == GG_OK);
  CHECK(std::string(text).find("n = 23") != std::string::npos);
  gg_string_free(text);
  gg_string_free(json);
  gg_string_free(json2);
  gg_report_free(back);
  gg_report_free(r);
  CHECK(gg_report_from_json("{not json", &back) == GG_ERR_INVALID_ARGUMENT);

  gg_censored* heart = nullptr;
  REQUIRE(gg_dataset_load(GAMMAGOF_DATA_DIR "/heart_transplant.csv", &heart, &has_status) == GG_OK);
  CHECK(has_status == 1);
  CHECK(gg_censored_size(heart) == 184);
  gg_censored_result c{};
  CHECK(gg_delta_censored(heart, &c) == GG_OK);
  double var = 0.0;
  CHECK(gg_variance_censored(heart, GG_VARIANCE_REWEIGHTED, &var) == GG_OK);
  CHECK(var > 0.0);
  REQUIRE(gg_test_censored(heart, &o, &r) == GG_OK);
  CHECK(gg_report_statistic(r) == c.value);
  gg_report_free(r);

  CHECK(gg_dataset_load("/nonexistent.csv", &heart, &has_status) == GG_ERR_IO);
  gg_censored_free(data);
  gg_sample_free(s);
}

TEST_CASE("censored handles") {
  const double t[] = {1.0, 2.0, 3.0};
  const uint8_t e[] = {1, 0, 1};
  gg_censored* c = nullptr;
  REQUIRE(gg_censored_create(t, e, 3, &c) == GG_OK);
  CHECK(gg_censored_events(c) == 2);
  gg_censored_free(c);
  const uint8_t bad[] = {1, 3, 1};
  CHECK(gg_censored_create(t, bad, 3, &c) == GG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("simulation through the C interface") {
  gg_sim_overrides o{};
  o.reps = 5;
  o.bootstrap = 100;
  char* csv = nullptr;
  CHECK(gg_simulate_table(9, &o, &csv) == GG_ERR_INVALID_ARGUMENT);
  const char* scenario =
      R"({"alternative": {"family": "gamma", "first": 1, "second": 1}, "n": 25, "reps": 50})";
  REQUIRE(gg_simulate_custom(scenario, &o, &csv) == GG_OK);
  CHECK(std::string(csv).find("\n25,") != std::string::npos);
  CHECK(std::string(csv).find(",5,") != std::string::npos);
  gg_string_free(csv);
  CHECK(gg_simulate_custom("[]", &o, &csv) == GG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gg_version()) == "0.1.0");
}

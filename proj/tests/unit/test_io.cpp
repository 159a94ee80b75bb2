// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <sstream>
#include <string>

#include "doctest.h"

#include "core/dataset.hpp"
#include "core/errors.hpp"
#include "core/report.hpp"
#include "core/simulation.hpp"

using namespace gammagof;

namespace {

Dataset parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

std::size_t error_row(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.row();
  }
  return 0;
}

}  // namespace

TEST_CASE("dataset parsing") {
  const auto c = parse("time\n1.5\n2\n\n3.25\n");
  CHECK_FALSE(c.has_status);
  CHECK_FALSE(c.censored());
  CHECK(c.data.size() == 3);
  CHECK(c.complete().values()[2] == 3.25);

  const auto d = parse("id,time,status\r\n1,4.0,1\r\n2,5.5,0\r\n3,6,1\r\n");
  CHECK(d.has_status);
  CHECK(d.censored());
  CHECK(d.data.event_count() == 2);

  const auto all_events = parse("\"time\",\"status\"\n1,1\n2,1\n");
  CHECK_FALSE(all_events.censored());
}

TEST_CASE("dataset errors name the row") {
  CHECK(error_row("time\n1\n-2\n") == 3);
  CHECK(error_row("time\n1\n0\n") == 3);
  CHECK(error_row("time\n1\nabc\n") == 3);
  CHECK(error_row("time,status\n1,1\n2,2\n") == 3);
  CHECK(error_row("time,status\n1,1\n2\n") == 3);
  CHECK(error_row("value\n1\n") == 1);
  CHECK(error_row("time,status\n1,0\n2,0\n") == 3);
  CHECK(error_row("") == 0);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_WITH_AS(parse("time\n1\n-2\n"), doctest::Contains("row 3"), ParseError);
  CHECK_THROWS_AS(load_dataset("/nonexistent/file.csv"), IoError);
}

TEST_CASE("reports round-trip and stay consistent") {
  Rng rng(1);
  const auto x = sample_gamma({2.0, 1.0}, 30, rng);
  const auto t = gof_test_complete(x, 0.05, 500, 3);
  auto f = make_report(t, "sample.csv");
  f.elapsed_seconds = 0.125;
  CHECK(decision_consistent(f));
  const auto back = report_from_json(nlohmann::ordered_json::parse(report_json(f)));
  CHECK(back == f);
  CHECK(report_json(back) == report_json(f));
  CHECK(report_summary(f).find("decision") != std::string::npos);

  const CensoredSample cs({0.5, 1.2, 1.9, 2.4, 3.3, 4.1, 5.0, 6.2}, {1, 1, 0, 1, 1, 0, 1, 1});
  const auto g = make_report(censored_test(cs, 0.05), "c.csv");
  CHECK(decision_consistent(g));
  CHECK(report_from_json(to_json(g)) == g);

  auto bad = f;
  bad.reject = !bad.reject;
  CHECK_FALSE(decision_consistent(bad));
  CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json::parse("{\"method\":\"x\"}")), DomainError);
  CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json::parse("{}")), DomainError);
}

TEST_CASE("table scenarios") {
  for (int t = 1; t <= 4; ++t) {
    const auto s = table_scenario(t);
    CHECK(s.sizes.size() == 5);
    CHECK(s.statistics.size() == 5);
    CHECK(s.censoring == 0.0);
  }
  const auto s5 = table_scenario(5);
  CHECK(s5.censoring == 0.2);
  CHECK(s5.alternatives.size() == 4);
  CHECK(table_scenario(6).censoring == 0.4);
  CHECK_THROWS_AS(table_scenario(7), DomainError);
}

TEST_CASE("custom scenario parsing and a tiny run") {
  const auto j = nlohmann::json::parse(R"({
    "title": "smoke",
    "alternative": {"family": "weibull", "first": 2, "second": 1},
    "n": [20, 30], "alpha": 0.05, "statistics": ["delta", "ks"],
    "reps": 10, "bootstrap": 100, "seed": 4})");
  const auto s = scenario_from_json(j);
  CHECK(s.replications == 10);
  const auto table = run_scenario(s);
  const auto csv = table_csv(table);
  CHECK(csv.rfind("n,delta_a0.05,delta_a0.05_se,ks_a0.05,ks_a0.05_se,reps,excluded\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv == table_csv(run_scenario(s)));

  const auto c = scenario_from_json(nlohmann::json::parse(R"({
    "alternatives": [{"family": "gamma", "first": 1, "second": 1},
                     {"family": "pareto", "first": 2, "second": 1}],
    "n": 40, "censoring": 0.2, "reps": 10})"));
  const auto ctable = table_csv(run_scenario(c));
  CHECK(ctable.find("pareto_2_1_a0.01") != std::string::npos);

  CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"n": 10})")), DomainError);
  CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(
                      R"({"alternative": {"family": "cauchy", "first": 1}, "n": 10})")),
                  DomainError);
  CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(
                      R"({"alternative": {"family": "gamma", "first": 1, "second": 1}, "n": 10, "alpha": 2})")),
                  DomainError);
}

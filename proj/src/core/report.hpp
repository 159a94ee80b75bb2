// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "core/distributions.hpp"
#include "core/gof_censored.hpp"
#include "core/resampling.hpp"

namespace gammagof {

// Machine-readable outcome of one test run.
struct ReportFile {
  std::string method;  // "complete" or "censored"
  std::string source;  // input path, may be empty
  std::size_t n = 0;
  std::size_t events = 0;
  double statistic = 0.0;
  std::map<std::string, double> components;  // u1, u2 or d1, d2, d3
  std::string estimator;
  GammaParams estimates;
  double alpha = 0.05;

  // Complete data: bootstrap interval.
  std::optional<double> lower;
  std::optional<double> upper;
  std::string scheme;

  // Censored data: normal approximation.
  std::optional<double> variance;
  std::optional<double> z;
  std::optional<double> p_value;
  std::optional<double> z_critical;
  std::string variance_method;

  bool reject = false;
  std::uint64_t seed = 0;
  std::size_t bootstrap = 0;
  double elapsed_seconds = 0.0;

  bool operator==(const ReportFile&) const = default;
};

ReportFile make_report(const TestReport& r, const std::string& source = {});
ReportFile make_report(const CensoredTestReport& r, const std::string& source = {});

nlohmann::ordered_json to_json(const ReportFile& r);
ReportFile report_from_json(const nlohmann::ordered_json& j);

// Pretty-printed JSON, 2-space indent.
std::string report_json(const ReportFile& r);
// A few lines for a terminal.
std::string report_summary(const ReportFile& r);

// Recomputes the decision from the recorded statistic and thresholds.
bool decision_consistent(const ReportFile& r);

}  // namespace gammagof

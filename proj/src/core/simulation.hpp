// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "core/resampling.hpp"

namespace gammagof {

// A grid of size/power runs. Complete-data scenarios cross every statistic
// with every alternative; censored scenarios use Δ̂_c only.
struct Scenario {
  std::string title;
  std::vector<Alternative> alternatives;
  std::vector<std::size_t> sizes;
  std::vector<double> alphas{0.01, 0.05};
  std::vector<StatisticKind> statistics{StatisticKind::Delta};
  double censoring = 0.0;  // 0: complete data
  std::size_t replications = 1000;
  std::size_t bootstrap = 500;
  std::uint64_t seed = 1;
  BootstrapOptions options{Estimator::MaximumLikelihood};
  VarianceMethod variance = VarianceMethod::Reweighted;
  unsigned threads = 0;
};

// Columns group estimates that share an alternative and statistic.
struct SimulationTable {
  std::string title;
  std::vector<std::string> groups;
  std::vector<double> alphas;
  std::vector<std::size_t> sizes;
  // cells[row][group * alphas + a]
  std::vector<std::vector<PowerEstimate>> cells;
};

// Tables 1..6 at the given scale.
Scenario table_scenario(int table);

// Complete-data scenarios fit by maximum likelihood unless `estimator` says
// otherwise. Keys: title, alternatives [{family, first, second}], n, alpha, statistics,
// censoring, reps, bootstrap, seed, estimator, scheme, variance, decay,
// threads. All but alternatives and n are optional.
Scenario scenario_from_json(const nlohmann::json& j);

SimulationTable run_scenario(const Scenario& s);

// One row per sample size; each (group, α) contributes a rate and an SE
// column, followed by the excluded-replication count.
std::string table_csv(const SimulationTable& t);

}  // namespace gammagof

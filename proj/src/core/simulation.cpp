// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "core/errors.hpp"

namespace gammagof {
namespace {

std::string fmt_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string alternative_key(const Alternative& a) {
  std::string key = family_name(a.family);
  key += "_" + fmt_number(a.first);
  if (a.family != Family::Exponential) key += "_" + fmt_number(a.second);
  return key;
}

const std::vector<Alternative> kCensoredAlternatives = {
    Alternative::gamma(1.0, 1.0), Alternative::lognormal(2.0, 1.0), Alternative::weibull(2.0, 1.0),
    Alternative::pareto(2.0, 1.0)};

const std::vector<StatisticKind> kAllStatistics = {StatisticKind::Delta, StatisticKind::Hme,
                                                   StatisticKind::Be, StatisticKind::Ks,
                                                   StatisticKind::Cvm};

Alternative alternative_from_json(const nlohmann::json& j) {
  Alternative a;
  a.family = parse_family(j.at("family").get<std::string>());
  a.first = j.at("first").get<double>();
  a.second = j.value("second", 0.0);
  a.validate();
  return a;
}

}  // namespace

Scenario table_scenario(int table) {
  Scenario s;
  switch (table) {
    case 1:
      s.title = "Empirical type I error";
      s.alternatives = {Alternative::gamma(1.0, 1.0)};
      break;
    case 2:
      s.title = "Empirical power: lognormal(2,1)";
      s.alternatives = {Alternative::lognormal(2.0, 1.0)};
      break;
    case 3:
      s.title = "Empirical power: pareto(2,1)";
      s.alternatives = {Alternative::pareto(2.0, 1.0)};
      break;
    case 4:
      s.title = "Empirical power: weibull(2,1)";
      s.alternatives = {Alternative::weibull(2.0, 1.0)};
      break;
    case 5:
    case 6:
      s.censoring = table == 5 ? 0.2 : 0.4;
      s.title = std::string("Empirical type I error and power, ") + (table == 5 ? "20" : "40") +
                "% censoring";
      s.alternatives = kCensoredAlternatives;
      s.sizes = {50, 75, 100, 200};
      s.bootstrap = 0;
      return s;
    default:
      throw DomainError("table must be between 1 and 6");
  }
  s.sizes = {25, 50, 75, 100, 200};
  s.statistics = kAllStatistics;
  return s;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  try {
    Scenario s;
    s.title = j.value("title", std::string("custom scenario"));
    if (j.contains("alternatives")) {
      for (const auto& a : j.at("alternatives")) s.alternatives.push_back(alternative_from_json(a));
    } else {
      s.alternatives.push_back(alternative_from_json(j.at("alternative")));
    }
    const auto& n = j.at("n");
    if (n.is_array()) {
      for (const auto& v : n) s.sizes.push_back(v.get<std::size_t>());
    } else {
      s.sizes.push_back(n.get<std::size_t>());
    }
    if (j.contains("alpha")) {
      s.alphas.clear();
      const auto& a = j.at("alpha");
      if (a.is_array()) {
        for (const auto& v : a) s.alphas.push_back(v.get<double>());
      } else {
        s.alphas.push_back(a.get<double>());
      }
    }
    if (j.contains("statistics")) {
      s.statistics.clear();
      for (const auto& v : j.at("statistics")) s.statistics.push_back(parse_statistic(v.get<std::string>()));
    }
    s.censoring = j.value("censoring", 0.0);
    s.replications = j.value("reps", s.replications);
    s.bootstrap = j.value("bootstrap", s.bootstrap);
    s.seed = j.value("seed", s.seed);
    s.threads = j.value("threads", 0u);
    if (j.contains("estimator")) s.options.estimator = parse_estimator(j.at("estimator").get<std::string>());
    if (j.contains("scheme")) s.options.scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (j.contains("variance")) s.variance = parse_variance_method(j.at("variance").get<std::string>());
    s.options.decay = j.value("decay", 1.0);

    if (s.alternatives.empty() || s.sizes.empty() || s.alphas.empty() || s.statistics.empty()) {
      throw DomainError("scenario needs at least one alternative, size, level and statistic");
    }
    for (double a : s.alphas) {
      if (!(a > 0.0 && a < 1.0)) throw DomainError("scenario alpha must lie in (0, 1)");
    }
    for (auto n_i : s.sizes) {
      if (n_i < 3) throw DomainError("scenario sample sizes must be at least 3");
    }
    if (!(s.censoring >= 0.0 && s.censoring < 1.0)) throw DomainError("censoring must lie in [0, 1)");
    if (s.replications < 1) throw DomainError("reps must be positive");
    if (s.censoring == 0.0 && s.bootstrap < 100) throw DomainError("bootstrap must be at least 100");
    if (!(s.options.decay > 0.0)) throw DomainError("decay must be positive");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid scenario: ") + e.what());
  }
}

SimulationTable run_scenario(const Scenario& s) {
  SimulationTable t;
  t.title = s.title;
  t.alphas = s.alphas;
  t.sizes = s.sizes;
  const bool censored = s.censoring > 0.0;
  for (const auto& alt : s.alternatives) {
    if (censored) {
      t.groups.push_back(alternative_key(alt));
      continue;
    }
    for (auto kind : s.statistics) {
      std::string g = statistic_name(kind);
      if (s.alternatives.size() > 1) g = alternative_key(alt) + "_" + g;
      t.groups.push_back(g);
    }
  }

  for (std::size_t row = 0; row < s.sizes.size(); ++row) {
    std::vector<PowerEstimate> cells;
    for (std::size_t a = 0; a < s.alternatives.size(); ++a) {
      // One stream per (alternative, n) cell.
      const std::uint64_t cell_seed = derive_seed(s.seed, (a << 16) | s.sizes[row]);
      std::vector<PowerEstimate> est;
      if (censored) {
        CensoredPowerConfig cfg;
        cfg.alternative = s.alternatives[a];
        cfg.n = s.sizes[row];
        cfg.replications = s.replications;
        cfg.alphas = s.alphas;
        cfg.censoring = s.censoring;
        cfg.seed = cell_seed;
        cfg.variance = s.variance;
        cfg.threads = s.threads;
        est = power_study_censored(cfg);
      } else {
        PowerStudyConfig cfg;
        cfg.alternative = s.alternatives[a];
        cfg.n = s.sizes[row];
        cfg.replications = s.replications;
        cfg.bootstrap = s.bootstrap;
        cfg.alphas = s.alphas;
        cfg.statistics = s.statistics;
        cfg.seed = cell_seed;
        cfg.options = s.options;
        cfg.threads = s.threads;
        est = power_study(cfg);
      }
      cells.insert(cells.end(), est.begin(), est.end());
    }
    t.cells.push_back(std::move(cells));
  }
  return t;
}

std::string table_csv(const SimulationTable& t) {
  std::ostringstream out;
  out << "n";
  for (const auto& g : t.groups) {
    for (double a : t.alphas) {
      const auto col = g + "_a" + fmt_number(a);
      out << ',' << col << ',' << col << "_se";
    }
  }
  out << ",reps,excluded\n";
  for (std::size_t row = 0; row < t.sizes.size(); ++row) {
    out << t.sizes[row];
    std::size_t reps = 0, excluded = 0;
    for (const auto& e : t.cells[row]) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ",%.4f,%.4f", e.rate, e.se);
      out << buf;
      reps = e.replications;
      excluded = std::max(excluded, e.excluded);
    }
    out << ',' << reps << ',' << excluded << '\n';
  }
  return out.str();
}

}  // namespace gammagof

// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/errors.hpp"

namespace gammagof {

using nlohmann::ordered_json;

ReportFile make_report(const TestReport& r, const std::string& source) {
  ReportFile f;
  f.method = "complete";
  f.source = source;
  f.n = r.n;
  f.events = r.n;
  f.statistic = r.statistic.value;
  f.components = {{"u1", r.statistic.u1}, {"u2", r.statistic.u2}};
  f.estimator = estimator_name(r.estimator);
  f.estimates = r.statistic.params;
  f.alpha = r.critical.alpha;
  f.lower = r.critical.lower;
  f.upper = r.critical.upper;
  f.scheme = scheme_name(r.scheme);
  f.reject = r.reject;
  f.seed = r.critical.seed;
  f.bootstrap = r.critical.bootstrap;
  return f;
}

ReportFile make_report(const CensoredTestReport& r, const std::string& source) {
  ReportFile f;
  f.method = "censored";
  f.source = source;
  f.n = r.n;
  f.events = r.events;
  f.statistic = r.statistic.value;
  f.components = {{"d1", r.statistic.d1}, {"d2", r.statistic.d2}, {"d3", r.statistic.d3}};
  f.estimator = "ipcw-moment";
  f.estimates = r.statistic.params;
  f.alpha = r.alpha;
  f.variance = r.variance;
  f.z = r.z;
  f.p_value = r.p_value;
  f.z_critical = r.critical;
  f.variance_method = variance_method_name(r.method);
  f.reject = r.reject;
  return f;
}

nlohmann::ordered_json to_json(const ReportFile& r) {
  ordered_json j;
  j["method"] = r.method;
  j["source"] = r.source;
  j["n"] = r.n;
  j["events"] = r.events;
  j["statistic"] = r.statistic;
  ordered_json comp = ordered_json::object();
  for (const auto& [k, v] : r.components) comp[k] = v;
  j["components"] = comp;
  j["estimates"] = {{"estimator", r.estimator},
                    {"shape", r.estimates.shape},
                    {"scale", r.estimates.scale}};
  j["alpha"] = r.alpha;
  if (r.method == "complete") {
    j["critical"] = {{"lower", r.lower.value_or(0.0)},
                     {"upper", r.upper.value_or(0.0)},
                     {"scheme", r.scheme}};
  } else {
    j["normal"] = {{"variance", r.variance.value_or(0.0)},
                   {"z", r.z.value_or(0.0)},
                   {"p_value", r.p_value.value_or(1.0)},
                   {"z_critical", r.z_critical.value_or(0.0)},
                   {"variance_method", r.variance_method}};
  }
  j["decision"] = r.reject ? "reject" : "accept";
  j["seed"] = r.seed;
  j["bootstrap"] = r.bootstrap;
  j["timing"] = {{"elapsed_seconds", r.elapsed_seconds}};
  return j;
}

ReportFile report_from_json(const nlohmann::ordered_json& j) {
  try {
    ReportFile r;
    r.method = j.at("method").get<std::string>();
    if (r.method != "complete" && r.method != "censored") {
      throw DomainError("report method must be complete or censored");
    }
    r.source = j.value("source", std::string());
    r.n = j.at("n").get<std::size_t>();
    r.events = j.at("events").get<std::size_t>();
    r.statistic = j.at("statistic").get<double>();
    for (const auto& [k, v] : j.at("components").items()) r.components[k] = v.get<double>();
    const auto& est = j.at("estimates");
    r.estimator = est.at("estimator").get<std::string>();
    r.estimates.shape = est.at("shape").get<double>();
    r.estimates.scale = est.at("scale").get<double>();
    r.alpha = j.at("alpha").get<double>();
    if (r.method == "complete") {
      const auto& c = j.at("critical");
      r.lower = c.at("lower").get<double>();
      r.upper = c.at("upper").get<double>();
      r.scheme = c.at("scheme").get<std::string>();
    } else {
      const auto& c = j.at("normal");
      r.variance = c.at("variance").get<double>();
      r.z = c.at("z").get<double>();
      r.p_value = c.at("p_value").get<double>();
      r.z_critical = c.at("z_critical").get<double>();
      r.variance_method = c.at("variance_method").get<std::string>();
    }
    const auto decision = j.at("decision").get<std::string>();
    if (decision != "reject" && decision != "accept") {
      throw DomainError("report decision must be accept or reject");
    }
    r.reject = decision == "reject";
    r.seed = j.at("seed").get<std::uint64_t>();
    r.bootstrap = j.at("bootstrap").get<std::size_t>();
    r.elapsed_seconds = j.at("timing").at("elapsed_seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

std::string report_json(const ReportFile& r) { return to_json(r).dump(2) + "\n"; }

std::string report_summary(const ReportFile& r) {
  char buf[256];
  std::ostringstream out;
  if (r.method == "complete") {
    std::snprintf(buf, sizeof buf, "complete-data gamma fixed-point test (n = %zu)\n", r.n);
    out << buf;
    std::snprintf(buf, sizeof buf, "  estimates (%s): shape = %.6g, scale = %.6g\n",
                  r.estimator.c_str(), r.estimates.shape, r.estimates.scale);
    out << buf;
    std::snprintf(buf, sizeof buf, "  statistic = %.6f\n", r.statistic);
    out << buf;
    std::snprintf(buf, sizeof buf, "  critical values at alpha = %g: (%.6f, %.6f), %s bootstrap B = %zu, seed = %llu\n",
                  r.alpha, r.lower.value_or(0.0), r.upper.value_or(0.0), r.scheme.c_str(),
                  r.bootstrap, static_cast<unsigned long long>(r.seed));
    out << buf;
  } else {
    std::snprintf(buf, sizeof buf, "censored-data gamma fixed-point test (n = %zu, events = %zu)\n",
                  r.n, r.events);
    out << buf;
    std::snprintf(buf, sizeof buf, "  estimates (%s): shape = %.6g, scale = %.6g\n",
                  r.estimator.c_str(), r.estimates.shape, r.estimates.scale);
    out << buf;
    std::snprintf(buf, sizeof buf, "  statistic = %.6f, variance = %.6g (%s)\n", r.statistic,
                  r.variance.value_or(0.0), r.variance_method.c_str());
    out << buf;
    std::snprintf(buf, sizeof buf, "  z = %.4f, p = %.4g, critical z at alpha = %g: %.4f\n",
                  r.z.value_or(0.0), r.p_value.value_or(1.0), r.alpha, r.z_critical.value_or(0.0));
    out << buf;
  }
  out << "  decision: " << (r.reject ? "reject" : "accept") << " H0\n";
  return out.str();
}

bool decision_consistent(const ReportFile& r) {
  if (r.method == "complete") {
    if (!r.lower || !r.upper) return false;
    return r.reject == (r.statistic < *r.lower || r.statistic > *r.upper);
  }
  if (!r.z || !r.z_critical) return false;
  return r.reject == (*r.z > *r.z_critical);
}

}  // namespace gammagof

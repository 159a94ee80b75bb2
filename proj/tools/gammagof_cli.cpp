// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

// gammagof: gamma goodness-of-fit tests on lifetime data files.
//   gammagof test FILE      run the complete or censored test
//   gammagof simulate       size/power tables
//   gammagof stat FILE      print one statistic
// Exit status: 0 accept, 1 reject, 2 error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gammagof/gammagof.h"

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

struct Failure {
  std::string message;
};

void check(gg_status s, const std::string& context) {
  if (s != GG_OK) {
    const std::string detail = gg_last_error();
    throw Failure{context + ": " + (detail.empty() ? gg_status_string(s) : detail)};
  }
}

struct Deleter {
  void operator()(gg_censored* p) const { gg_censored_free(p); }
  void operator()(gg_sample* p) const { gg_sample_free(p); }
  void operator()(gg_report* p) const { gg_report_free(p); }
  void operator()(char* p) const { gg_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

struct Loaded {
  Owned<gg_censored> data;
  bool has_status = false;
  std::vector<double> times;
  std::vector<uint8_t> events;
  std::size_t censored() const { return times.size() - gg_censored_events(data.get()); }
};

Loaded load(const std::string& path) {
  Loaded d;
  gg_censored* raw = nullptr;
  int has_status = 0;
  check(gg_dataset_load(path.c_str(), &raw, &has_status), path);
  d.data.reset(raw);
  d.has_status = has_status != 0;
  d.times.resize(gg_censored_size(raw));
  d.events.resize(d.times.size());
  check(gg_censored_copy(raw, d.times.data(), d.events.data()), path);
  return d;
}

Owned<gg_sample> complete_sample(const Loaded& d) {
  gg_sample* raw = nullptr;
  check(gg_sample_create(d.times.data(), d.times.size(), &raw), "sample");
  return Owned<gg_sample>(raw);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot write '" + path + "'"};
  out << content;
  if (!out) throw Failure{"write to '" + path + "' failed"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::map<std::string, gg_estimator> kEstimators{{"moment", GG_ESTIMATOR_MOMENT},
                                                      {"mle", GG_ESTIMATOR_MLE}};
const std::map<std::string, gg_scheme> kSchemes{{"parametric", GG_SCHEME_PARAMETRIC},
                                                {"resample", GG_SCHEME_RESAMPLE}};
const std::map<std::string, gg_variance> kVariances{{"reweighted", GG_VARIANCE_REWEIGHTED},
                                                    {"adjusted", GG_VARIANCE_ADJUSTED}};
const std::map<std::string, gg_statistic> kStatistics{
    {"delta", GG_STATISTIC_DELTA}, {"hme", GG_STATISTIC_HME}, {"be", GG_STATISTIC_BE},
    {"ks", GG_STATISTIC_KS},       {"cvm", GG_STATISTIC_CVM}};

struct TestArgs {
  std::string path;
  double alpha = 0.05;
  std::size_t bootstrap = 10000;
  uint64_t seed = 1;
  std::string method = "auto";
  gg_estimator estimator = GG_ESTIMATOR_MLE;
  gg_scheme scheme = GG_SCHEME_PARAMETRIC;
  gg_variance variance = GG_VARIANCE_REWEIGHTED;
  std::string out;
};

int run_test(const TestArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded d = load(a.path);
  bool censored = d.censored() > 0;
  if (a.method == "complete") {
    if (censored) throw Failure{a.path + ": file has censored rows; use --method censored"};
  } else if (a.method == "censored") {
    censored = true;
  }

  gg_test_options opts;
  gg_test_options_default(&opts);
  opts.alpha = a.alpha;
  opts.bootstrap = a.bootstrap;
  opts.seed = a.seed;
  opts.estimator = a.estimator;
  opts.scheme = a.scheme;
  opts.variance = a.variance;

  gg_report* raw = nullptr;
  if (censored) {
    check(gg_test_censored(d.data.get(), &opts, &raw), "censored test");
  } else {
    const auto s = complete_sample(d);
    check(gg_test_complete(s.get(), &opts, &raw), "complete test");
  }
  Owned<gg_report> report(raw);
  check(gg_report_set_source(raw, a.path.c_str()), "report");
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  check(gg_report_set_elapsed(raw, elapsed.count()), "report");

  char* text = nullptr;
  check(gg_report_summary(raw, &text), "report");
  Owned<char> summary(text);
  std::cout << summary.get();
  if (!a.out.empty()) {
    check(gg_report_json(raw, &text), "report");
    Owned<char> json(text);
    write_file(a.out, json.get());
  }
  return gg_report_reject(raw) ? kReject : kAccept;
}

struct SimulateArgs {
  int table = 0;
  std::string custom;
  std::size_t reps = 1000;
  std::size_t bootstrap = 500;
  uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;
  bool reps_set = false;
  bool bootstrap_set = false;
  bool seed_set = false;
};

int run_simulate(const SimulateArgs& a) {
  gg_sim_overrides o{};
  char* csv = nullptr;
  o.threads = a.threads;
  if (a.table != 0) {
    // Tables run at the desk-scale defaults unless overridden.
    o.reps = a.reps;
    o.bootstrap = a.bootstrap;
    o.has_seed = 1;
    o.seed = a.seed;
    check(gg_simulate_table(a.table, &o, &csv), "simulate");
  } else {
    if (a.reps_set) o.reps = a.reps;
    if (a.bootstrap_set) o.bootstrap = a.bootstrap;
    if (a.seed_set) {
      o.has_seed = 1;
      o.seed = a.seed;
    }
    const std::string scenario = read_file(a.custom);
    check(gg_simulate_custom(scenario.c_str(), &o, &csv), a.custom);
  }
  Owned<char> table(csv);
  if (a.out.empty()) {
    std::cout << table.get();
  } else {
    write_file(a.out, table.get());
  }
  return kAccept;
}

struct StatArgs {
  std::string path;
  gg_statistic statistic = GG_STATISTIC_DELTA;
  std::string params = "fit";
  gg_estimator estimator = GG_ESTIMATOR_MLE;
  double decay = 1.0;
};

int run_stat(const StatArgs& a) {
  const Loaded d = load(a.path);
  double value = 0.0;
  if (d.censored() > 0) {
    if (a.statistic != GG_STATISTIC_DELTA) {
      throw Failure{a.path + ": only the delta statistic is defined for censored data"};
    }
    if (a.params != "fit") throw Failure{"--params is not supported for censored data"};
    gg_censored_result r;
    check(gg_delta_censored(d.data.get(), &r), "statistic");
    value = r.value;
  } else {
    const auto s = complete_sample(d);
    gg_params p{};
    const gg_params* given = nullptr;
    if (a.params != "fit") {
      char extra = 0;
      if (std::sscanf(a.params.c_str(), "%lf,%lf%c", &p.shape, &p.scale, &extra) != 2) {
        throw Failure{"--params must be 'fit' or 'shape,scale'"};
      }
      given = &p;
    }
    check(gg_statistic_value(s.get(), a.statistic, given, a.estimator, a.decay, &value),
          "statistic");
  }
  std::printf("%.10g\n", value);
  return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit tests for the gamma distribution"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gg_version());

  TestArgs test;
  auto* cmd_test = app.add_subcommand("test", "Test a data file against the gamma family");
  cmd_test->add_option("file", test.path, "CSV with a time column and optional status column")
      ->required();
  cmd_test->add_option("--alpha", test.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0).description("(0, 1]"));
  cmd_test->add_option("--bootstrap", test.bootstrap, "Bootstrap replicates (complete data)")
      ->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
  cmd_test->add_option("--seed", test.seed, "Random seed");
  cmd_test->add_option("--method", test.method, "auto, complete or censored")
      ->check(CLI::IsMember({"auto", "complete", "censored"}));
  cmd_test->add_option("--estimator", test.estimator, "moment or mle (complete data)")
      ->transform(CLI::CheckedTransformer(kEstimators));
  cmd_test->add_option("--scheme", test.scheme, "parametric or resample")
      ->transform(CLI::CheckedTransformer(kSchemes));
  cmd_test->add_option("--variance", test.variance, "reweighted or adjusted (censored data)")
      ->transform(CLI::CheckedTransformer(kVariances));
  cmd_test->add_option("--out", test.out, "Write the JSON report here");

  SimulateArgs sim;
  auto* cmd_sim = app.add_subcommand("simulate", "Empirical size and power tables");
  auto* opt_table = cmd_sim->add_option("--table", sim.table, "Table 1..6")->check(CLI::Range(1, 6));
  auto* opt_custom = cmd_sim->add_option("--custom", sim.custom, "JSON scenario file");
  opt_table->excludes(opt_custom);
  auto* opt_reps = cmd_sim->add_option("--reps", sim.reps, "Monte Carlo replications")
                       ->check(CLI::PositiveNumber);
  auto* opt_boot = cmd_sim->add_option("--bootstrap", sim.bootstrap, "Bootstrap size per replication")
                       ->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
  auto* opt_seed = cmd_sim->add_option("--seed", sim.seed, "Random seed");
  cmd_sim->add_option("--threads", sim.threads, "Worker threads (default: GAMMAGOF_THREADS or all cores)");
  cmd_sim->add_option("--out", sim.out, "Write the CSV here instead of standard output");

  StatArgs stat;
  auto* cmd_stat = app.add_subcommand("stat", "Print one statistic for a data file");
  cmd_stat->add_option("file", stat.path, "CSV data file")->required();
  cmd_stat->add_option("--statistic", stat.statistic, "delta, hme, be, ks or cvm")
      ->transform(CLI::CheckedTransformer(kStatistics));
  cmd_stat->add_option("--params", stat.params, "'fit' or shape,scale");
  cmd_stat->add_option("--estimator", stat.estimator, "moment or mle, used with --params fit")
      ->transform(CLI::CheckedTransformer(kEstimators));
  cmd_stat->add_option("--decay", stat.decay, "Weight decay for hme and be")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (cmd_test->parsed()) {
      if (!(test.alpha > 0.0)) throw Failure{"--alpha must be positive"};
      return run_test(test);
    }
    if (cmd_sim->parsed()) {
      if (sim.table == 0 && sim.custom.empty()) throw Failure{"simulate needs --table or --custom"};
      sim.reps_set = opt_reps->count() > 0;
      sim.bootstrap_set = opt_boot->count() > 0;
      sim.seed_set = opt_seed->count() > 0;
      return run_simulate(sim);
    }
    return run_stat(stat);
  } catch (const Failure& f) {
    std::cerr << "gammagof: " << f.message << '\n';
  } catch (const std::exception& e) {
    std::cerr << "gammagof: " << e.what() << '\n';
  }
  return kError;
}

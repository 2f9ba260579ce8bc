// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "byzopt/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "byzopt/baselines.h"
#include "byzopt/byz_pip.h"
#include "byzopt/errors.h"
#include "byzopt/kernels.h"
#include "byzopt/matroid_secretary.h"
#include "byzopt/offline.h"
#include "byzopt/prophet.h"
#include "byzopt/rng.h"
#include "byzopt/secretary.h"

namespace byzopt {
namespace {

const std::set<std::string>& KnownAlgorithms() {
  static const std::set<std::string> names = {
      "byz-pip",  "byz-pip-refined", "single-prob",      "single-value",
      "matroid",  "prophet",         "baseline-classic", "baseline-median"};
  return names;
}

bool IsPip(const std::string& a) {
  return a == "byz-pip" || a == "byz-pip-refined";
}

bool IsProphet(const std::string& a) {
  return a == "prophet" || a == "baseline-median";
}

uint64_t Derive(uint64_t trial_seed, uint64_t tag) {
  return Rng::Mix(trial_seed ^ Rng::Mix(tag));
}

template <typename T>
T Get(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: bad field \"") + key + "\": " +
                      e.what());
  }
}

int SecretaryK(const std::string& algorithm, int n) {
  if (algorithm == "single-value" || algorithm == "matroid") {
    return ValueMaxK(n);
  }
  return ProbMaxK(n);
}

}  // namespace

ExperimentConfig ParseConfig(const Json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig c;
  c.raw = j;
  c.algorithm = Get<std::string>(j, "algorithm", c.algorithm);
  if (KnownAlgorithms().count(c.algorithm) == 0) {
    throw ConfigError("config: unknown algorithm \"" + c.algorithm + "\"");
  }
  c.variant = Get<std::string>(j, "variant", "");
  if (!c.variant.empty() &&
      !(c.variant == "smooth-reduction" && c.algorithm == "byz-pip") &&
      !(c.variant == "trunc" && c.algorithm == "prophet")) {
    throw ConfigError("config: variant \"" + c.variant +
                      "\" does not apply to " + c.algorithm);
  }
  c.trials = Get<int>(j, "trials", 1);
  if (c.trials < 1) throw ConfigError("config: trials must be >= 1");
  c.seed = Get<uint64_t>(j, "seed", 1);
  c.threads = Get<int>(j, "threads", 0);
  c.K = Get<int>(j, "K", 0);
  c.eps = Get<double>(j, "eps", 0.1);
  c.opt_factor = Get<double>(j, "opt_factor", 1.0);
  if (!(c.opt_factor > 0.0)) throw ConfigError("config: opt_factor must be > 0");

  const Json inst = Get<Json>(j, "instance", Json::object());
  c.green.n_green = Get<int>(inst, "n_green", 100);
  c.green.d = Get<int>(inst, "d", 1);
  c.green.budget = Get<double>(inst, "B", 10.0);
  const std::string vdist = Get<std::string>(inst, "value_dist", "uniform");
  if (vdist == "uniform") {
    c.green.value_dist = ValueDist::kUniform;
  } else if (vdist == "exponential") {
    c.green.value_dist = ValueDist::kExponential;
  } else {
    throw ConfigError("config: unknown value_dist \"" + vdist + "\"");
  }
  c.green.value_scale = Get<double>(inst, "value_scale", 1.0);
  const std::string sdist = Get<std::string>(inst, "size_dist", "uniform");
  if (sdist == "uniform") {
    c.green.size_dist = SizeDist::kUniform;
  } else if (sdist == "unit") {
    c.green.size_dist = SizeDist::kUnit;
  } else {
    throw ConfigError("config: unknown size_dist \"" + sdist + "\"");
  }
  c.green.size_lo = Get<double>(inst, "size_lo", 0.0);
  c.green.size_hi = Get<double>(inst, "size_hi", 1.0);
  c.green.smooth = Get<bool>(inst, "smooth", false);
  c.fixed_greens = Get<bool>(inst, "fixed", false);
  if (c.green.n_green < 0 || c.green.d < 1 || !(c.green.budget > 0.0)) {
    throw ConfigError("config: instance needs n_green >= 0, d >= 1, B > 0");
  }

  const Json adv = Get<Json>(j, "adversary", Json::object());
  c.red.strategy = ParseRedStrategy(Get<std::string>(adv, "strategy", "none"));
  c.red.spikes = Get<int>(adv, "spikes", 0);
  c.red.count = Get<int>(adv, "count", 0);

  c.matroid = Get<Json>(j, "matroid", Json{{"kind", "uniform"}, {"r", 1}});
  c.prophet = Get<Json>(j, "prophet", Json());
  if (IsProphet(c.algorithm) && c.prophet.is_null()) {
    throw ConfigError("config: " + c.algorithm + " needs a \"prophet\" field");
  }
  const Json aug = Get<Json>(j, "augmenter", Json::object());
  c.augmenter = Get<std::string>(aug, "kind", "zero");
  if (c.augmenter != "zero" && c.augmenter != "early-spike" &&
      c.augmenter != "threshold-chaser") {
    throw ConfigError("config: unknown augmenter \"" + c.augmenter + "\"");
  }
  c.spike = Get<double>(aug, "spike", 0.0);
  c.delta = Get<double>(aug, "delta", 0.0);
  return c;
}

std::string ConfigHash(const Json& j) {
  const std::string text = j.dump();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

int PipK(const ExperimentConfig& c, int n) {
  if (c.K > 0) return c.K;
  if (c.algorithm == "byz-pip-refined") return RefinedMinimumK(n, c.eps);
  return 8;
}

std::unique_ptr<Matroid> BuildMatroid(const Json& j, int n) {
  const std::string kind = Get<std::string>(j, "kind", "uniform");
  if (kind != "partition_mod") return MatroidFromJson(j);
  const int blocks = Get<int>(j, "blocks", 1);
  const int cap = Get<int>(j, "cap", 1);
  if (blocks < 1) throw ConfigError("partition_mod: blocks must be >= 1");
  std::vector<std::vector<int>> ids(static_cast<size_t>(blocks));
  for (int id = 0; id < n; ++id) ids[static_cast<size_t>(id % blocks)].push_back(id);
  return std::make_unique<PartitionMatroid>(
      std::move(ids), std::vector<int>(static_cast<size_t>(blocks), cap));
}

}  // namespace

Scenario BuildScenario(const ExperimentConfig& c, uint64_t trial_seed) {
  GreenSpec green = c.green;
  green.seed = c.fixed_greens ? Derive(c.seed, 1) : Derive(trial_seed, 1);
  std::vector<Item> greens = GenGreen(green);
  const double c_star = SecretaryBenchmarks(greens).second_green_value;

  RedSpec red = c.red;
  red.seed = Derive(trial_seed, 2);
  const bool pip = IsPip(c.algorithm);
  red.layout =
      pip ? IntervalLayout::kPipUniform : IntervalLayout::kSecretaryQuarters;
  if (red.spikes <= 0) {
    if (pip) {
      red.spikes = PipK(c, c.green.n_green);
    } else {
      int k = SecretaryK(c.algorithm, c.green.n_green);
      for (int it = 0; it < 8; ++it) {
        k = SecretaryK(c.algorithm, c.green.n_green + k);
      }
      red.spikes = k;
    }
  }
  RedBatch reds = GenReds(red, green, c.green.n_green + 1, c_star);

  Scenario s;
  s.instance = AssembleInstance(c.green.d, c.green.budget, std::move(greens),
                                std::move(reds.items));
  s.schedule = MakeSchedule(s.instance, reds.times, Derive(trial_seed, 3));
  if (pip) {
    s.benchmarks = PipBenchmarks(s.instance);
    s.benchmarks.opt_estimate = s.benchmarks.opt_green * c.opt_factor;
  } else {
    const std::vector<Item> g = s.instance.Greens();
    s.benchmarks = SecretaryBenchmarks(g);
  }
  return s;
}

namespace {

struct ProphetPrepared {
  BaseProphetInstance instance;
  double opt_base = 0.0;
  QuantilePolicy policy;
  MedianThreshold median;
  TruncationPlan plan;
};

BaseProphetInstance LoadProphet(const Json& j) {
  if (j.is_object() && j.contains("random")) {
    const Json& r = j.at("random");
    return RandomTwoPointProphet(Get<int>(r, "n", 6), Get<int>(r, "d", 1),
                                 Get<double>(r, "B", 1.0),
                                 Get<double>(r, "spread", 10.0),
                                 Get<bool>(r, "unit_sizes", false),
                                 Get<uint64_t>(r, "seed", 1));
  }
  return ProphetFromJson(j);
}

std::unique_ptr<Augmenter> MakeAugmenter(const ExperimentConfig& c,
                                         const ProphetPrepared& p) {
  if (c.augmenter == "early-spike") {
    return std::make_unique<EarlySpikeAugmenter>(c.spike);
  }
  if (c.augmenter == "threshold-chaser") {
    return std::make_unique<ThresholdChaserAugmenter>(p.median.threshold,
                                                      c.delta);
  }
  return std::make_unique<ZeroAugmenter>();
}

void FillRatio(TrialRow& row) {
  row.ratio = row.benchmark > 0.0 ? row.value / row.benchmark : 0.0;
}

TrialRow RunPackingTrial(const ExperimentConfig& c, int trial,
                         std::vector<std::string>& warnings) {
  TrialRow row;
  row.trial = trial;
  row.seed = c.seed + static_cast<uint64_t>(trial);
  const Scenario s = BuildScenario(c, row.seed);
  const Instance& inst = s.instance;
  const uint64_t algo_seed = Derive(row.seed, 4);
  const auto single = [&](std::optional<int> pick) {
    row.value = pick.has_value() ? inst.item(*pick).value : 0.0;
    row.benchmark = s.benchmarks.second_green_value;
    row.success = pick.has_value() && row.value >= row.benchmark;
  };
  if (c.algorithm == "byz-pip") {
    const int K = PipK(c, inst.n());
    Selection sel;
    if (c.variant == "smooth-reduction") {
      sel = SmoothReduction(inst, s.schedule, K, algo_seed).selection;
      row.benchmark = s.benchmarks.opt_green_minus_max;
    } else {
      ByzLpOptions opt;
      opt.K = K;
      opt.opt_estimate = s.benchmarks.opt_estimate;
      opt.seed = algo_seed;
      sel = ByzLp(inst, s.schedule, opt).selection;
      row.benchmark = s.benchmarks.opt_green;
    }
    row.value = sel.total_value();
    row.feasible = !kernels::AnyGreater(sel.occupation(), inst.budget + K);
    row.success = row.value > 0.0;
  } else if (c.algorithm == "byz-pip-refined") {
    RefinedByzLpOptions opt;
    opt.K = PipK(c, inst.n());
    opt.eps = c.eps;
    opt.opt_estimate = s.benchmarks.opt_estimate;
    opt.seed = algo_seed;
    const ByzLpResult res = RefinedByzLp(inst, s.schedule, opt);
    warnings.insert(warnings.end(), res.warnings.begin(), res.warnings.end());
    row.value = res.selection.total_value();
    row.benchmark = s.benchmarks.opt_green;
    row.feasible =
        !kernels::AnyGreater(res.selection.occupation(), inst.budget + opt.K);
    row.success = row.value > 0.0;
  } else if (c.algorithm == "single-prob") {
    single(ProbMaxSingle(inst, s.schedule, algo_seed));
  } else if (c.algorithm == "single-value") {
    single(ValueMaxSingle(inst, s.schedule, algo_seed).pick);
  } else if (c.algorithm == "baseline-classic") {
    single(ClassicSecretary(inst, s.schedule));
  } else if (c.algorithm == "matroid") {
    const std::unique_ptr<Matroid> m = BuildMatroid(c.matroid, inst.n());
    const MatroidValueResult res =
        ValueMaxMatroid(inst, s.schedule, *m, algo_seed);
    std::vector<int> ids;
    for (const Pick& p : res.selection.picks()) ids.push_back(p.id);
    row.value = res.selection.total_value();
    row.benchmark = MatroidOpt(inst.Greens(), *m, true);
    row.feasible = m->Independent(ids);
    row.success = row.value > 0.0;
  }
  FillRatio(row);
  return row;
}

TrialRow RunProphetTrial(const ExperimentConfig& c, const ProphetPrepared& p,
                         int trial) {
  TrialRow row;
  row.trial = trial;
  row.seed = c.seed + static_cast<uint64_t>(trial);
  const uint64_t algo_seed = Derive(row.seed, 4);
  std::unique_ptr<Augmenter> aug = MakeAugmenter(c, p);
  ProphetRunResult run;
  if (c.algorithm == "baseline-median") {
    run = RunMedianThreshold(p.instance, p.median, *aug, algo_seed);
    row.feasible = run.selection.size() <= 1;
  } else {
    if (c.variant == "trunc") {
      run = TruncReduction(p.instance, p.plan, *aug, algo_seed).run;
    } else {
      ProphetAugOptions opt;
      opt.opt_base = p.opt_base;
      opt.seed = algo_seed;
      run = ProphetAug(p.instance, p.policy, *aug, opt);
    }
    row.feasible = !kernels::AnyGreater(run.selection.occupation(),
                                        p.instance.budget + 1.0);
  }
  row.value = run.selection.total_value();
  row.benchmark = p.opt_base;
  row.success = row.value > 0.0;
  FillRatio(row);
  return row;
}

}  // namespace

TrialReport RunExperiment(const ExperimentConfig& config) {
  TrialReport report;
  report.rows.resize(static_cast<size_t>(config.trials));
  std::unique_ptr<ProphetPrepared> prophet;
  if (IsProphet(config.algorithm)) {
    prophet = std::make_unique<ProphetPrepared>();
    prophet->instance = LoadProphet(config.prophet);
    try {
      prophet->opt_base = ProphetOptBaseExact(prophet->instance).value;
    } catch (const SizeError&) {
      report.warnings.push_back("OPT_base estimated by Monte Carlo");
      prophet->opt_base =
          ProphetOptBaseMonteCarlo(prophet->instance, 20000, Derive(config.seed, 5))
              .value;
    }
    prophet->policy = MakeQuantilePolicy(prophet->instance);
    prophet->median = MakeMedianThreshold(prophet->instance);
    if (config.variant == "trunc") {
      prophet->plan = MakeTruncationPlan(prophet->instance, prophet->opt_base);
    }
  }

  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.trials);
  std::atomic<int> next{0};
  std::mutex warn_mu;
  std::set<std::string> warnings;
  const auto worker = [&]() {
    std::vector<std::string> local;
    for (int i = next.fetch_add(1); i < config.trials; i = next.fetch_add(1)) {
      TrialRow row;
      try {
        row = prophet ? RunProphetTrial(config, *prophet, i)
                      : RunPackingTrial(config, i, local);
      } catch (const std::exception& e) {
        row = TrialRow();
        row.trial = i;
        row.seed = config.seed + static_cast<uint64_t>(i);
        row.feasible = false;
        row.error = e.what();
      }
      report.rows[static_cast<size_t>(i)] = std::move(row);
    }
    std::lock_guard<std::mutex> lock(warn_mu);
    warnings.insert(local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  report.warnings.insert(report.warnings.end(), warnings.begin(),
                         warnings.end());
  report.aggregate = Summarize(report.rows);
  return report;
}

Json GenerateInstanceJson(const ExperimentConfig& config, uint64_t seed) {
  if (IsProphet(config.algorithm)) return ProphetToJson(LoadProphet(config.prophet));
  const Scenario s = BuildScenario(config, seed);
  return InstanceToJson(s.instance, &s.schedule);
}

Aggregate Summarize(const std::vector<TrialRow>& rows) {
  Aggregate a;
  a.trials = static_cast<int>(rows.size());
  if (rows.empty()) return a;
  const double n = static_cast<double>(rows.size());
  double sv = 0.0, sv2 = 0.0, sr = 0.0, sr2 = 0.0, sb = 0.0;
  int success = 0, feasible = 0;
  std::vector<double> ratios;
  ratios.reserve(rows.size());
  for (const TrialRow& r : rows) {
    sv += r.value;
    sv2 += r.value * r.value;
    sr += r.ratio;
    sr2 += r.ratio * r.ratio;
    sb += r.benchmark;
    success += r.success ? 1 : 0;
    feasible += r.feasible ? 1 : 0;
    ratios.push_back(r.ratio);
  }
  const auto se = [n](double s1, double s2) {
    if (n < 2) return 0.0;
    const double mean = s1 / n;
    return std::sqrt(std::max(0.0, (s2 - n * mean * mean) / (n - 1)) / n);
  };
  a.mean_value = sv / n;
  a.stderr_value = se(sv, sv2);
  a.mean_benchmark = sb / n;
  a.mean_ratio = sr / n;
  a.stderr_ratio = se(sr, sr2);
  std::sort(ratios.begin(), ratios.end());
  a.p10_ratio = ratios[static_cast<size_t>(0.1 * (ratios.size() - 1))];
  a.success_rate = success / n;
  a.feasible_rate = feasible / n;
  return a;
}

void WriteTrialsCsv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << "trial,seed,value,benchmark,ratio,success,feasible\n";
  char buf[160];
  for (const TrialRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%llu,%.17g,%.17g,%.17g,%d,%d\n",
                  r.trial, static_cast<unsigned long long>(r.seed), r.value,
                  r.benchmark, r.ratio, r.success ? 1 : 0, r.feasible ? 1 : 0);
    out << buf;
  }
}

std::vector<TrialRow> ReadTrialsCsv(std::istream& in) {
  std::vector<TrialRow> rows;
  std::string line;
  if (!std::getline(in, line) ||
      line != "trial,seed,value,benchmark,ratio,success,feasible") {
    throw ConfigError("trials.csv: unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TrialRow r;
    unsigned long long seed = 0;
    int success = 0, feasible = 0;
    if (std::sscanf(line.c_str(), "%d,%llu,%lf,%lf,%lf,%d,%d", &r.trial, &seed,
                    &r.value, &r.benchmark, &r.ratio, &success,
                    &feasible) != 7) {
      throw ConfigError("trials.csv: malformed row \"" + line + "\"");
    }
    r.seed = seed;
    r.success = success != 0;
    r.feasible = feasible != 0;
    rows.push_back(r);
  }
  return rows;
}

Json SummaryJson(const Aggregate& a, const Json& meta) {
  Json j;
  j["meta"] = meta;
  j["aggregate"] = {{"trials", a.trials},
                    {"mean_value", a.mean_value},
                    {"stderr_value", a.stderr_value},
                    {"mean_benchmark", a.mean_benchmark},
                    {"mean_ratio", a.mean_ratio},
                    {"stderr_ratio", a.stderr_ratio},
                    {"p10_ratio", a.p10_ratio},
                    {"success_rate", a.success_rate},
                    {"feasible_rate", a.feasible_rate}};
  return j;
}

void WriteOutputs(const std::string& dir, const ExperimentConfig& config,
                  const TrialReport& report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir + ": " + ec.message());
  const std::string csv_path = dir + "/trials.csv";
  std::ofstream csv(csv_path);
  if (!csv) throw ConfigError("cannot write " + csv_path);
  WriteTrialsCsv(csv, report.rows);
  csv.close();
  if (!csv) throw ConfigError("write failed for " + csv_path);

  Json errors = Json::array();
  for (const TrialRow& r : report.rows) {
    if (!r.error.empty()) errors.push_back({{"trial", r.trial}, {"message", r.error}});
  }
  Json meta = {{"algorithm", config.algorithm},
               {"variant", config.variant},
               {"config_hash", ConfigHash(config.raw)},
               {"base_seed", config.seed},
               {"errors", errors},
               {"warnings", report.warnings}};
  WriteJsonFile(dir + "/summary.json", SummaryJson(report.aggregate, meta));
}

Json RecomputeSummary(const std::string& dir) {
  const std::string csv_path = dir + "/trials.csv";
  std::ifstream csv(csv_path);
  if (!csv) throw ConfigError("cannot open " + csv_path);
  const std::vector<TrialRow> rows = ReadTrialsCsv(csv);
  Json meta = Json::object();
  const std::string summary_path = dir + "/summary.json";
  if (std::filesystem::exists(summary_path)) {
    const Json old = ReadJsonFile(summary_path);
    if (old.contains("meta")) meta = old.at("meta");
  }
  Json summary = SummaryJson(Summarize(rows), meta);
  WriteJsonFile(summary_path, summary);
  return summary;
}

}  // namespace byzopt

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


// Monte Carlo experiment runner behind the command-line tool.
//
// A config is a JSON object:
//   {
//     "algorithm": "byz-pip" | "byz-pip-refined" | "single-prob" |
//                  "single-value" | "matroid" | "prophet" |
//                  "baseline-classic" | "baseline-median",
//     "variant":   "" | "smooth-reduction" (byz-pip) | "trunc" (prophet),
//     "trials": 200, "seed": 1, "threads": 0,
//     "K": 0, "eps": 0.1, "opt_factor": 1.0,
//     "instance":  {"n_green", "d", "B", "value_dist", "value_scale",
//                   "size_dist", "size_lo", "size_hi", "smooth",
//                   "fixed": false},
//     "adversary": {"strategy", "spikes", "count"},
//     "matroid":   {"kind": "uniform" | "partition" | "partition_mod", ...},
//     "prophet":   {"B", "items"}  or  {"random": {"n", "d", "B", "spread",
//                                                  "unit_sizes", "seed"}},
//     "augmenter": {"kind": "zero" | "early-spike" | "threshold-chaser",
//                   "spike", "delta"}
//   }
// Trial i uses seed + i; everything else is derived from that seed, so a
// config always reproduces the same rows.

#ifndef BYZOPT_EXPERIMENT_H_
#define BYZOPT_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "byzopt/generators.h"
#include "byzopt/json_io.h"
#include "byzopt/model.h"

namespace byzopt {

struct ExperimentConfig {
  std::string algorithm = "byz-pip";
  std::string variant;
  int trials = 1;
  uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
  int K = 0;        // 0: the algorithm's default
  double eps = 0.1;
  double opt_factor = 1.0;
  GreenSpec green;
  bool fixed_greens = false;
  RedSpec red;
  Json matroid;
  Json prophet;
  std::string augmenter = "zero";
  double spike = 0.0;
  double delta = 0.0;
  Json raw;
};

// Throws ConfigError on unknown algorithms or malformed fields.
ExperimentConfig ParseConfig(const Json& j);

// 16 hex digits of FNV-1a over the canonical (sorted-key) dump.
std::string ConfigHash(const Json& j);

struct TrialRow {
  int trial = 0;
  uint64_t seed = 0;
  double value = 0.0;
  double benchmark = 0.0;
  double ratio = 0.0;
  bool success = false;
  bool feasible = true;
  std::string error;
};

struct Aggregate {
  int trials = 0;
  double mean_value = 0.0;
  double stderr_value = 0.0;
  double mean_benchmark = 0.0;
  double mean_ratio = 0.0;
  double stderr_ratio = 0.0;
  double p10_ratio = 0.0;
  double success_rate = 0.0;
  double feasible_rate = 0.0;
};

struct TrialReport {
  std::vector<TrialRow> rows;
  Aggregate aggregate;
  std::vector<std::string> warnings;
};

TrialReport RunExperiment(const ExperimentConfig& config);

// Scenario for one trial of a packing or secretary config: the instance
// and its schedule, plus the benchmarks.
struct Scenario {
  Instance instance;
  ArrivalSchedule schedule;
  Benchmarks benchmarks;
};

Scenario BuildScenario(const ExperimentConfig& config, uint64_t trial_seed);

// Instance JSON (with arrivals) for packing/secretary configs, or the
// prophet instance for prophet configs.
Json GenerateInstanceJson(const ExperimentConfig& config, uint64_t seed);

Aggregate Summarize(const std::vector<TrialRow>& rows);

void WriteTrialsCsv(std::ostream& out, const std::vector<TrialRow>& rows);
std::vector<TrialRow> ReadTrialsCsv(std::istream& in);

Json SummaryJson(const Aggregate& aggregate, const Json& meta);

// Writes <dir>/trials.csv and <dir>/summary.json.
void WriteOutputs(const std::string& dir, const ExperimentConfig& config,
                  const TrialReport& report);

// Recomputes <dir>/summary.json from <dir>/trials.csv, keeping the metadata
// of an existing summary.
Json RecomputeSummary(const std::string& dir);

}  // namespace byzopt

#endif  // BYZOPT_EXPERIMENT_H_

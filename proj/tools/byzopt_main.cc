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


// byzopt: generate instances, run Monte Carlo experiments, and rebuild
// summaries from trial tables.
//
//   byzopt gen-instance --config cfg.json [--seed S] [--out inst.json]
//   byzopt run <algorithm> [--config cfg.json] [--seed S] [--trials N]
//                          [--out DIR]
//   byzopt report --out DIR

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "byzopt/errors.h"
#include "byzopt/experiment.h"
#include "byzopt/json_io.h"

namespace {

using byzopt::Json;

Json LoadConfig(const std::string& path) {
  if (path.empty()) return Json::object();
  return byzopt::ReadJsonFile(path);
}

void ApplyOverrides(Json& cfg, const std::optional<uint64_t>& seed,
                    const std::optional<int>& trials) {
  if (seed) cfg["seed"] = *seed;
  if (trials) cfg["trials"] = *trials;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust online selection under Byzantine arrivals"};
  app.require_subcommand(1);

  std::string config_path;
  std::string instance_out;
  std::string run_out = "out";
  std::string report_dir;
  std::optional<uint64_t> seed;
  std::optional<int> trials;
  std::string algorithm;

  CLI::App* gen = app.add_subcommand("gen-instance", "Write one instance as JSON");
  gen->add_option("--config", config_path, "Experiment config")->required();
  gen->add_option("--seed", seed, "Trial seed");
  gen->add_option("--out", instance_out, "Output file (stdout when omitted)");

  CLI::App* run = app.add_subcommand("run", "Run trials of one algorithm");
  run->add_option("algorithm", algorithm,
                  "byz-pip, byz-pip-refined, single-prob, single-value, "
                  "matroid, prophet, baseline-classic, baseline-median")
      ->required();
  run->add_option("--config", config_path, "Experiment config");
  run->add_option("--seed", seed, "Base seed");
  run->add_option("--trials", trials, "Number of trials");
  run->add_option("--out", run_out, "Output directory")->capture_default_str();

  CLI::App* report = app.add_subcommand(
      "report", "Recompute summary.json from trials.csv");
  report->add_option("--out", report_dir, "Directory holding trials.csv")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Json cfg = LoadConfig(config_path);
      const byzopt::ExperimentConfig config = byzopt::ParseConfig(cfg);
      const Json inst =
          byzopt::GenerateInstanceJson(config, seed.value_or(config.seed));
      if (instance_out.empty()) {
        std::cout << inst.dump(2) << "\n";
      } else {
        byzopt::WriteJsonFile(instance_out, inst);
      }
    } else if (*run) {
      Json cfg = LoadConfig(config_path);
      cfg["algorithm"] = algorithm;
      ApplyOverrides(cfg, seed, trials);
      const byzopt::ExperimentConfig config = byzopt::ParseConfig(cfg);
      const byzopt::TrialReport rep = byzopt::RunExperiment(config);
      byzopt::WriteOutputs(run_out, config, rep);
      for (const std::string& w : rep.warnings) {
        std::cerr << "warning: " << w << "\n";
      }
      const byzopt::Aggregate& a = rep.aggregate;
      std::cout << config.algorithm << ": trials=" << a.trials
                << " mean_value=" << a.mean_value
                << " mean_ratio=" << a.mean_ratio
                << " success_rate=" << a.success_rate
                << " feasible_rate=" << a.feasible_rate << "\n";
    } else if (*report) {
      const Json summary = byzopt::RecomputeSummary(report_dir);
      std::cout << summary.dump(2) << "\n";
    }
  } catch (const byzopt::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

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


// Online packing with Byzantine (adversarially timed) items.
//
// IntervalByzLp runs a Lagrangian threshold rule inside one time interval:
// item t is picked iff C_t >= gamma * <lambda_t, A_t>, where lambda_t comes
// from an OLO learner rewarded with the realized consumption. ByzLp cuts
// [0, 1] into K intervals, learns gamma across them with multiscale
// experts, and feeds back every grid point's truncated interval value.

#ifndef BYZOPT_BYZ_PIP_H_
#define BYZOPT_BYZ_PIP_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "byzopt/model.h"
#include "byzopt/olo.h"

namespace byzopt {

enum class GridSpacing { kFactor2, kFactorOneMinusEps };

struct GammaGrid {
  std::vector<double> values;  // ascending
  GridSpacing spacing = GridSpacing::kFactor2;
  double ratio = 2.0;
};

// kFactor2: lo * 2^k covering [O/(16Bn), O*n/(16B)].
// kFactorOneMinusEps: ratio 1/(1-eps) covering [O/(Bn), O*n/B].
// Throws ContractViolation for a nonpositive estimate.
GammaGrid MakeGammaGrid(double opt_estimate, int n, double budget,
                        GridSpacing spacing, double eps = 0.1);

struct IntervalRun {
  double gamma = 0.0;
  double cap = 0.0;
  Selection picks;
  bool stopped_early = false;
  double raw_value = 0.0;
  double truncated_value = 0.0;  // min(raw_value, gamma * cap)
};

struct PipTraceRow {
  int interval = 0;
  double time = 0.0;
  int id = 0;
  double gamma = 0.0;
  std::vector<double> lambda;
  bool picked = false;
  std::vector<double> occupation;
};

// Items of one interval, in arrival order, with their arrival times.
struct IntervalStream {
  std::vector<const Item*> items;
  std::vector<double> times;
};

// `olo` must be a fresh learner over the d-1 simplex with epsilon 1/2.
IntervalRun IntervalByzLp(const IntervalStream& stream, double gamma,
                          double cap, OloLearner& olo,
                          std::vector<PipTraceRow>* trace = nullptr,
                          int interval = 0);

// Same rule, but the learner lives on the full-dimensional simplex and is
// charged A_t x_t - (B/n) * 1. Throws ContractViolation when B > n.
IntervalRun RefinedIntervalByzLp(const IntervalStream& stream, double gamma,
                                 double cap, int n, double budget,
                                 OloLearner& olo_full,
                                 std::vector<PipTraceRow>* trace = nullptr,
                                 int interval = 0);

struct ByzLpOptions {
  int K = 8;
  double opt_estimate = 0.0;
  // <= 0 selects min(1, sqrt(ln(max(|grid|, 2)) / K)).
  double eps_ms = 0.0;
  uint64_t seed = 0;
};

struct ByzLpResult {
  Selection selection;
  GammaGrid grid;
  std::vector<int> gamma_index;  // chosen grid point per interval
  std::vector<IntervalRun> intervals;
  double eps_ms = 0.0;
  std::vector<std::string> warnings;
};

// Cuts [0, 1] into K equal intervals (kPipUniform layout).
std::vector<IntervalStream> SplitIntervals(const Instance& instance,
                                           const ArrivalSchedule& schedule,
                                           int K);

ByzLpResult ByzLp(const Instance& instance, const ArrivalSchedule& schedule,
                  const ByzLpOptions& options,
                  std::vector<PipTraceRow>* trace = nullptr);

struct RefinedByzLpOptions {
  int K = 8;
  double eps = 0.1;  // in (0, 1/10]
  double opt_estimate = 0.0;
  uint64_t seed = 0;
};

// Smallest K meeting (ln ln n + ln(1/eps)) / eps^2 with constant 1.
int RefinedMinimumK(int n, double eps);

ByzLpResult RefinedByzLp(const Instance& instance,
                         const ArrivalSchedule& schedule,
                         const RefinedByzLpOptions& options,
                         std::vector<PipTraceRow>* trace = nullptr);

struct SmoothReductionResult {
  Selection selection;
  int branch = 0;  // 1: random item, 2: top-B proxy, 3: half-split ByzLp
  double half_max = kNegInf;
};

// `forced_branch` in {1, 2, 3} skips the uniform branch draw.
SmoothReductionResult SmoothReduction(const Instance& instance,
                                      const ArrivalSchedule& schedule, int K,
                                      uint64_t seed, int forced_branch = 0);

void WritePipTraceCsv(std::ostream& out, std::span<const PipTraceRow> rows);

}  // namespace byzopt

#endif  // BYZOPT_BYZ_PIP_H_

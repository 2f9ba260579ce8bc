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


#include "byzopt/byz_pip.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <string>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"
#include "byzopt/multiscale.h"
#include "byzopt/rng.h"

namespace byzopt {

GammaGrid MakeGammaGrid(double opt_estimate, int n, double budget,
                        GridSpacing spacing, double eps) {
  if (!(opt_estimate > 0.0) || !std::isfinite(opt_estimate)) {
    throw ContractViolation("MakeGammaGrid: opt estimate must be positive");
  }
  if (n < 1) throw ContractViolation("MakeGammaGrid: n must be >= 1");
  if (!(budget > 0.0)) throw ContractViolation("MakeGammaGrid: B must be > 0");
  GammaGrid grid;
  grid.spacing = spacing;
  double lo = 0.0;
  double hi = 0.0;
  if (spacing == GridSpacing::kFactor2) {
    grid.ratio = 2.0;
    lo = opt_estimate / (16.0 * budget * n);
    hi = opt_estimate * n / (16.0 * budget);
  } else {
    if (!(eps > 0.0 && eps < 1.0)) {
      throw ContractViolation("MakeGammaGrid: eps must lie in (0, 1)");
    }
    grid.ratio = 1.0 / (1.0 - eps);
    lo = opt_estimate / (budget * n);
    hi = opt_estimate * n / budget;
  }
  grid.values.push_back(lo);
  double v = lo;
  for (int k = 1; v < hi * (1.0 - 1e-12); ++k) {
    v = lo * std::pow(grid.ratio, k);
    grid.values.push_back(v);
  }
  return grid;
}

namespace {

using PenaltyFn = std::function<void(std::span<const double> size, bool picked,
                                     std::span<double> g)>;

IntervalRun RunInterval(const IntervalStream& stream, double gamma, double cap,
                        OloLearner& olo, const PenaltyFn& penalty,
                        std::vector<PipTraceRow>* trace, int interval) {
  const int d = olo.d();
  IntervalRun run;
  run.gamma = gamma;
  run.cap = cap;
  run.picks = Selection(d);
  std::vector<double> lambda(static_cast<size_t>(d));
  std::vector<double> g(static_cast<size_t>(d));
  for (size_t s = 0; s < stream.items.size(); ++s) {
    const Item& item = *stream.items[s];
    olo.DecideInto(lambda);
    const bool pick = item.value >= gamma * kernels::Dot(lambda, item.size);
    if (pick) run.picks.Add(item);
    penalty(item.size, pick, g);
    olo.Observe(g);
    if (trace != nullptr) {
      trace->push_back({interval, stream.times[s], item.id, gamma, lambda, pick,
                        run.picks.occupation()});
    }
    if (pick && kernels::AnyGreater(run.picks.occupation(), cap)) {
      run.stopped_early = true;
      break;
    }
  }
  run.raw_value = run.picks.total_value();
  run.truncated_value = std::min(run.raw_value, gamma * cap);
  return run;
}

void CheckIntervalArgs(double gamma, double cap) {
  if (!(gamma >= 0.0)) throw ContractViolation("interval: gamma must be >= 0");
  if (!(cap > 0.0)) throw ContractViolation("interval: cap must be > 0");
}

}  // namespace

IntervalRun IntervalByzLp(const IntervalStream& stream, double gamma,
                          double cap, OloLearner& olo,
                          std::vector<PipTraceRow>* trace, int interval) {
  CheckIntervalArgs(gamma, cap);
  if (olo.full_dimensional()) {
    throw ContractViolation("IntervalByzLp: learner must play the d-1 simplex");
  }
  const PenaltyFn consumption = [](std::span<const double> a, bool picked,
                                   std::span<double> g) {
    for (size_t k = 0; k < a.size(); ++k) g[k] = picked ? a[k] : 0.0;
  };
  return RunInterval(stream, gamma, cap, olo, consumption, trace, interval);
}

IntervalRun RefinedIntervalByzLp(const IntervalStream& stream, double gamma,
                                 double cap, int n, double budget,
                                 OloLearner& olo_full,
                                 std::vector<PipTraceRow>* trace,
                                 int interval) {
  CheckIntervalArgs(gamma, cap);
  if (!olo_full.full_dimensional()) {
    throw ContractViolation(
        "RefinedIntervalByzLp: learner must play the full-dimensional simplex");
  }
  if (n < 1 || budget > n) {
    throw ContractViolation(
        "RefinedIntervalByzLp: requires B <= n so that the penalty "
        "A_t x_t - B/n stays within [-1, 1] (B = " +
        std::to_string(budget) + ", n = " + std::to_string(n) + ")");
  }
  const double share = budget / n;
  const PenaltyFn penalty = [share](std::span<const double> a, bool picked,
                                    std::span<double> g) {
    for (size_t k = 0; k < a.size(); ++k) g[k] = (picked ? a[k] : 0.0) - share;
  };
  return RunInterval(stream, gamma, cap, olo_full, penalty, trace, interval);
}

std::vector<IntervalStream> SplitIntervals(const Instance& instance,
                                           const ArrivalSchedule& schedule,
                                           int K) {
  std::vector<IntervalStream> out(static_cast<size_t>(K));
  for (const Arrival& a : schedule.arrivals) {
    const int i = IntervalIndex(a.time, K, IntervalLayout::kPipUniform);
    out[static_cast<size_t>(i)].items.push_back(&instance.item(a.id));
    out[static_cast<size_t>(i)].times.push_back(a.time);
  }
  return out;
}

namespace {

using IntervalFn = std::function<IntervalRun(
    const IntervalStream&, double gamma, std::vector<PipTraceRow>*, int)>;

// Shared driver: sample gamma, run the interval, feed back every grid
// point's truncated value computed on the same interval.
void DriveIntervals(const Instance& instance, const ArrivalSchedule& schedule,
                    int K, double eps_ms, uint64_t seed,
                    const IntervalFn& run_interval,
                    std::vector<PipTraceRow>* trace, ByzLpResult& result) {
  const GammaGrid& grid = result.grid;
  std::vector<double> scales(grid.values.size());
  for (size_t g = 0; g < scales.size(); ++g) {
    scales[g] = instance.budget * grid.values[g] / K;
  }
  MultiscaleLearner learner(scales, eps_ms);
  Rng rng(seed);
  result.selection = Selection(instance.d);
  const std::vector<IntervalStream> streams =
      SplitIntervals(instance, schedule, K);
  std::vector<double> rewards(grid.values.size());
  for (int i = 0; i < K; ++i) {
    const MultiscaleDecision decision = learner.Decide(rng);
    const size_t chosen = static_cast<size_t>(decision.index);
    const IntervalStream& stream = streams[static_cast<size_t>(i)];
    IntervalRun actual = run_interval(stream, grid.values[chosen], trace, i);
    for (size_t g = 0; g < grid.values.size(); ++g) {
      rewards[g] = g == chosen
                       ? actual.truncated_value
                       : run_interval(stream, grid.values[g], nullptr, i)
                             .truncated_value;
      rewards[g] = std::min(rewards[g], scales[g]);
    }
    learner.Observe(rewards);
    result.selection.Merge(actual.picks, instance);
    result.gamma_index.push_back(decision.index);
    result.intervals.push_back(std::move(actual));
  }
}

}  // namespace

ByzLpResult ByzLp(const Instance& instance, const ArrivalSchedule& schedule,
                  const ByzLpOptions& options,
                  std::vector<PipTraceRow>* trace) {
  if (options.K < 1) throw ContractViolation("ByzLp: K must be >= 1");
  ByzLpResult result;
  result.selection = Selection(instance.d);
  if (schedule.arrivals.empty()) return result;
  const int n = std::max(1, static_cast<int>(schedule.arrivals.size()));
  result.grid = MakeGammaGrid(options.opt_estimate, n, instance.budget,
                              GridSpacing::kFactor2);
  result.eps_ms = options.eps_ms > 0.0
                      ? std::min(1.0, options.eps_ms)
                      : std::min(1.0, std::sqrt(std::log(std::max<double>(
                                                    result.grid.values.size(),
                                                    2.0)) /
                                                options.K));
  const double cap = instance.budget / options.K;
  const int d = instance.d;
  const IntervalFn run = [&](const IntervalStream& s, double gamma,
                             std::vector<PipTraceRow>* tr, int i) {
    OloLearner olo(d, 0.5, false);
    return IntervalByzLp(s, gamma, cap, olo, tr, i);
  };
  DriveIntervals(instance, schedule, options.K, result.eps_ms, options.seed,
                 run, trace, result);
  return result;
}

int RefinedMinimumK(int n, double eps) {
  const double lnln = n > 2 ? std::log(std::log(static_cast<double>(n))) : 0.0;
  return static_cast<int>(
      std::ceil((std::max(0.0, lnln) + std::log(1.0 / eps)) / (eps * eps)));
}

ByzLpResult RefinedByzLp(const Instance& instance,
                         const ArrivalSchedule& schedule,
                         const RefinedByzLpOptions& options,
                         std::vector<PipTraceRow>* trace) {
  if (options.K < 1) throw ContractViolation("RefinedByzLp: K must be >= 1");
  if (!(options.eps > 0.0 && options.eps <= 0.1)) {
    throw ContractViolation("RefinedByzLp: eps must lie in (0, 1/10]");
  }
  ByzLpResult result;
  result.selection = Selection(instance.d);
  if (schedule.arrivals.empty()) return result;
  const int n = static_cast<int>(schedule.arrivals.size());
  if (instance.budget > n) {
    throw ContractViolation("RefinedByzLp: requires B <= n (B = " +
                            std::to_string(instance.budget) +
                            ", n = " + std::to_string(n) + ")");
  }
  const int k_min = RefinedMinimumK(n, options.eps);
  if (options.K < k_min) {
    result.warnings.push_back("K = " + std::to_string(options.K) +
                              " is below (ln ln n + ln(1/eps)) / eps^2 = " +
                              std::to_string(k_min));
  }
  result.grid = MakeGammaGrid(options.opt_estimate, n, instance.budget,
                              GridSpacing::kFactorOneMinusEps, options.eps);
  result.eps_ms = options.eps;
  const double cap = instance.budget / options.K;
  const int d = instance.d;
  const double budget = instance.budget;
  const double eps = options.eps;
  const IntervalFn run = [&](const IntervalStream& s, double gamma,
                             std::vector<PipTraceRow>* tr, int i) {
    OloLearner olo(d, eps, true);
    return RefinedIntervalByzLp(s, gamma, cap, n, budget, olo, tr, i);
  };
  DriveIntervals(instance, schedule, options.K, result.eps_ms, options.seed,
                 run, trace, result);
  return result;
}

SmoothReductionResult SmoothReduction(const Instance& instance,
                                      const ArrivalSchedule& schedule, int K,
                                      uint64_t seed, int forced_branch) {
  if (!(instance.budget >= 1.0)) {
    throw ContractViolation("SmoothReduction: requires B >= 1");
  }
  if (forced_branch < 0 || forced_branch > 3) {
    throw ContractViolation("SmoothReduction: branch must be 1, 2 or 3");
  }
  Rng rng(seed);
  SmoothReductionResult out;
  out.selection = Selection(instance.d);
  out.branch = forced_branch != 0 ? forced_branch
                                  : static_cast<int>(rng.UniformInt(1, 3));
  const auto& arrivals = schedule.arrivals;
  if (arrivals.empty()) return out;

  if (out.branch == 1) {
    const int64_t pick =
        rng.UniformInt(0, static_cast<int64_t>(arrivals.size()) - 1);
    out.selection.Add(instance.item(arrivals[static_cast<size_t>(pick)].id));
    return out;
  }

  std::vector<double> first_half;
  size_t split = 0;
  while (split < arrivals.size() && arrivals[split].time < 0.5) {
    first_half.push_back(instance.item(arrivals[split].id).value);
    ++split;
  }

  if (out.branch == 2) {
    const size_t slots = static_cast<size_t>(std::floor(instance.budget));
    double tau = kNegInf;
    if (!first_half.empty()) {
      std::sort(first_half.begin(), first_half.end(), std::greater<>());
      tau = first_half[std::min(slots, first_half.size()) - 1];
    }
    for (size_t s = split; s < arrivals.size() && out.selection.size() < slots;
         ++s) {
      const Item& item = instance.item(arrivals[s].id);
      if (item.value >= tau) out.selection.Add(item);
    }
    return out;
  }

  ArrivalSchedule second;
  second.seed = schedule.seed;
  for (size_t s = split; s < arrivals.size(); ++s) {
    second.arrivals.push_back(
        {std::clamp(2.0 * arrivals[s].time - 1.0, 0.0, 1.0), arrivals[s].id});
  }
  if (!first_half.empty()) {
    out.half_max = *std::max_element(first_half.begin(), first_half.end());
  } else if (!second.arrivals.empty()) {
    out.half_max = instance.item(second.arrivals.front().id).value;
  }
  if (!(out.half_max > 0.0) || second.arrivals.empty()) return out;
  ByzLpOptions options;
  options.K = K;
  options.opt_estimate = out.half_max;
  options.seed = rng.Next();
  out.selection = ByzLp(instance, second, options).selection;
  return out;
}

void WritePipTraceCsv(std::ostream& out, std::span<const PipTraceRow> rows) {
  out << "interval,time,id,gamma,lambda,picked,occupation\n";
  const auto join = [](const std::vector<double>& v) {
    std::string s;
    char buf[32];
    for (size_t k = 0; k < v.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", v[k]);
      if (k > 0) s += ';';
      s += buf;
    }
    return s;
  };
  char buf[64];
  for (const PipTraceRow& r : rows) {
    out << r.interval << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", r.time);
    out << buf << ',' << r.id << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", r.gamma);
    out << buf << ',' << join(r.lambda) << ',' << (r.picked ? 1 : 0) << ','
        << join(r.occupation) << '\n';
  }
}

}  // namespace byzopt

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


// Prophet packing with adversarial augmentations.
//
// Values V_t are drawn from known distributions; an adaptive augmenter adds
// R_t >= 0 and the algorithm sees C_t = V_t + R_t. ProphetAug compares C_t
// against gamma * <lambda_t, a_t> with gamma = OPT_base / B and learns
// lambda_t on the full-dimensional simplex from the penalties
// a_t x_t - a_t x*_t, where x* comes from the quantile policy.

#ifndef BYZOPT_PROPHET_H_
#define BYZOPT_PROPHET_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "byzopt/model.h"
#include "byzopt/prophet_instance.h"
#include "byzopt/rng.h"

namespace byzopt {

// psi_t accepts V > threshold[t] always and V == threshold[t] with
// probability boundary_prob[t], so Pr[psi_t(V_t) = 1] = x[t] exactly.
// x[t] = 0 is encoded as threshold +inf.
struct QuantilePolicy {
  std::vector<double> x;
  std::vector<double> threshold;
  std::vector<double> boundary_prob;
  std::vector<double> utilization;  // sum_t a_t x_t
  double value = 0.0;               // sum_t x_t E[V_t | top x_t-quantile]
};

// Solves max sum_t x_t E[V_t | top x_t-quantile] s.t.
// sum_t a_t x_t <= (B/4) * 1 exactly, as an LP over the support segments.
QuantilePolicy MakeQuantilePolicy(const BaseProphetInstance& instance);

double AcceptProbability(const QuantilePolicy& policy, int t, double value);

// One draw of psi_t(value).
bool Psi(const QuantilePolicy& policy, int t, double value, Rng& rng);

struct AugmentHistory {
  std::vector<double> base_values;
  std::vector<double> revealed;
  std::vector<char> picked;
  int picks = 0;
};

class Augmenter {
 public:
  virtual ~Augmenter() = default;

  virtual void Reset() {}

  // R_t >= 0 given the history before step t and the current base value.
  virtual double Augment(int t, double base_value,
                         const AugmentHistory& history) = 0;

  virtual std::string name() const = 0;
};

class ZeroAugmenter : public Augmenter {
 public:
  double Augment(int, double, const AugmentHistory&) override { return 0.0; }
  std::string name() const override { return "zero"; }
};

// Adds `spike` to the first item only.
class EarlySpikeAugmenter : public Augmenter {
 public:
  explicit EarlySpikeAugmenter(double spike) : spike_(spike) {}
  double Augment(int t, double, const AugmentHistory&) override {
    return t == 0 ? spike_ : 0.0;
  }
  std::string name() const override { return "early-spike"; }

 private:
  double spike_;
};

// While the observed algorithm holds nothing, lifts every value to just
// above `threshold` (the median-threshold baseline's cut).
class ThresholdChaserAugmenter : public Augmenter {
 public:
  ThresholdChaserAugmenter(double threshold, double delta)
      : threshold_(threshold), delta_(delta) {}
  double Augment(int, double base_value,
                 const AugmentHistory& history) override;
  std::string name() const override { return "threshold-chaser"; }

 private:
  double threshold_;
  double delta_;
};

struct ProphetRunResult {
  Selection selection;
  std::vector<double> base_values;
  std::vector<double> revealed;
  int steps = 0;        // tau: number of processed items
  bool stopped = false; // budget exceeded
  // sum_{t <= tau} <lambda_t, a_t (psi_t(V_t) - x*_t)> with psi drawn from
  // a stream independent of the run.
  double m_rhs = 0.0;
};

struct ProphetAugOptions {
  double opt_base = 0.0;  // gamma = opt_base / B
  // Decisions compare min(C_t, decision_cap); picked items still earn C_t.
  double decision_cap = kPosInf;
  uint64_t seed = 0;
};

ProphetRunResult ProphetAug(const BaseProphetInstance& instance,
                            const QuantilePolicy& policy,
                            Augmenter& augmenter,
                            const ProphetAugOptions& options);

// Precomputed pieces of the truncation reduction.
struct TruncationPlan {
  double cutoff = 0.0;  // M = OPT_base / 40
  BaseProphetInstance truncated;
  QuantilePolicy truncated_policy;
  double truncated_opt = 0.0;
};

// OPT of the truncated instance is exact when enumeration fits, else a
// Monte Carlo estimate with `mc_trials` samples.
TruncationPlan MakeTruncationPlan(const BaseProphetInstance& instance,
                                  double opt_base, int mc_trials = 20000);

struct TruncReductionResult {
  ProphetRunResult run;
  bool high_branch = false;
};

// Fair coin between ALG_low (ProphetAug on the truncated instance, deciding
// on min(C_t, M)) and ALG_high (the first single item with C_t > M).
TruncReductionResult TruncReduction(const BaseProphetInstance& instance,
                                    const TruncationPlan& plan,
                                    Augmenter& augmenter, uint64_t seed);

struct PsiReport {
  double value_mean = 0.0;
  double value_se = 0.0;
  std::vector<double> util_mean;
  std::vector<double> util_se;
  bool utilization_ok = false;  // util_mean <= B/4 + 3 se, every row
  bool value_ok = false;        // value_mean >= opt_base/4 - 3 se
  bool lp_budget_ok = false;    // sum_t a_t x*_t <= B/4 exactly (1e-9)
};

PsiReport PsiSanity(const BaseProphetInstance& instance,
                    const QuantilePolicy& policy, double opt_base, int trials,
                    uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_PROPHET_H_

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


#include "byzopt/prophet.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"
#include "byzopt/lp.h"
#include "byzopt/olo.h"

namespace byzopt {
namespace {

// Support sorted by decreasing value, equal values merged, null atoms
// dropped.
std::vector<std::pair<double, double>> Segments(const ProphetItem& item) {
  std::vector<std::pair<double, double>> segs;
  for (const auto& [v, p] : item.dist) {
    if (p > 0.0) segs.emplace_back(v, p);
  }
  std::stable_sort(segs.begin(), segs.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<double, double>> merged;
  for (const auto& s : segs) {
    if (!merged.empty() && merged.back().first == s.first) {
      merged.back().second += s.second;
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

}  // namespace

QuantilePolicy MakeQuantilePolicy(const BaseProphetInstance& instance) {
  instance.Validate();
  const size_t n = instance.items.size();
  const size_t d = static_cast<size_t>(instance.d);
  std::vector<std::vector<std::pair<double, double>>> segs(n);
  PackingLp lp;
  lp.rhs.assign(d, instance.budget / 4.0);
  std::vector<size_t> owner;
  for (size_t t = 0; t < n; ++t) {
    segs[t] = Segments(instance.items[t]);
    for (const auto& [v, p] : segs[t]) {
      if (!(v > 0.0)) continue;
      lp.cost.push_back(v);
      lp.columns.push_back(instance.items[t].size);
      lp.upper.push_back(p);
      owner.push_back(t);
    }
  }
  const LpSolution sol = SolvePackingLp(lp);

  QuantilePolicy policy;
  policy.x.assign(n, 0.0);
  for (size_t j = 0; j < owner.size(); ++j) policy.x[owner[j]] += sol.x[j];
  policy.threshold.assign(n, kPosInf);
  policy.boundary_prob.assign(n, 0.0);
  policy.utilization.assign(d, 0.0);
  for (size_t t = 0; t < n; ++t) {
    double positive_mass = 0.0;
    for (const auto& [v, p] : segs[t]) {
      if (v > 0.0) positive_mass += p;
    }
    double& x = policy.x[t];
    x = std::clamp(x, 0.0, std::min(1.0, positive_mass));
    if (x <= 0.0) {
      x = 0.0;
      continue;
    }
    // Fill the top of the distribution first.
    double cumulative = 0.0;
    for (const auto& [v, p] : segs[t]) {
      if (x <= cumulative + p) {
        const double take = x - cumulative;
        policy.threshold[t] = v;
        policy.boundary_prob[t] = std::clamp(take / p, 0.0, 1.0);
        policy.value += take * v;
        break;
      }
      policy.value += p * v;
      cumulative += p;
    }
    kernels::Axpy(x, instance.items[t].size, policy.utilization);
  }
  return policy;
}

double AcceptProbability(const QuantilePolicy& policy, int t, double value) {
  const size_t i = static_cast<size_t>(t);
  if (value > policy.threshold[i]) return 1.0;
  if (value == policy.threshold[i]) return policy.boundary_prob[i];
  return 0.0;
}

bool Psi(const QuantilePolicy& policy, int t, double value, Rng& rng) {
  const double u = rng.UniformDouble();
  return u < AcceptProbability(policy, t, value);
}

double ThresholdChaserAugmenter::Augment(int, double base_value,
                                         const AugmentHistory& history) {
  if (history.picks > 0) return 0.0;
  return std::max(0.0, threshold_ + delta_ - base_value);
}

namespace {

double CheckedAugment(Augmenter& augmenter, int t, double base,
                      const AugmentHistory& history) {
  const double r = augmenter.Augment(t, base, history);
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw ContractViolation("augmenter " + augmenter.name() +
                            " returned an invalid augmentation");
  }
  return r;
}

void Record(AugmentHistory& history, double base, double revealed,
            bool picked) {
  history.base_values.push_back(base);
  history.revealed.push_back(revealed);
  history.picked.push_back(picked ? 1 : 0);
  if (picked) ++history.picks;
}

Item StepItem(const BaseProphetInstance& instance, int t, double value) {
  Item item;
  item.id = t;
  item.value = value;
  item.size = instance.items[static_cast<size_t>(t)].size;
  return item;
}

}  // namespace

ProphetRunResult ProphetAug(const BaseProphetInstance& instance,
                            const QuantilePolicy& policy,
                            Augmenter& augmenter,
                            const ProphetAugOptions& options) {
  if (!(options.opt_base >= 0.0)) {
    throw ContractViolation("ProphetAug: opt_base must be >= 0");
  }
  if (policy.x.size() != instance.items.size()) {
    throw ContractViolation("ProphetAug: policy does not match the instance");
  }
  Rng root(options.seed);
  Rng values = root.Fork(1);
  Rng psi_rng = root.Fork(2);
  const int d = instance.d;
  const double gamma = options.opt_base / instance.budget;
  OloLearner olo(d, 0.5, true);
  std::vector<double> lambda(static_cast<size_t>(d));
  std::vector<double> g(static_cast<size_t>(d));
  AugmentHistory history;
  augmenter.Reset();
  ProphetRunResult out;
  out.selection = Selection(d);
  for (int t = 0; t < instance.n(); ++t) {
    const ProphetItem& item = instance.items[static_cast<size_t>(t)];
    const double v = SampleValue(item, values);
    const double c = v + CheckedAugment(augmenter, t, v, history);
    olo.DecideInto(lambda);
    const double load = kernels::Dot(lambda, item.size);
    const bool pick = std::min(c, options.decision_cap) >= gamma * load;
    if (pick) out.selection.Add(StepItem(instance, t, c));
    const double x_star = policy.x[static_cast<size_t>(t)];
    const double psi =
        Psi(policy, t, std::min(v, options.decision_cap), psi_rng) ? 1.0 : 0.0;
    out.m_rhs += load * (psi - x_star);
    for (size_t k = 0; k < g.size(); ++k) {
      g[k] = item.size[k] * ((pick ? 1.0 : 0.0) - x_star);
    }
    olo.Observe(g);
    out.base_values.push_back(v);
    out.revealed.push_back(c);
    Record(history, v, c, pick);
    out.steps = t + 1;
    if (pick &&
        kernels::AnyGreater(out.selection.occupation(), instance.budget)) {
      out.stopped = true;
      break;
    }
  }
  return out;
}

TruncationPlan MakeTruncationPlan(const BaseProphetInstance& instance,
                                  double opt_base, int mc_trials) {
  if (!(opt_base > 0.0)) {
    throw ContractViolation("MakeTruncationPlan: opt_base must be > 0");
  }
  TruncationPlan plan;
  plan.cutoff = opt_base / 40.0;
  plan.truncated = instance;
  for (ProphetItem& item : plan.truncated.items) {
    for (auto& [v, p] : item.dist) v = std::min(v, plan.cutoff);
  }
  try {
    plan.truncated_opt = ProphetOptBaseExact(plan.truncated).value;
  } catch (const SizeError&) {
    plan.truncated_opt =
        ProphetOptBaseMonteCarlo(plan.truncated, mc_trials, 0x7472756eULL).value;
  }
  plan.truncated_policy = MakeQuantilePolicy(plan.truncated);
  return plan;
}

TruncReductionResult TruncReduction(const BaseProphetInstance& instance,
                                    const TruncationPlan& plan,
                                    Augmenter& augmenter, uint64_t seed) {
  Rng rng(seed);
  TruncReductionResult out;
  out.high_branch = rng.Bernoulli(0.5);
  const uint64_t sub_seed = rng.Next();
  if (!out.high_branch) {
    ProphetAugOptions options;
    options.opt_base = plan.truncated_opt;
    options.decision_cap = plan.cutoff;
    options.seed = sub_seed;
    out.run = ProphetAug(instance, plan.truncated_policy, augmenter, options);
    return out;
  }
  Rng values = Rng(sub_seed).Fork(1);
  AugmentHistory history;
  augmenter.Reset();
  ProphetRunResult& run = out.run;
  run.selection = Selection(instance.d);
  for (int t = 0; t < instance.n(); ++t) {
    const double v = SampleValue(instance.items[static_cast<size_t>(t)], values);
    const double c = v + CheckedAugment(augmenter, t, v, history);
    const bool pick = c > plan.cutoff;
    if (pick) run.selection.Add(StepItem(instance, t, c));
    run.base_values.push_back(v);
    run.revealed.push_back(c);
    Record(history, v, c, pick);
    run.steps = t + 1;
    if (pick) break;
  }
  return out;
}

PsiReport PsiSanity(const BaseProphetInstance& instance,
                    const QuantilePolicy& policy, double opt_base, int trials,
                    uint64_t seed) {
  if (trials < 2) throw ContractViolation("PsiSanity: trials must be >= 2");
  const size_t d = static_cast<size_t>(instance.d);
  Rng rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::vector<double> usum(d, 0.0), usum_sq(d, 0.0), util(d);
  for (int s = 0; s < trials; ++s) {
    double value = 0.0;
    std::fill(util.begin(), util.end(), 0.0);
    for (int t = 0; t < instance.n(); ++t) {
      const ProphetItem& item = instance.items[static_cast<size_t>(t)];
      const double v = SampleValue(item, rng);
      if (Psi(policy, t, v, rng)) {
        value += v;
        kernels::Axpy(1.0, item.size, util);
      }
    }
    sum += value;
    sum_sq += value * value;
    for (size_t k = 0; k < d; ++k) {
      usum[k] += util[k];
      usum_sq[k] += util[k] * util[k];
    }
  }
  const auto stats = [trials](double s1, double s2, double& mean, double& se) {
    mean = s1 / trials;
    const double var = std::max(0.0, (s2 - trials * mean * mean) / (trials - 1));
    se = std::sqrt(var / trials);
  };
  PsiReport report;
  stats(sum, sum_sq, report.value_mean, report.value_se);
  report.util_mean.resize(d);
  report.util_se.resize(d);
  const double quarter = instance.budget / 4.0;
  const double tol = 1e-9 * std::max(1.0, quarter);
  report.utilization_ok = true;
  report.lp_budget_ok = true;
  for (size_t k = 0; k < d; ++k) {
    stats(usum[k], usum_sq[k], report.util_mean[k], report.util_se[k]);
    report.utilization_ok = report.utilization_ok &&
                            report.util_mean[k] <= quarter + 3.0 * report.util_se[k] + tol;
    report.lp_budget_ok = report.lp_budget_ok && policy.utilization[k] <= quarter + tol;
  }
  report.value_ok = report.value_mean >= opt_base / 4.0 - 3.0 * report.value_se -
                                             1e-9 * std::max(1.0, opt_base);
  return report;
}

}  // namespace byzopt

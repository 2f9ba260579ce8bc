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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "byzopt/baselines.h"
#include "byzopt/errors.h"
#include "byzopt/generators.h"
#include "byzopt/prophet.h"
#include "byzopt/prophet_instance.h"
#include "byzopt/rng.h"
#include "oracles.h"

namespace byzopt {
namespace {

ProphetItem Dist(std::vector<std::pair<double, double>> dist, std::vector<double> size) {
  ProphetItem it;
  it.dist = std::move(dist);
  it.size = std::move(size);
  return it;
}

BaseProphetInstance Make(double budget, std::vector<ProphetItem> items) {
  BaseProphetInstance inst;
  inst.d = static_cast<int>(items.front().size.size());
  inst.budget = budget;
  inst.items = std::move(items);
  return inst;
}

TEST(QuantilePolicy, DeterministicBindingBudget) {
  const BaseProphetInstance inst = Make(4.0, {Dist({{7.0, 1.0}}, {1.0})});
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  EXPECT_DOUBLE_EQ(p.x[0], 1.0);
  EXPECT_DOUBLE_EQ(p.value, 7.0);
  EXPECT_DOUBLE_EQ(p.utilization[0], 1.0);
}

TEST(QuantilePolicy, HugeBudgetTakesEverything) {
  const BaseProphetInstance inst = RandomTwoPointProphet(6, 2, 1000.0, 10.0, false, 3);
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  double mean = 0.0;
  for (const ProphetItem& it : inst.items) mean += it.Mean();
  for (double x : p.x) EXPECT_DOUBLE_EQ(x, 1.0);
  EXPECT_NEAR(p.value, mean, 1e-12);
}

TEST(QuantilePolicy, TwoItemsMatchGridSearch) {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const BaseProphetInstance inst = Make(
        rng.Uniform(1.0, 3.0),
        {Dist({{rng.Uniform(0, 1), 0.6}, {rng.Uniform(1, 9), 0.4}}, {rng.Uniform(0.3, 1.0)}),
         Dist({{rng.Uniform(0, 1), 0.7}, {rng.Uniform(1, 9), 0.3}}, {rng.Uniform(0.3, 1.0)})});
    const QuantilePolicy p = MakeQuantilePolicy(inst);
    const double cap = inst.budget / 4.0;
    double best = 0.0;
    const int steps = 1000;
    for (int i = 0; i <= steps; ++i) {
      const double x1 = static_cast<double>(i) / steps;
      const double used = inst.items[0].size[0] * x1;
      if (used > cap) break;
      const double x2 = std::min(1.0, (cap - used) / inst.items[1].size[0]);
      // The objective is nondecreasing in x2, so the grid point below the
      // largest feasible x2 is optimal for this x1.
      const double x2_grid = std::floor(x2 * steps) / steps;
      best = std::max(best, testing::TopQuantileValue(inst.items[0], x1) +
                                testing::TopQuantileValue(inst.items[1], x2_grid));
    }
    EXPECT_GE(p.value, best - 1e-9);
    EXPECT_LE(p.value, best + 2.0 * 9.0 / steps);
    EXPECT_LE(p.utilization[0], cap + 1e-12);
  }
}

TEST(QuantilePolicy, AcceptanceProbabilityEqualsQuantile) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const BaseProphetInstance inst =
        RandomTwoPointProphet(static_cast<int>(rng.UniformInt(1, 8)), 2, rng.Uniform(0.5, 4), 20.0,
                              false, 100 + trial);
    const QuantilePolicy p = MakeQuantilePolicy(inst);
    for (int t = 0; t < inst.n(); ++t) {
      double accept = 0.0;
      for (const auto& [v, prob] : inst.items[t].dist) accept += prob * AcceptProbability(p, t, v);
      EXPECT_NEAR(accept, p.x[t], 1e-12);
      EXPECT_NEAR(testing::TopQuantileValue(inst.items[t], p.x[t]),
                  [&] {
                    double v = 0.0;
                    for (const auto& [val, prob] : inst.items[t].dist) v += prob * val * AcceptProbability(p, t, val);
                    return v;
                  }(),
                  1e-12);
    }
    for (double u : p.utilization) EXPECT_LE(u, inst.budget / 4.0 + 1e-12);
  }
}

TEST(QuantilePolicy, RelaxationDominatesAQuarterOfOpt) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const BaseProphetInstance inst = RandomTwoPointProphet(
        static_cast<int>(rng.UniformInt(2, 8)), 1, rng.Uniform(1, 3), 10.0, false, 500 + trial);
    const double opt = ProphetOptBaseExact(inst).value;
    EXPECT_GE(MakeQuantilePolicy(inst).value, opt / 4.0 - 1e-9);
  }
}

TEST(PsiSanity, DeterministicInstanceIsExact) {
  const BaseProphetInstance inst = Make(4.0, {Dist({{7.0, 1.0}}, {1.0})});
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  const PsiReport r = PsiSanity(inst, p, 7.0, 1000, 1);
  EXPECT_EQ(r.value_mean, 7.0);
  EXPECT_EQ(r.value_se, 0.0);
  EXPECT_EQ(r.util_mean[0], 1.0);
  EXPECT_TRUE(r.utilization_ok);
  EXPECT_TRUE(r.value_ok);
  EXPECT_TRUE(r.lp_budget_ok);
}

TEST(PsiSanity, HugeBudget) {
  const BaseProphetInstance inst = RandomTwoPointProphet(5, 1, 1000.0, 10.0, false, 8);
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  const PsiReport r = PsiSanity(inst, p, ProphetOptBaseExact(inst).value, 4000, 2);
  double mean = 0.0;
  for (const ProphetItem& it : inst.items) mean += it.Mean();
  EXPECT_NEAR(r.value_mean, mean, 4.0 * r.value_se);
  EXPECT_TRUE(r.value_ok);
}

TEST(ProphetAug, PicksWhenValueReachesGamma) {
  const BaseProphetInstance inst = Make(1.0, {Dist({{5.0, 1.0}}, {1.0})});
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  ZeroAugmenter zero;
  ProphetAugOptions opt;
  opt.opt_base = 5.0;
  const ProphetRunResult r = ProphetAug(inst, p, zero, opt);
  EXPECT_EQ(r.selection.size(), 1u);
}

TEST(ProphetAug, ZeroValueWithPositiveLoadIsSkipped) {
  const BaseProphetInstance inst = Make(2.0, {Dist({{0.0, 1.0}}, {0.5})});
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  ZeroAugmenter zero;
  ProphetAugOptions opt;
  opt.opt_base = 1.0;
  EXPECT_TRUE(ProphetAug(inst, p, zero, opt).selection.empty());
}

TEST(ProphetAug, BudgetOvershootAtMostOne) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const BaseProphetInstance inst = RandomTwoPointProphet(
        12, 2, rng.Uniform(0.5, 3.0), 10.0, trial % 2 == 0, 900 + trial);
    const QuantilePolicy p = MakeQuantilePolicy(inst);
    EarlySpikeAugmenter spike(50.0);
    ThresholdChaserAugmenter chase(3.0, 0.5);
    Augmenter& aug = trial % 3 == 0 ? static_cast<Augmenter&>(spike) : chase;
    ProphetAugOptions opt;
    opt.opt_base = ProphetOptBaseExact(inst).value;
    opt.seed = trial;
    const ProphetRunResult r = ProphetAug(inst, p, aug, opt);
    EXPECT_LE(r.selection.MaxOccupation(), inst.budget + 1.0);
  }
}

TEST(ProphetAug, RaisingTheRevealedValueNeverUndoesAPick) {
  const BaseProphetInstance inst = RandomTwoPointProphet(10, 2, 2.0, 10.0, false, 4);
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  const double opt = ProphetOptBaseExact(inst).value;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    ZeroAugmenter zero;
    EarlySpikeAugmenter bump(1.0);
    ProphetAugOptions opt_s;
    opt_s.opt_base = opt;
    opt_s.seed = seed;
    const ProphetRunResult a = ProphetAug(inst, p, zero, opt_s);
    const ProphetRunResult b = ProphetAug(inst, p, bump, opt_s);
    // Step 0 sees the same learner state in both runs.
    if (!a.selection.empty() && a.selection.picks()[0].id == 0) {
      ASSERT_FALSE(b.selection.empty());
      EXPECT_EQ(b.selection.picks()[0].id, 0);
    }
  }
}

TEST(ProphetAug, MartingaleTermAveragesToZero) {
  const BaseProphetInstance inst = RandomTwoPointProphet(10, 2, 3.0, 10.0, false, 12);
  const QuantilePolicy p = MakeQuantilePolicy(inst);
  const double opt = ProphetOptBaseExact(inst).value;
  ThresholdChaserAugmenter chase(4.0, 0.25);
  double sum = 0.0, sum2 = 0.0;
  const int seeds = 20000;
  for (int s = 0; s < seeds; ++s) {
    ProphetAugOptions o;
    o.opt_base = opt;
    o.seed = s;
    const double m = ProphetAug(inst, p, chase, o).m_rhs;
    sum += m;
    sum2 += m * m;
  }
  const double mean = sum / seeds;
  const double se = std::sqrt((sum2 / seeds - mean * mean) / seeds);
  EXPECT_LE(std::abs(mean), 3.0 * se + 1e-12);
}

TEST(ProphetAug, RejectsNegativeAugmentation) {
  class Negative : public Augmenter {
   public:
    double Augment(int, double, const AugmentHistory&) override { return -1.0; }
    std::string name() const override { return "negative"; }
  } neg;
  const BaseProphetInstance inst = Make(1.0, {Dist({{1.0, 1.0}}, {0.5})});
  ProphetAugOptions opt;
  opt.opt_base = 1.0;
  EXPECT_THROW(ProphetAug(inst, MakeQuantilePolicy(inst), neg, opt), ContractViolation);
}

TEST(TruncReduction, SmallValuesLeaveHighBranchEmpty) {
  std::vector<ProphetItem> items;
  for (int t = 0; t < 50; ++t) items.push_back(Dist({{1.0, 1.0}}, {0.01}));
  const BaseProphetInstance inst = Make(1.0, items);
  const double opt = ProphetOptBaseExact(inst).value;
  EXPECT_DOUBLE_EQ(opt, 50.0);
  const TruncationPlan plan = MakeTruncationPlan(inst, opt);
  EXPECT_EQ(plan.cutoff, 1.25);
  ZeroAugmenter zero;
  int high = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const TruncReductionResult r = TruncReduction(inst, plan, zero, seed);
    if (r.high_branch) {
      ++high;
      EXPECT_TRUE(r.run.selection.empty());
    }
  }
  EXPECT_GT(high, 0);
}

TEST(TruncReduction, HighBranchTakesTheHugeItem) {
  const BaseProphetInstance inst = Make(1.0, {Dist({{100.0, 1.0}}, {0.5})});
  const TruncationPlan plan = MakeTruncationPlan(inst, 100.0);
  EXPECT_EQ(plan.cutoff, 2.5);
  EXPECT_EQ(plan.truncated.items[0].dist[0].first, 2.5);
  ZeroAugmenter zero;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const TruncReductionResult r = TruncReduction(inst, plan, zero, seed);
    if (r.high_branch) {
      ASSERT_EQ(r.run.selection.size(), 1u);
      EXPECT_EQ(r.run.selection.total_value(), 100.0);
    }
  }
}

TEST(MedianThreshold, DeterministicInstance) {
  std::vector<ProphetItem> items(4, Dist({{3.0, 1.0}}, {1.0}));
  const BaseProphetInstance inst = Make(1.0, items);
  const MedianThreshold rule = MakeMedianThreshold(inst);
  EXPECT_EQ(rule.threshold, 3.0);
  EXPECT_NEAR(std::pow(1.0 - rule.tie_prob, 4), 0.5, 1e-12);
  ZeroAugmenter zero;
  int picked = 0;
  const int seeds = 10000;
  for (uint64_t seed = 0; seed < seeds; ++seed) {
    const ProphetRunResult r = RunMedianThreshold(inst, rule, zero, seed);
    EXPECT_LE(r.selection.size(), 1u);
    if (!r.selection.empty()) {
      ++picked;
      EXPECT_EQ(r.selection.total_value(), 3.0);
    }
  }
  EXPECT_NEAR(picked / static_cast<double>(seeds), 0.5, 0.02);
}

TEST(MedianThreshold, HalfOfTheProphetWithoutAugmentation) {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const BaseProphetInstance inst = RandomTwoPointProphet(6, 1, 1.0, 10.0, true, 700 + trial);
    const double opt = ProphetOptBaseExact(inst).value;
    const MedianThreshold rule = MakeMedianThreshold(inst);
    ZeroAugmenter zero;
    double total = 0.0;
    const int seeds = 10000;
    for (uint64_t seed = 0; seed < seeds; ++seed) {
      total += RunMedianThreshold(inst, rule, zero, seed).selection.total_value();
    }
    EXPECT_GE(total / seeds, 0.45 * opt) << "trial " << trial;
  }
}

}  // namespace
}  // namespace byzopt

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

#include "byzopt/errors.h"
#include "byzopt/lp.h"
#include "byzopt/matroid.h"
#include "byzopt/offline.h"
#include "byzopt/prophet_instance.h"
#include "byzopt/rng.h"
#include "oracles.h"

namespace byzopt {
namespace {

using testing::MakeItem;

std::vector<Item> RandomItems(Rng& rng, int n, int d) {
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) {
    std::vector<double> a(static_cast<size_t>(d));
    for (double& v : a) v = rng.UniformDouble();
    items.push_back(MakeItem(i, rng.Uniform(0.0, 10.0), a));
  }
  return items;
}

TEST(LpOpt, Examples) {
  EXPECT_EQ(LpOpt({}, 1.0, 1).value, 0.0);
  EXPECT_TRUE(LpOpt({}, 1.0, 1).x.empty());

  const std::vector<Item> one = {MakeItem(0, 5.0, {0.5})};
  const LpSolution s1 = LpOpt(one, 1.0, 1);
  EXPECT_EQ(s1.x, std::vector<double>{1.0});
  EXPECT_EQ(s1.value, 5.0);

  const std::vector<Item> three = {MakeItem(0, 4, {1}), MakeItem(1, 3, {1}), MakeItem(2, 3, {1})};
  const LpSolution s3 = LpOpt(three, 2.0, 1);
  EXPECT_NEAR(s3.value, 7.0, 1e-12);
  EXPECT_NEAR(s3.x[0], 1.0, 1e-12);
  EXPECT_NEAR(s3.x[1] + s3.x[2], 1.0, 1e-12);
  EXPECT_EQ(s3.tight_rows, std::vector<int>{0});
}

TEST(LpOpt, MatchesVertexEnumeration) {
  Rng rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 9));
    const int d = static_cast<int>(rng.UniformInt(1, 3));
    const double budget = rng.Uniform(0.2, 0.5 * n + 0.2);
    const std::vector<Item> items = RandomItems(rng, n, d);
    const LpSolution lp = LpOpt(items, budget, d);
    const double oracle = testing::LpByVertexEnumeration(items, budget, d);
    EXPECT_LE(std::abs(lp.value - oracle), 1e-7 * std::max(1.0, oracle))
        << "trial " << trial;
    for (int r = 0; r < d; ++r) {
      double used = 0.0;
      for (int i = 0; i < n; ++i) used += items[i].size[r] * lp.x[i];
      EXPECT_LE(used, budget + 1e-9);
    }
  }
}

TEST(LpOpt, Monotone) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Item> items = RandomItems(rng, 30, 3);
    const double base = LpOpt(items, 4.0, 3).value;
    EXPECT_GE(LpOpt(items, 5.0, 3).value, base - 1e-9);
    items.push_back(MakeItem(30, rng.Uniform(0, 10), {rng.UniformDouble(), rng.UniformDouble(), rng.UniformDouble()}));
    EXPECT_GE(LpOpt(items, 4.0, 3).value, base - 1e-9);
  }
}

TEST(LpOpt, DegenerateInstancesTerminate) {
  std::vector<Item> items;
  for (int i = 0; i < 40; ++i) items.push_back(MakeItem(i, 1.0, {1.0, 1.0, 0.5}));
  EXPECT_NEAR(LpOpt(items, 3.0, 3).value, 3.0, 1e-12);
}

TEST(SolvePackingLp, RejectsMalformedInput) {
  PackingLp lp;
  lp.cost = {1.0};
  lp.columns = {{1.0}};
  lp.upper = {1.0};
  lp.rhs = {-1.0};
  EXPECT_THROW(SolvePackingLp(lp), ContractViolation);
  lp.rhs = {1.0};
  lp.columns = {{1.0, 2.0}};
  EXPECT_THROW(SolvePackingLp(lp), ContractViolation);
}

TEST(SecretaryBenchmarks, Examples) {
  const std::vector<Item> a = {MakeItem(0, 10, {0}), MakeItem(1, 7, {0}), MakeItem(2, 3, {0})};
  EXPECT_EQ(SecretaryBenchmarks(a).second_green_value, 7.0);
  EXPECT_EQ(SecretaryBenchmarks(a).opt_green, 10.0);
  const std::vector<Item> b = {MakeItem(0, 5, {0})};
  EXPECT_EQ(SecretaryBenchmarks(b).second_green_value, 0.0);
  const std::vector<Item> c = {MakeItem(0, 9, {0}), MakeItem(1, 9, {0})};
  EXPECT_EQ(SecretaryBenchmarks(c).second_green_value, 9.0);
}

TEST(PipBenchmarks, DropsLowestIdMaximum) {
  const Instance inst = testing::MakeInstance(
      1, 1.0, {MakeItem(0, 4, {1}), MakeItem(0, 9, {1}), MakeItem(0, 9, {1}),
               MakeItem(0, 100, {1}, Color::kRed)});
  const Benchmarks b = PipBenchmarks(inst);
  EXPECT_NEAR(b.opt_green, 9.0, 1e-12);
  EXPECT_NEAR(b.opt_green_minus_max, 9.0, 1e-12);
  EXPECT_EQ(b.second_green_value, 9.0);
  EXPECT_EQ(ArgMaxValue(inst.Greens()), 1);
}

TEST(MatroidOpt, Examples) {
  const std::vector<Item> v = {MakeItem(0, 5, {0}), MakeItem(1, 4, {0}), MakeItem(2, 1, {0})};
  EXPECT_EQ(MatroidOpt(v, UniformMatroid(2), false), 9.0);
  EXPECT_EQ(MatroidOpt(v, UniformMatroid(0), false), 0.0);
  EXPECT_EQ(MatroidOpt(v, UniformMatroid(2), true), 5.0);
  const std::vector<Item> p = {MakeItem(0, 5, {0}), MakeItem(1, 4, {0}), MakeItem(2, 3, {0})};
  const PartitionMatroid pm({{0, 1}, {2}}, {1, 1});
  EXPECT_EQ(MatroidOpt(p, pm, false), 8.0);
  EXPECT_EQ(testing::BruteForceMatroidOpt(p, pm), 8.0);
}

class LyingMatroid : public Matroid {
 public:
  int rank() const override { return 2; }
  bool Independent(std::span<const int> ids) const override { return ids.size() < 2; }
  bool CanAdd(std::span<const int>, int) const override { return true; }
  std::string Describe() const override { return "liar"; }
};

TEST(MatroidOpt, InconsistentOracleIsAContractViolation) {
  const std::vector<Item> v = {MakeItem(0, 5, {0}), MakeItem(1, 4, {0})};
  EXPECT_THROW(MatroidOpt(v, LyingMatroid(), false), ContractViolation);
}

TEST(RoundIntegral, Examples) {
  const std::vector<Item> items = {MakeItem(0, 1, {0.5}), MakeItem(1, 2, {0.5}), MakeItem(2, 3, {0.5})};
  const std::vector<double> zero = {0, 0, 0};
  EXPECT_TRUE(RoundIntegral(zero, items, 1.0, 1, 0.1, 5).empty());
  const std::vector<double> integral = {1, 0, 1};
  const Selection s = RoundIntegral(integral, items, 1.0, 1, 0.0, 5);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.Contains(0));
  EXPECT_TRUE(s.Contains(2));
  const std::vector<double> infeasible = {1, 1, 1};
  EXPECT_THROW(RoundIntegral(infeasible, items, 1.0, 1, 0.0, 5), ContractViolation);
}

TEST(RoundIntegral, FeasibleWithHighProbabilityAndUnbiased) {
  Rng rng(4);
  const std::vector<Item> items = RandomItems(rng, 600, 3);
  const LpSolution lp = LpOpt(items, 100.0, 3);
  const double eps = 0.2;
  int feasible = 0;
  double sum = 0.0, sum2 = 0.0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) {
    const Selection sel = RoundIntegral(lp.x, items, 100.0, 3, eps, 1000 + s);
    feasible += sel.MaxOccupation() <= 100.0 ? 1 : 0;
    sum += sel.total_value();
    sum2 += sel.total_value() * sel.total_value();
  }
  EXPECT_GE(feasible / static_cast<double>(seeds), 0.99);
  const double mean = sum / seeds;
  const double se = std::sqrt((sum2 / seeds - mean * mean) / seeds);
  EXPECT_NEAR(mean, (1.0 - eps) * lp.value, 3.0 * se);
}

TEST(IntegralPackingOpt, SmallKnapsack) {
  const std::vector<Item> items = {MakeItem(0, 6, {0.6}), MakeItem(1, 5, {0.5}), MakeItem(2, 5, {0.5})};
  EXPECT_EQ(IntegralPackingOpt(items, 1.0, 1).value, 10.0);
  EXPECT_FALSE(IntegralPackingOpt(items, 1.0, 1).lp_surrogate);
}

TEST(IntegralPackingOpt, LargeInstancesFallBackToLp) {
  Rng rng(3);
  const std::vector<Item> items = RandomItems(rng, kMaxExactItems + 1, 2);
  const IntegralOpt opt = IntegralPackingOpt(items, 2.0, 2);
  EXPECT_TRUE(opt.lp_surrogate);
  EXPECT_EQ(opt.value, LpOpt(items, 2.0, 2).value);
}

ProphetItem TwoPoint(double lo, double hi, double p_hi, double size) {
  ProphetItem it;
  it.size = {size};
  it.dist = {{lo, 1.0 - p_hi}, {hi, p_hi}};
  return it;
}

TEST(ProphetOptBase, Examples) {
  BaseProphetInstance det;
  det.budget = 1.0;
  det.items = {TwoPoint(3, 3, 0.5, 0.6), TwoPoint(4, 4, 0.5, 0.6)};
  for (ProphetItem& it : det.items) it.dist.resize(1, {0.0, 0.0});
  for (ProphetItem& it : det.items) it.dist[0].second = 1.0;
  EXPECT_EQ(ProphetOptBaseExact(det).value, 4.0);

  BaseProphetInstance coin;
  coin.budget = 1.0;
  coin.items = {TwoPoint(0, 10, 0.5, 1.0)};
  EXPECT_DOUBLE_EQ(ProphetOptBaseExact(coin).value, 5.0);
}

TEST(ProphetOptBase, MatchesManualEnumeration) {
  BaseProphetInstance inst;
  inst.budget = 2.0;
  inst.items = {TwoPoint(1, 5, 0.3, 1.0), TwoPoint(2, 3, 0.6, 1.0), TwoPoint(0, 8, 0.2, 1.0)};
  double expected = 0.0;
  for (int mask = 0; mask < 8; ++mask) {
    double p = 1.0;
    std::vector<double> v;
    for (int t = 0; t < 3; ++t) {
      const auto& [lo, plo] = inst.items[t].dist[0];
      const auto& [hi, phi] = inst.items[t].dist[1];
      const bool high = mask & (1 << t);
      p *= high ? phi : plo;
      v.push_back(high ? hi : lo);
    }
    std::sort(v.rbegin(), v.rend());
    expected += p * (v[0] + v[1]);
  }
  const ProphetOptResult r = ProphetOptBaseExact(inst);
  EXPECT_NEAR(r.value, expected, 1e-12);
  EXPECT_EQ(r.scenarios, 8);
  EXPECT_EQ(r.std_error, 0.0);
  const ProphetOptResult mc = ProphetOptBaseMonteCarlo(inst, 20000, 9);
  EXPECT_NEAR(mc.value, expected, 4.0 * mc.std_error);
}

TEST(ProphetOptBase, SupportExplosionIsASizeError) {
  BaseProphetInstance inst;
  inst.budget = 1.0;
  for (int t = 0; t < 21; ++t) inst.items.push_back(TwoPoint(0, 1, 0.5, 0.1));
  EXPECT_THROW(ProphetOptBaseExact(inst), SizeError);
}

}  // namespace
}  // namespace byzopt

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

#include <algorithm>
#include <cmath>
#include <vector>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"
#include "byzopt/multiscale.h"
#include "byzopt/olo.h"
#include "byzopt/rng.h"

namespace byzopt {
namespace {

TEST(Olo, OneDimensionalSimplexIsAPoint) {
  OloLearner olo(1, 0.5, false);
  const std::vector<double> g = {-0.7};
  for (int t = 0; t < 10; ++t) {
    EXPECT_EQ(olo.Decide().weights, std::vector<double>{1.0});
    olo.Observe(g);
  }
}

TEST(Olo, SymmetricStart) {
  OloLearner olo(2, 0.5, false);
  EXPECT_EQ(olo.Decide().weights, (std::vector<double>{0.5, 0.5}));
}

TEST(Olo, FullDimensionalRetreatsToZero) {
  OloLearner olo(2, 0.5, true);
  const std::vector<double> g = {-1.0, -0.5};
  for (int t = 0; t < 200; ++t) olo.Observe(g);
  EXPECT_LT(olo.Decide().Sum(), 0.1);
  EXPECT_TRUE(olo.Decide().full_dimensional);
}

TEST(Olo, ZeroRewardLeavesStateAlone) {
  OloLearner olo(3, 0.25, false);
  olo.Observe(std::vector<double>{0.3, -0.2, 0.1});
  const std::vector<double> before = olo.Decide().weights;
  olo.Observe(std::vector<double>{0.0, 0.0, 0.0});
  EXPECT_EQ(olo.Decide().weights, before);
}

TEST(Olo, RepeatedRewardConcentrates) {
  OloLearner olo(2, 0.5, false);
  for (int t = 0; t < 100; ++t) olo.Observe(std::vector<double>{1.0, 0.0});
  EXPECT_GE(olo.Decide().weights[0], 0.9);
}

TEST(Olo, RejectsOutOfRangeRewards) {
  OloLearner olo(2, 0.5, false);
  EXPECT_THROW(olo.Observe(std::vector<double>{1.5, 0.0}), ContractViolation);
  EXPECT_THROW(olo.Observe(std::vector<double>{0.0}), ContractViolation);
  EXPECT_THROW(OloLearner(2, 0.6, false), ContractViolation);
}

// Regret against every vertex of the played set (unit vectors, plus the
// origin for the full-dimensional simplex).
void CheckOloRegret(int d, double eps, bool full, int T, uint64_t seed) {
  Rng rng(seed);
  OloLearner olo(d, eps, full);
  std::vector<double> cumulative(static_cast<size_t>(d), 0.0);
  std::vector<double> abs_cumulative(static_cast<size_t>(d), 0.0);
  double earned = 0.0;
  const int mode = static_cast<int>(rng.UniformInt(0, 2));
  std::vector<double> g(static_cast<size_t>(d));
  for (int t = 0; t < T; ++t) {
    const std::vector<double> lambda = olo.Decide().weights;
    for (int i = 0; i < d; ++i) {
      double v = rng.Uniform(-1.0, 1.0);
      if (mode == 1) {
        // Reward whatever the learner currently plays least.
        const int low = static_cast<int>(
            std::min_element(lambda.begin(), lambda.end()) - lambda.begin());
        v = i == low ? 1.0 : -1.0;
      } else if (mode == 2 && (t / 50) % 2 == 1) {
        v = i == 0 ? 1.0 : -0.2;
      }
      g[static_cast<size_t>(i)] = v;
    }
    earned += kernels::Dot(lambda, g);
    for (int i = 0; i < d; ++i) {
      cumulative[static_cast<size_t>(i)] += g[static_cast<size_t>(i)];
      abs_cumulative[static_cast<size_t>(i)] += std::abs(g[static_cast<size_t>(i)]);
    }
    olo.Observe(g);
  }
  const double log_experts = std::log(static_cast<double>(d + (full ? 1 : 0)));
  for (int i = 0; i < d; ++i) {
    const double regret = cumulative[static_cast<size_t>(i)] - earned;
    EXPECT_LE(regret, eps * abs_cumulative[static_cast<size_t>(i)] +
                          std::max(log_experts, 1e-12) / eps + 1e-9)
        << "vertex " << i << " d=" << d << " eps=" << eps << " seed=" << seed;
  }
  if (full) EXPECT_LE(0.0 - earned, log_experts / eps + 1e-9);
}

TEST(Olo, RegretAgainstEveryVertex) {
  Rng pick(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = static_cast<int>(pick.UniformInt(1, 16));
    const int T = static_cast<int>(pick.UniformInt(1, 500));
    for (double eps : {0.5, 0.1}) {
      CheckOloRegret(d, eps, trial % 2 == 1, T, 1000 + trial);
    }
  }
}

TEST(Multiscale, SingleExpert) {
  MultiscaleLearner ms({3.0}, 0.5);
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    const MultiscaleDecision dec = ms.Decide(rng);
    EXPECT_EQ(dec.index, 0);
    EXPECT_EQ(dec.distribution, std::vector<double>{1.0});
    ms.Observe(std::vector<double>{1.5});
  }
}

TEST(Multiscale, EqualScalesStayUniform) {
  MultiscaleLearner ms({2.0, 2.0, 2.0}, 0.3);
  ms.Observe(std::vector<double>{1.0, 1.0, 1.0});
  ms.Observe(std::vector<double>{2.0, 2.0, 2.0});
  for (double p : ms.Distribution()) EXPECT_NEAR(p, 1.0 / 3.0, 1e-15);
}

TEST(Multiscale, ZeroRewardLeavesStateAlone) {
  MultiscaleLearner ms({1.0, 10.0}, 0.5);
  ms.Observe(std::vector<double>{0.5, 3.0});
  const std::vector<double> before = ms.Distribution();
  ms.Observe(std::vector<double>{0.0, 0.0});
  EXPECT_EQ(ms.Distribution(), before);
}

TEST(Multiscale, RejectsOutOfRangeRewards) {
  MultiscaleLearner ms({1.0, 10.0}, 0.5);
  EXPECT_THROW(ms.Observe(std::vector<double>{1.5, 0.0}), ContractViolation);
  EXPECT_THROW(ms.Observe(std::vector<double>{-0.1, 0.0}), ContractViolation);
}

TEST(Multiscale, DecisionsReproduceUnderSeed) {
  MultiscaleLearner ms({1.0, 4.0, 16.0}, 0.5);
  Rng a(77), b(77);
  for (int t = 0; t < 20; ++t) EXPECT_EQ(ms.Decide(a).index, ms.Decide(b).index);
}

double MultiscaleKappa(const std::vector<double>& c, double eps,
                       const std::vector<std::vector<double>>& rewards) {
  MultiscaleLearner ms(c, eps);
  std::vector<double> totals(c.size(), 0.0);
  double earned = 0.0;
  for (const std::vector<double>& r : rewards) {
    earned += kernels::Dot(ms.Distribution(), r);
    for (size_t i = 0; i < c.size(); ++i) totals[i] += r[i];
    ms.Observe(r);
  }
  const double log_m = std::log(std::max<double>(2.0, static_cast<double>(c.size())));
  double kappa = 0.0;
  for (size_t i = 0; i < c.size(); ++i) {
    const double excess = totals[i] - earned - eps * totals[i];
    kappa = std::max(kappa, excess * eps / (c[i] * log_m));
  }
  return kappa;
}

TEST(Multiscale, TwoScalesConstantReward) {
  std::vector<std::vector<double>> rewards(300, std::vector<double>{1.0, 0.0});
  EXPECT_LE(MultiscaleKappa({1.0, 100.0}, 0.5, rewards), kMultiscaleKappa);
}

TEST(Multiscale, RandomRewardsRespectKappa) {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng.UniformInt(2, 32));
    std::vector<double> c(static_cast<size_t>(m));
    for (double& ci : c) ci = std::pow(10.0, rng.Uniform(0.0, 3.0));
    const double eps = rng.Uniform(0.05, 1.0);
    const int T = static_cast<int>(rng.UniformInt(10, 500));
    std::vector<std::vector<double>> rewards;
    for (int t = 0; t < T; ++t) {
      std::vector<double> r(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) {
        r[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * rng.UniformDouble();
      }
      rewards.push_back(r);
    }
    EXPECT_LE(MultiscaleKappa(c, eps, rewards), kMultiscaleKappa) << "trial " << trial;
  }
}

}  // namespace
}  // namespace byzopt

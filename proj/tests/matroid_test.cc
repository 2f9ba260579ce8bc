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

#include <vector>

#include "byzopt/errors.h"
#include "byzopt/matroid.h"
#include "byzopt/offline.h"
#include "byzopt/rng.h"
#include "oracles.h"

namespace byzopt {
namespace {

TEST(UniformMatroid, Basics) {
  const UniformMatroid m(2);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_TRUE(m.Independent(std::vector<int>{}));
  EXPECT_TRUE(m.Independent(std::vector<int>{4, 7}));
  EXPECT_FALSE(m.Independent(std::vector<int>{1, 4, 7}));
  EXPECT_TRUE(m.CanAdd(std::vector<int>{4}, 1));
  EXPECT_FALSE(m.CanAdd(std::vector<int>{4, 7}, 1));
  EXPECT_THROW(UniformMatroid(-1), ConfigError);
}

TEST(PartitionMatroid, CapsAndLoops) {
  const PartitionMatroid m({{0, 1, 2}, {3, 4}}, {2, 1});
  EXPECT_EQ(m.rank(), 3);
  EXPECT_TRUE(m.Independent(std::vector<int>{0, 2, 4}));
  EXPECT_FALSE(m.Independent(std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(m.Independent(std::vector<int>{3, 4}));
  EXPECT_FALSE(m.Independent(std::vector<int>{9}));
  EXPECT_FALSE(m.CanAdd(std::vector<int>{3}, 4));
  EXPECT_TRUE(m.CanAdd(std::vector<int>{3}, 0));
}

TEST(ExplicitBasisMatroid, SubsetsOfBases) {
  const ExplicitBasisMatroid m({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(m.rank(), 2);
  EXPECT_TRUE(m.Independent(std::vector<int>{2, 0}));
  EXPECT_FALSE(m.Independent(std::vector<int>{0, 1}));
}

TEST(CheckMatroidAxioms, ShippedMatroidsPass) {
  Rng rng(1);
  EXPECT_EQ(CheckMatroidAxioms(UniformMatroid(3), 8, rng, 200), "");
  EXPECT_EQ(CheckMatroidAxioms(PartitionMatroid({{0, 1, 2}, {3, 4}, {5}}, {2, 1, 1}), 7, rng, 200), "");
  EXPECT_EQ(CheckMatroidAxioms(ExplicitBasisMatroid({{0, 2}, {0, 3}, {1, 2}, {1, 3}}), 4, rng, 200), "");
}

TEST(CheckMatroidAxioms, DetectsBrokenExchange) {
  Rng rng(2);
  EXPECT_NE(CheckMatroidAxioms(ExplicitBasisMatroid({{0, 1}, {2, 3}}), 4, rng, 500), "");
}

TEST(MatroidOpt, GreedyMatchesBruteForce) {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 10));
    std::vector<Item> items;
    for (int i = 0; i < n; ++i) items.push_back(testing::MakeItem(i, rng.Uniform(0, 5), {0.0}));
    std::unique_ptr<Matroid> m;
    if (trial % 2 == 0) {
      m = std::make_unique<UniformMatroid>(static_cast<int>(rng.UniformInt(0, n)));
    } else {
      const int blocks = static_cast<int>(rng.UniformInt(1, 3));
      std::vector<std::vector<int>> ids(static_cast<size_t>(blocks));
      std::vector<int> caps;
      for (int i = 0; i < n; ++i) {
        ids[static_cast<size_t>(rng.UniformInt(0, blocks - 1))].push_back(i);
      }
      for (int b = 0; b < blocks; ++b) caps.push_back(static_cast<int>(rng.UniformInt(0, 3)));
      m = std::make_unique<PartitionMatroid>(ids, caps);
    }
    EXPECT_NEAR(MatroidOpt(items, *m, false), testing::BruteForceMatroidOpt(items, *m), 1e-12)
        << m->Describe();
  }
}

}  // namespace
}  // namespace byzopt

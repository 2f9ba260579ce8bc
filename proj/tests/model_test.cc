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
#include "byzopt/model.h"
#include "byzopt/rng.h"
#include "oracles.h"

namespace byzopt {
namespace {

using testing::MakeInstance;
using testing::MakeItem;

TEST(MakeSchedule, OnlyRedsAreNotRandom) {
  const Instance inst = MakeInstance(
      1, 1.0, {MakeItem(0, 1.0, {0.1}, Color::kRed), MakeItem(0, 2.0, {0.1}, Color::kRed)});
  const std::vector<double> times = {0.1, 0.9};
  const ArrivalSchedule s = MakeSchedule(inst, times, 99);
  ASSERT_EQ(s.arrivals.size(), 2u);
  EXPECT_EQ(s.arrivals[0], (Arrival{0.1, 0}));
  EXPECT_EQ(s.arrivals[1], (Arrival{0.9, 1}));
}

TEST(MakeSchedule, SingleGreenUsesSeedDraw) {
  const Instance inst = MakeInstance(1, 1.0, {MakeItem(0, 1.0, {0.5})});
  const ArrivalSchedule s = MakeSchedule(inst, {}, 1234);
  ASSERT_EQ(s.arrivals.size(), 1u);
  Rng rng(1234);
  EXPECT_EQ(s.arrivals[0].time, rng.UniformDouble());
  EXPECT_EQ(s, MakeSchedule(inst, {}, 1234));
}

TEST(MakeSchedule, QuarterFractionIsAboutAQuarter) {
  std::vector<Item> items;
  for (int i = 0; i < 10000; ++i) items.push_back(MakeItem(i, 1.0, {0.1}));
  const Instance inst = MakeInstance(1, 1.0, items);
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const ArrivalSchedule s = MakeSchedule(inst, {}, seed);
    int early = 0;
    for (const Arrival& a : s.arrivals) early += a.time <= 0.25 ? 1 : 0;
    EXPECT_NEAR(early / 10000.0, 0.25, 0.02);
  }
}

TEST(MakeSchedule, RejectsWrongRedCount) {
  const Instance inst = MakeInstance(1, 1.0, {MakeItem(0, 1.0, {0.1}, Color::kRed)});
  EXPECT_THROW(MakeSchedule(inst, {}, 1), ConfigError);
  const std::vector<double> bad = {1.5};
  EXPECT_THROW(MakeSchedule(inst, bad, 1), ConfigError);
}

TEST(MakeSchedule, RedWinsTimeTiesAndDuplicatesKeepInputOrder) {
  const Instance inst = MakeInstance(
      1, 1.0, {MakeItem(0, 1.0, {0.1}, Color::kRed), MakeItem(0, 2.0, {0.1}, Color::kRed)});
  const std::vector<double> times = {0.5, 0.5};
  const ArrivalSchedule s = MakeSchedule(inst, times, 3);
  EXPECT_EQ(s.arrivals[0].id, 0);
  EXPECT_EQ(s.arrivals[1].id, 1);
}

TEST(ValidateSchedule, CatchesMalformedSchedules) {
  const Instance inst = MakeInstance(1, 1.0, {MakeItem(0, 1.0, {0.1}), MakeItem(0, 1.0, {0.1})});
  EXPECT_NO_THROW(ValidateSchedule(inst, testing::Scripted({{0.1, 0}, {0.2, 1}})));
  EXPECT_THROW(ValidateSchedule(inst, testing::Scripted({{0.2, 0}, {0.1, 1}})), ConfigError);
  EXPECT_THROW(ValidateSchedule(inst, testing::Scripted({{0.1, 0}, {0.2, 0}})), ConfigError);
  EXPECT_THROW(ValidateSchedule(inst, testing::Scripted({{0.1, 0}})), ConfigError);
  EXPECT_THROW(ValidateSchedule(inst, testing::Scripted({{0.1, 0}, {0.2, 7}})), ConfigError);
}

TEST(IntervalIndex, Examples) {
  EXPECT_EQ(IntervalIndex(0.10, 4, IntervalLayout::kSecretaryQuarters), 0);
  EXPECT_EQ(IntervalIndex(0.30, 2, IntervalLayout::kSecretaryQuarters), 1);
  EXPECT_EQ(IntervalIndex(0.5, 4, IntervalLayout::kPipUniform), 2);
}

TEST(IntervalIndex, Boundaries) {
  EXPECT_EQ(IntervalIndex(0.0, 4, IntervalLayout::kPipUniform), 0);
  EXPECT_EQ(IntervalIndex(0.25, 4, IntervalLayout::kPipUniform), 1);
  EXPECT_EQ(IntervalIndex(1.0, 4, IntervalLayout::kPipUniform), 3);
  EXPECT_EQ(IntervalIndex(0.25, 2, IntervalLayout::kSecretaryQuarters), 0);
  EXPECT_EQ(IntervalIndex(0.5, 2, IntervalLayout::kSecretaryQuarters), 1);
  EXPECT_EQ(IntervalIndex(0.75, 2, IntervalLayout::kSecretaryQuarters), 2);
  EXPECT_EQ(IntervalIndex(0.76, 2, IntervalLayout::kSecretaryQuarters),
            AfterIntervals(2));
  EXPECT_THROW(IntervalIndex(0.5, 0, IntervalLayout::kPipUniform), ContractViolation);
}

TEST(Selection, RecomputeMatchesIncremental) {
  Rng rng(5);
  std::vector<Item> items;
  for (int i = 0; i < 50; ++i) {
    items.push_back(MakeItem(i, rng.Uniform(0, 10), {rng.UniformDouble(), rng.UniformDouble()}));
  }
  const Instance inst = MakeInstance(2, 5.0, items);
  Selection sel(2);
  for (int i = 0; i < 50; i += 3) sel.Add(inst.item(i), i % 2 ? 1.0 : 0.5);
  const Selection again = Selection::Recompute(inst, sel.picks());
  EXPECT_EQ(again.total_value(), sel.total_value());
  EXPECT_EQ(again.occupation(), sel.occupation());
  EXPECT_TRUE(sel.Contains(3));
  EXPECT_FALSE(sel.Contains(4));
}

TEST(Instance, GreenAndRedCounts) {
  const Instance inst = MakeInstance(
      1, 1.0, {MakeItem(0, 1.0, {0.1}), MakeItem(0, 2.0, {0.1}, Color::kRed), MakeItem(0, 3.0, {0.1})});
  EXPECT_EQ(inst.GreenCount(), 2);
  EXPECT_EQ(inst.RedCount(), 1);
  EXPECT_EQ(inst.Greens().size(), 2u);
}

}  // namespace
}  // namespace byzopt

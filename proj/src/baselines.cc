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


#include "byzopt/baselines.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "byzopt/errors.h"
#include "byzopt/rng.h"

namespace byzopt {

std::optional<int> ClassicSecretary(const Instance& instance,
                                    const ArrivalSchedule& schedule) {
  const size_t n = schedule.arrivals.size();
  const size_t sample =
      static_cast<size_t>(std::ceil(static_cast<double>(n) / std::numbers::e));
  double best = kNegInf;
  for (size_t s = 0; s < std::min(sample, n); ++s) {
    best = std::max(best, instance.item(schedule.arrivals[s].id).value);
  }
  for (size_t s = sample; s < n; ++s) {
    const Item& item = instance.item(schedule.arrivals[s].id);
    if (item.value > best) return item.id;
  }
  return std::nullopt;
}

namespace {

double ProbBelow(const ProphetItem& item, double v, bool inclusive) {
  double p = 0.0;
  for (const auto& [value, prob] : item.dist) {
    if (value < v || (inclusive && value == v)) p += prob;
  }
  return p;
}

}  // namespace

MedianThreshold MakeMedianThreshold(const BaseProphetInstance& instance) {
  instance.Validate();
  if (instance.items.empty()) return {};
  std::vector<double> support;
  for (const ProphetItem& item : instance.items) {
    for (const auto& [v, p] : item.dist) {
      if (p > 0.0) support.push_back(v);
    }
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  MedianThreshold rule;
  rule.threshold = support.back();
  for (double v : support) {
    double cdf = 1.0;
    for (const ProphetItem& item : instance.items) cdf *= ProbBelow(item, v, true);
    if (cdf >= 0.5) {
      rule.threshold = v;
      break;
    }
  }
  // Probability that nothing is accepted, as a function of the tie
  // probability; decreasing from F(tau) >= 1/2 to F(tau-) < 1/2.
  const auto survive = [&](double rho) {
    double prod = 1.0;
    for (const ProphetItem& item : instance.items) {
      const double below = ProbBelow(item, rule.threshold, false);
      const double at = ProbBelow(item, rule.threshold, true) - below;
      prod *= below + at * (1.0 - rho);
    }
    return prod;
  };
  double lo = 0.0;
  double hi = 1.0;
  if (survive(1.0) >= 0.5) {
    rule.tie_prob = 1.0;
    return rule;
  }
  for (int iter = 0; iter < 100; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (survive(mid) > 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  rule.tie_prob = 0.5 * (lo + hi);
  return rule;
}

ProphetRunResult RunMedianThreshold(const BaseProphetInstance& instance,
                                    const MedianThreshold& rule,
                                    Augmenter& augmenter, uint64_t seed) {
  Rng root(seed);
  Rng values = root.Fork(1);
  Rng ties = root.Fork(2);
  AugmentHistory history;
  augmenter.Reset();
  ProphetRunResult out;
  out.selection = Selection(instance.d);
  for (int t = 0; t < instance.n(); ++t) {
    const ProphetItem& item = instance.items[static_cast<size_t>(t)];
    const double v = SampleValue(item, values);
    const double r = augmenter.Augment(t, v, history);
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw ContractViolation("augmenter returned an invalid augmentation");
    }
    const double c = v + r;
    const double u = ties.UniformDouble();
    const bool pick = c > rule.threshold ||
                      (c == rule.threshold && u < rule.tie_prob);
    if (pick) {
      Item chosen;
      chosen.id = t;
      chosen.value = c;
      chosen.size = item.size;
      out.selection.Add(chosen);
    }
    out.base_values.push_back(v);
    out.revealed.push_back(c);
    history.base_values.push_back(v);
    history.revealed.push_back(c);
    history.picked.push_back(pick ? 1 : 0);
    out.steps = t + 1;
    if (pick) {
      ++history.picks;
      out.stopped = true;
      break;
    }
  }
  return out;
}

}  // namespace byzopt

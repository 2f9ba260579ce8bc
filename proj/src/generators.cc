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


#include "byzopt/generators.h"

#include <algorithm>
#include <cmath>

#include "byzopt/errors.h"
#include "byzopt/lp.h"

namespace byzopt {

std::vector<double> DrawSize(const GreenSpec& spec, Rng& rng) {
  std::vector<double> size(static_cast<size_t>(spec.d));
  for (double& a : size) {
    a = spec.size_dist == SizeDist::kUnit ? 1.0
                                          : rng.Uniform(spec.size_lo, spec.size_hi);
  }
  return size;
}

bool SmoothPredicate(std::span<const Item> items, double budget, int d) {
  const double opt = LpOpt(items, budget, d).value;
  const double cut = opt / budget;
  double heavy = 0.0;
  for (const Item& it : items) {
    if (it.value > cut) heavy += it.value;
  }
  return heavy <= opt / 2.0;
}

std::vector<Item> GenGreen(const GreenSpec& spec) {
  if (spec.n_green < 0 || spec.d < 1) {
    throw ConfigError("gen_green: counts must be positive");
  }
  if (!(spec.size_lo >= 0.0 && spec.size_lo <= spec.size_hi &&
        spec.size_hi <= 1.0)) {
    throw ConfigError("gen_green: size range must lie within [0, 1]");
  }
  Rng rng(spec.seed);
  std::vector<Item> items(static_cast<size_t>(spec.n_green));
  for (int i = 0; i < spec.n_green; ++i) {
    Item& it = items[static_cast<size_t>(i)];
    it.id = i;
    it.color = Color::kGreen;
    it.value = spec.value_dist == ValueDist::kUniform
                   ? rng.Uniform(0.0, spec.value_scale)
                   : rng.Exponential(spec.value_scale);
    it.size = DrawSize(spec, rng);
  }
  if (!spec.smooth || items.empty()) return items;
  for (int round = 0; round <= spec.max_retries; ++round) {
    if (SmoothPredicate(items, spec.budget, spec.d)) return items;
    const double cut = LpOpt(items, spec.budget, spec.d).value / spec.budget;
    for (Item& it : items) it.value = std::min(it.value, cut);
  }
  throw ConfigError("gen_green: could not make the instance smooth after " +
                    std::to_string(spec.max_retries) + " rounds");
}

RedStrategy ParseRedStrategy(const std::string& name) {
  if (name == "none") return RedStrategy::kNone;
  if (name == "single_big_early") return RedStrategy::kSingleBigEarly;
  if (name == "decreasing_spikes") return RedStrategy::kDecreasingSpikes;
  if (name == "uniform_noise") return RedStrategy::kUniformNoise;
  throw ConfigError("unknown adversary \"" + name + "\"");
}

std::string RedStrategyName(RedStrategy strategy) {
  switch (strategy) {
    case RedStrategy::kNone: return "none";
    case RedStrategy::kSingleBigEarly: return "single_big_early";
    case RedStrategy::kDecreasingSpikes: return "decreasing_spikes";
    case RedStrategy::kUniformNoise: return "uniform_noise";
  }
  return "none";
}

RedBatch GenReds(const RedSpec& spec, const GreenSpec& size_spec, int n,
                 double c_star) {
  Rng rng(spec.seed);
  RedBatch batch;
  const auto add = [&](double value, double time) {
    Item it;
    it.value = value;
    it.color = Color::kRed;
    it.size = DrawSize(size_spec, rng);
    batch.items.push_back(std::move(it));
    batch.times.push_back(time);
  };
  switch (spec.strategy) {
    case RedStrategy::kNone:
      break;
    case RedStrategy::kSingleBigEarly:
      add(static_cast<double>(n) * c_star, 1e-6);
      break;
    case RedStrategy::kDecreasingSpikes: {
      const int K = spec.spikes;
      if (K < 1) throw ConfigError("decreasing_spikes: need K >= 1");
      for (int i = 1; i <= K; ++i) {
        const double value = std::ldexp(c_star, K - i);
        const double time =
            spec.layout == IntervalLayout::kSecretaryQuarters
                ? 0.25 + (i - 0.01) / (2.0 * K)
                : (i - 0.01) / K;
        add(value, time);
      }
      break;
    }
    case RedStrategy::kUniformNoise:
      if (spec.count < 0) throw ConfigError("uniform_noise: negative count");
      for (int j = 0; j < spec.count; ++j) {
        add(rng.Uniform(0.0, 2.0 * c_star), (j + 0.5) / spec.count);
      }
      break;
  }
  return batch;
}

Instance AssembleInstance(int d, double budget, std::vector<Item> greens,
                          std::vector<Item> reds) {
  Instance inst;
  inst.d = d;
  inst.budget = budget;
  inst.items = std::move(greens);
  for (Item& r : reds) inst.items.push_back(std::move(r));
  for (size_t i = 0; i < inst.items.size(); ++i) {
    inst.items[i].id = static_cast<int>(i);
  }
  inst.Validate();
  return inst;
}

BaseProphetInstance RandomTwoPointProphet(int n, int d, double budget,
                                          double spread, bool unit_sizes,
                                          uint64_t seed) {
  if (n < 1 || d < 1) throw ConfigError("two-point prophet: n, d must be >= 1");
  Rng rng(seed);
  BaseProphetInstance inst;
  inst.d = d;
  inst.budget = budget;
  for (int t = 0; t < n; ++t) {
    ProphetItem item;
    item.size.resize(static_cast<size_t>(d));
    for (double& a : item.size) a = unit_sizes ? 1.0 : rng.UniformDouble();
    const double high = rng.Uniform(1.0, spread);
    const double low = rng.UniformDouble();
    const double p = rng.Uniform(0.05, 0.5);
    item.dist = {{low, 1.0 - p}, {high, p}};
    inst.items.push_back(std::move(item));
  }
  inst.Validate();
  return inst;
}

}  // namespace byzopt

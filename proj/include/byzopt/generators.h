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


// Instance generators: green items and adversarial red placements.

#ifndef BYZOPT_GENERATORS_H_
#define BYZOPT_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "byzopt/model.h"
#include "byzopt/prophet_instance.h"
#include "byzopt/rng.h"

namespace byzopt {

enum class ValueDist { kUniform, kExponential };
enum class SizeDist { kUniform, kUnit };

struct GreenSpec {
  int n_green = 0;
  int d = 1;
  double budget = 1.0;
  ValueDist value_dist = ValueDist::kUniform;
  double value_scale = 1.0;  // U[0, scale] or exponential with this mean
  SizeDist size_dist = SizeDist::kUniform;
  double size_lo = 0.0;      // kUniform sizes are U[size_lo, size_hi]
  double size_hi = 1.0;
  bool smooth = false;
  int max_retries = 64;
  uint64_t seed = 0;
};

// Sizes are drawn the same way for greens and reds.
std::vector<double> DrawSize(const GreenSpec& spec, Rng& rng);

// Items with ids 0..n_green-1. With `smooth`, values above OPT/B are clipped
// to OPT/B and OPT is recomputed until SmoothPredicate holds; ConfigError if
// it still fails after max_retries rounds.
std::vector<Item> GenGreen(const GreenSpec& spec);

// Total value of items worth more than OPT/B is at most OPT/2, with OPT the
// LP optimum of `items`.
bool SmoothPredicate(std::span<const Item> items, double budget, int d);

enum class RedStrategy { kNone, kSingleBigEarly, kDecreasingSpikes,
                         kUniformNoise };

RedStrategy ParseRedStrategy(const std::string& name);
std::string RedStrategyName(RedStrategy strategy);

struct RedSpec {
  RedStrategy strategy = RedStrategy::kNone;
  int spikes = 4;  // decreasing spikes: one per interval
  IntervalLayout layout = IntervalLayout::kSecretaryQuarters;
  int count = 0;   // uniform noise
  uint64_t seed = 0;
};

struct RedBatch {
  std::vector<Item> items;  // color red, ids unset
  std::vector<double> times;
};

// c_star is the benchmark the adversary scales against; n is the total item
// count used by the single early spike (value n * c_star at time 1e-6).
// Decreasing spikes put value c_star * 2^(K-i) just before the end of
// interval i (i = 1..K for the secretary layout, 0..K-1 for the uniform
// one). Uniform noise places `count` reds at (j + 1/2)/count with values
// U[0, 2 c_star].
RedBatch GenReds(const RedSpec& spec, const GreenSpec& size_spec, int n,
                 double c_star);

// Greens first, then reds; ids renumbered to positions.
Instance AssembleInstance(int d, double budget, std::vector<Item> greens,
                          std::vector<Item> reds);

// n items with two-point values: V = high w.p. p_high, else low. high is
// drawn from U[1, spread], low from U[0, 1) and p_high from
// U[0.05, 0.5]. Sizes are U[0,1]^d, or all ones when unit_sizes.
BaseProphetInstance RandomTwoPointProphet(int n, int d, double budget,
                                          double spread, bool unit_sizes,
                                          uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_GENERATORS_H_

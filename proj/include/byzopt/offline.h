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


// Offline benchmarks: LP and integral packing optima, secretary and matroid
// benchmarks, randomized rounding.

#ifndef BYZOPT_OFFLINE_H_
#define BYZOPT_OFFLINE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "byzopt/matroid.h"
#include "byzopt/model.h"

namespace byzopt {

// Single-item benchmarks: opt_green = max green value,
// opt_green_minus_max = second_green_value = C* (0 with fewer than two
// greens). opt_estimate is left at 0.
Benchmarks SecretaryBenchmarks(std::span<const Item> greens);

// Packing benchmarks from the LP relaxation: OPT(G) and OPT(G \ g_max),
// where g_max is the most valuable green (lowest id on ties).
// opt_estimate = OPT(G).
Benchmarks PipBenchmarks(const Instance& instance);

// Position of the most valuable item (lowest id on ties); -1 if empty.
int ArgMaxValue(std::span<const Item> items);

// Value of the greedy maximum-weight independent subset of `greens`.
// Throws ContractViolation if the oracle accepts a set it later contradicts.
double MatroidOpt(std::span<const Item> greens, const Matroid& matroid,
                  bool exclude_gmax);

struct IntegralOpt {
  double value = 0.0;
  // true when `value` is the LP relaxation optimum (an upper bound) because
  // the item count exceeded kMaxExactItems.
  bool lp_surrogate = false;
};

inline constexpr int kMaxExactItems = 20;

// max c.x s.t. sum a_i x_i <= B * 1, x in {0,1}^n by depth-first branch and
// bound; LP value (labelled) when there are more than kMaxExactItems items.
IntegralOpt IntegralPackingOpt(std::span<const Item> items, double budget,
                               int d);

// Keeps item i independently with probability (1 - eps) * x[i]. The result
// may violate the budget; callers check feasibility.
Selection RoundIntegral(std::span<const double> x, std::span<const Item> items,
                        double budget, int d, double eps, uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_OFFLINE_H_

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


// Base prophet instances: known sizes, independent discrete value
// distributions.

#ifndef BYZOPT_PROPHET_INSTANCE_H_
#define BYZOPT_PROPHET_INSTANCE_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "byzopt/model.h"
#include "byzopt/rng.h"

namespace byzopt {

struct ProphetItem {
  std::vector<double> size;
  std::vector<std::pair<double, double>> dist;  // (value, probability)

  double Mean() const;
  double MaxValue() const;
};

struct BaseProphetInstance {
  int d = 1;
  double budget = 1.0;
  std::vector<ProphetItem> items;

  int n() const { return static_cast<int>(items.size()); }

  // Throws ConfigError on empty supports, negative values, probabilities not
  // summing to one (within 1e-9) or malformed sizes.
  void Validate() const;
};

// Inverse-CDF draw over the support in listed order; one uniform per call.
double SampleValue(const ProphetItem& item, Rng& rng);

// Packing items carrying the realized `values`, all green, ids 0..n-1.
std::vector<Item> RealizedItems(const BaseProphetInstance& instance,
                                std::span<const double> values);

struct ProphetOptResult {
  double value = 0.0;
  double std_error = 0.0;  // 0 for exact enumeration
  long scenarios = 0;
  // Some scenario had more than kMaxExactItems items, so its LP value was
  // used as an upper bound.
  bool lp_surrogate = false;
};

inline constexpr long kMaxExactProfiles = 1000000;

// E[max integral packing value] by enumerating every value profile. Throws
// SizeError when the product of support sizes exceeds kMaxExactProfiles.
ProphetOptResult ProphetOptBaseExact(const BaseProphetInstance& instance);

ProphetOptResult ProphetOptBaseMonteCarlo(const BaseProphetInstance& instance,
                                          int trials, uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_PROPHET_INSTANCE_H_

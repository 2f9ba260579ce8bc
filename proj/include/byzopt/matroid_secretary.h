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


// Matroid Byzantine secretary value maximization.

#ifndef BYZOPT_MATROID_SECRETARY_H_
#define BYZOPT_MATROID_SECRETARY_H_

#include <cstdint>
#include <optional>

#include "byzopt/matroid.h"
#include "byzopt/model.h"

namespace byzopt {

struct IbgszResult {
  Selection selection;
  int interval = 0;
  int level = 0;
  double threshold = kNegInf;
};

// Draws i uniform in 1..K and k uniform in 1..ceil(log2(2 r^2)); after I_i
// greedily keeps every item of value >= 2^{-k} mu_i that stays independent.
IbgszResult Ibgsz(const Instance& instance, const ArrivalSchedule& schedule,
                  const Matroid& matroid, int K, uint64_t seed);

// Draws i uniform in 1..K and k uniform in [-b, b] with
// b = IteratedLogBound(n, i); takes the first item arriving in or after I_i
// with value >= 2^k mu_{i-1}.
std::optional<int> SearchIII(const Instance& instance,
                             const ArrivalSchedule& schedule, int K,
                             uint64_t seed);

enum class MatroidProcedure { kOuterSingle, kSingle, kIbgsz, kSearchIII };

struct MatroidValueResult {
  Selection selection;
  MatroidProcedure procedure = MatroidProcedure::kOuterSingle;
};

// Fair coin: the single-item value algorithm, or one of {single-item value
// algorithm, Ibgsz, SearchIII} uniformly with K = log* n. Single picks that
// are loops of the matroid are dropped.
MatroidValueResult ValueMaxMatroid(const Instance& instance,
                                   const ArrivalSchedule& schedule,
                                   const Matroid& matroid, uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_MATROID_SECRETARY_H_

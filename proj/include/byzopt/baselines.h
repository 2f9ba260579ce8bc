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


// Non-robust baselines used to reproduce the classical failure modes.

#ifndef BYZOPT_BASELINES_H_
#define BYZOPT_BASELINES_H_

#include <cstdint>
#include <optional>

#include "byzopt/model.h"
#include "byzopt/prophet.h"
#include "byzopt/prophet_instance.h"

namespace byzopt {

// Observes the first ceil(n/e) arrivals, then takes the first item beating
// all of them.
std::optional<int> ClassicSecretary(const Instance& instance,
                                    const ArrivalSchedule& schedule);

// Median of max_t V_t for a single-item prophet instance. Revealed values
// above `threshold` are accepted; values equal to it are accepted with
// probability tie_prob, chosen so that without augmentation the rule stops
// with probability exactly 1/2.
struct MedianThreshold {
  double threshold = 0.0;
  double tie_prob = 0.0;
};

MedianThreshold MakeMedianThreshold(const BaseProphetInstance& instance);

ProphetRunResult RunMedianThreshold(const BaseProphetInstance& instance,
                                    const MedianThreshold& rule,
                                    Augmenter& augmenter, uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_BASELINES_H_

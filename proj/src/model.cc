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

#include "byzopt/model.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"
#include "byzopt/rng.h"

namespace byzopt {

int Instance::GreenCount() const {
  return static_cast<int>(std::count_if(
      items.begin(), items.end(), [](const Item& it) { return it.green(); }));
}

int Instance::RedCount() const { return n() - GreenCount(); }

std::vector<Item> Instance::Greens() const {
  std::vector<Item> out;
  for (const Item& it : items) {
    if (it.green()) out.push_back(it);
  }
  return out;
}

void Instance::Validate() const {
  if (d < 1) throw ConfigError("instance: d must be positive");
  if (!(budget > 0.0)) throw ConfigError("instance: budget must be positive");
  for (size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    if (it.id != static_cast<int>(i)) {
      throw ConfigError("instance: item ids must equal their positions (item " +
                        std::to_string(i) + " has id " + std::to_string(it.id) +
                        ")");
    }
    if (!(it.value >= 0.0) || !std::isfinite(it.value)) {
      throw ConfigError("instance: negative or non-finite value on item " +
                        std::to_string(i));
    }
    if (static_cast<int>(it.size.size()) != d) {
      throw ConfigError("instance: size vector of item " + std::to_string(i) +
                        " has wrong length");
    }
    for (double a : it.size) {
      if (!(a >= 0.0 && a <= 1.0)) {
        throw ConfigError("instance: size coordinate outside [0,1] on item " +
                          std::to_string(i));
      }
    }
  }
}

ArrivalSchedule MakeSchedule(const Instance& instance,
                             std::span<const double> red_times, uint64_t seed) {
  if (static_cast<int>(red_times.size()) != instance.RedCount()) {
    throw ConfigError("MakeSchedule: got " + std::to_string(red_times.size()) +
                      " red times for " + std::to_string(instance.RedCount()) +
                      " red items");
  }
  for (double t : red_times) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ConfigError("MakeSchedule: red time outside [0,1]");
    }
  }
  Rng rng(seed);
  // (time, color rank: red first, position)
  std::vector<std::tuple<double, int, int>> keyed;
  keyed.reserve(instance.items.size());
  size_t next_red = 0;
  for (const Item& it : instance.items) {
    if (it.green()) {
      keyed.emplace_back(rng.UniformDouble(), 1, it.id);
    } else {
      keyed.emplace_back(red_times[next_red++], 0, it.id);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  ArrivalSchedule schedule;
  schedule.seed = seed;
  schedule.arrivals.reserve(keyed.size());
  for (const auto& [t, rank, id] : keyed) schedule.arrivals.push_back({t, id});
  return schedule;
}

void ValidateSchedule(const Instance& instance,
                      const ArrivalSchedule& schedule) {
  std::vector<char> seen(instance.items.size(), 0);
  double last = 0.0;
  for (const Arrival& a : schedule.arrivals) {
    if (a.id < 0 || a.id >= instance.n()) {
      throw ConfigError("schedule: unknown item id " + std::to_string(a.id));
    }
    if (seen[static_cast<size_t>(a.id)]) {
      throw ConfigError("schedule: item " + std::to_string(a.id) +
                        " arrives twice");
    }
    seen[static_cast<size_t>(a.id)] = 1;
    if (!(a.time >= 0.0 && a.time <= 1.0) || a.time < last) {
      throw ConfigError("schedule: arrival times must be sorted within [0,1]");
    }
    last = a.time;
  }
  if (schedule.arrivals.size() != instance.items.size()) {
    throw ConfigError("schedule: " + std::to_string(schedule.arrivals.size()) +
                      " arrivals for " + std::to_string(instance.n()) +
                      " items");
  }
}

void Selection::Add(const Item& item, double fraction) {
  if (occupation_.size() != item.size.size()) {
    throw ContractViolation("Selection::Add: dimension mismatch");
  }
  picks_.push_back({item.id, fraction});
  kernels::Axpy(fraction, item.size, occupation_);
  total_value_ += fraction * item.value;
}

void Selection::Merge(const Selection& other, const Instance& instance) {
  for (const Pick& p : other.picks_) Add(instance.item(p.id), p.fraction);
}

bool Selection::Contains(int id) const {
  return std::any_of(picks_.begin(), picks_.end(),
                     [id](const Pick& p) { return p.id == id; });
}

double Selection::MaxOccupation() const {
  if (occupation_.empty()) return 0.0;
  return std::max(0.0, kernels::MaxElement(occupation_));
}

Selection Selection::Recompute(const Instance& instance,
                               std::span<const Pick> picks) {
  Selection s(instance.d);
  for (const Pick& p : picks) s.Add(instance.item(p.id), p.fraction);
  return s;
}

int IntervalIndex(double time, int K, IntervalLayout layout) {
  if (K < 1) throw ContractViolation("IntervalIndex: K must be >= 1");
  if (!(time >= 0.0 && time <= 1.0)) {
    throw ContractViolation("IntervalIndex: time outside [0,1]");
  }
  switch (layout) {
    case IntervalLayout::kPipUniform: {
      const int idx = static_cast<int>(std::floor(time * K));
      return std::min(idx, K - 1);
    }
    case IntervalLayout::kSecretaryQuarters: {
      if (time <= 0.25) return 0;
      if (time > 0.75) return AfterIntervals(K);
      const int idx = static_cast<int>(std::ceil((time - 0.25) * 2.0 * K));
      return std::clamp(idx, 1, K);
    }
  }
  return 0;
}

}  // namespace byzopt

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


#include "byzopt/matroid_secretary.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "byzopt/errors.h"
#include "byzopt/rng.h"
#include "byzopt/secretary.h"

namespace byzopt {

IbgszResult Ibgsz(const Instance& instance, const ArrivalSchedule& schedule,
                  const Matroid& matroid, int K, uint64_t seed) {
  const QuarterView view(instance, schedule, K);
  IbgszResult out;
  out.selection = Selection(instance.d);
  const int r = matroid.rank();
  if (r < 1) return out;
  Rng rng(seed);
  const double r2 = 2.0 * static_cast<double>(r) * r;
  const int levels = std::max(1, static_cast<int>(std::ceil(std::log2(r2))));
  out.interval = static_cast<int>(rng.UniformInt(1, K));
  out.level = static_cast<int>(rng.UniformInt(1, levels));
  const double mu = view.mu[static_cast<size_t>(out.interval)];
  // An empty interval gives mu = -inf; the threshold then admits everything.
  out.threshold = std::isfinite(mu) ? std::ldexp(mu, -out.level) : kNegInf;
  std::vector<int> chosen;
  for (size_t s = 0; s < schedule.arrivals.size(); ++s) {
    if (view.interval[s] <= out.interval) continue;
    if (static_cast<int>(chosen.size()) >= r) break;
    const Item& item = instance.item(schedule.arrivals[s].id);
    if (item.value < out.threshold) continue;
    if (!matroid.CanAdd(chosen, item.id)) continue;
    chosen.push_back(item.id);
    out.selection.Add(item);
  }
  if (!matroid.Independent(chosen)) {
    throw ContractViolation("Ibgsz: oracle accepted a dependent set for " +
                            matroid.Describe());
  }
  return out;
}

std::optional<int> SearchIII(const Instance& instance,
                             const ArrivalSchedule& schedule, int K,
                             uint64_t seed) {
  const QuarterView view(instance, schedule, K);
  Rng rng(seed);
  const double n = static_cast<double>(schedule.arrivals.size());
  const int i = static_cast<int>(rng.UniformInt(1, K));
  const int bound = IteratedLogBound(n, i);
  const int k = static_cast<int>(rng.UniformInt(-bound, bound));
  const double threshold = std::ldexp(view.mu[static_cast<size_t>(i) - 1], k);
  for (size_t s = 0; s < schedule.arrivals.size(); ++s) {
    if (view.interval[s] < i) continue;
    const Item& item = instance.item(schedule.arrivals[s].id);
    if (item.value >= threshold) return item.id;
  }
  return std::nullopt;
}

MatroidValueResult ValueMaxMatroid(const Instance& instance,
                                   const ArrivalSchedule& schedule,
                                   const Matroid& matroid, uint64_t seed) {
  Rng rng(seed);
  MatroidValueResult out;
  out.selection = Selection(instance.d);
  const bool outer = rng.Bernoulli(0.5);
  const int64_t branch = rng.UniformInt(0, 2);
  const uint64_t sub_seed = rng.Next();
  const int K = std::max(1, LogStar(static_cast<double>(
                                std::max<size_t>(schedule.arrivals.size(), 1))));
  std::optional<int> single;
  if (outer || branch == 0) {
    out.procedure =
        outer ? MatroidProcedure::kOuterSingle : MatroidProcedure::kSingle;
    single = ValueMaxSingle(instance, schedule, sub_seed).pick;
  } else if (branch == 1) {
    out.procedure = MatroidProcedure::kIbgsz;
    out.selection = Ibgsz(instance, schedule, matroid, K, sub_seed).selection;
    return out;
  } else {
    out.procedure = MatroidProcedure::kSearchIII;
    single = SearchIII(instance, schedule, K, sub_seed);
  }
  if (single.has_value()) {
    const int id = *single;
    if (matroid.CanAdd({}, id)) out.selection.Add(instance.item(id));
  }
  return out;
}

}  // namespace byzopt

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


#include "byzopt/secretary.h"

#include <algorithm>
#include <cmath>

#include "byzopt/errors.h"
#include "byzopt/rng.h"

namespace byzopt {

double IteratedLog(double n, int level) {
  if (level < 0) throw ContractViolation("IteratedLog: negative level");
  double v = n;
  for (int i = 0; i < level; ++i) {
    if (!(v > 0.0)) return kNegInf;
    v = std::log2(v);
  }
  return v;
}

int LogStar(double n) {
  int i = 0;
  double v = n;
  while (v > 1.0) {
    v = std::log2(v);
    ++i;
  }
  return i;
}

int IteratedLogBound(double n, int level) {
  const double v = IteratedLog(n, level);
  return v >= 1.0 ? static_cast<int>(std::floor(v)) : 0;
}

int ProbMaxK(int n) {
  return static_cast<int>(std::ceil(2.0 * std::log2(std::max(n, 1)))) + 4;
}

int ValueMaxK(int n) { return 2 * LogStar(std::max(n, 1)) + 2; }

QuarterView::QuarterView(const Instance& instance,
                         const ArrivalSchedule& schedule, int K_in)
    : K(K_in) {
  if (K < 1) throw ContractViolation("secretary: K must be >= 1");
  mu.assign(static_cast<size_t>(K) + 2, kNegInf);
  interval.reserve(schedule.arrivals.size());
  for (const Arrival& a : schedule.arrivals) {
    const int i = IntervalIndex(a.time, K, IntervalLayout::kSecretaryQuarters);
    interval.push_back(i);
    double& m = mu[static_cast<size_t>(i)];
    m = std::max(m, instance.item(a.id).value);
  }
}

Selection StructProc(const Instance& instance, const ArrivalSchedule& schedule,
                     int K) {
  const QuarterView view(instance, schedule, K);
  Selection out(instance.d);
  std::vector<char> done(static_cast<size_t>(K) + 1, 0);
  for (size_t s = 0; s < schedule.arrivals.size(); ++s) {
    const Item& item = instance.item(schedule.arrivals[s].id);
    const int here = view.interval[s];
    bool taken = false;
    for (int i = 1; i <= K && i < here; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      if (item.value >= view.mu[static_cast<size_t>(i)]) {
        done[static_cast<size_t>(i)] = 1;
        taken = true;
      }
    }
    if (taken) out.Add(item);
  }
  return out;
}

double LowerMedian(std::vector<double> values) {
  if (values.empty()) return kNegInf;
  const size_t mid = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<long>(mid),
                   values.end());
  return values[mid];
}

SearchResult SearchProc(const Instance& instance,
                        const ArrivalSchedule& schedule, int K) {
  const QuarterView view(instance, schedule, K);
  std::vector<double> prefix;
  for (size_t s = 0; s < schedule.arrivals.size(); ++s) {
    if (view.interval[s] == 0) {
      prefix.push_back(instance.item(schedule.arrivals[s].id).value);
    }
  }
  SearchResult out;
  out.selection = Selection(instance.d);
  double lower = kNegInf;
  size_t s = 0;
  while (s < schedule.arrivals.size() && view.interval[s] == 0) ++s;
  for (int i = 1; i <= K; ++i) {
    SearchTraceRow row;
    row.interval = i;
    row.lower = lower;
    row.upper = view.mu[static_cast<size_t>(i) - 1];
    std::vector<double> theta;
    for (double v : prefix) {
      if (v > row.lower && v <= row.upper) theta.push_back(v);
    }
    row.candidates = static_cast<int>(theta.size());
    row.threshold = LowerMedian(std::move(theta));
    for (; s < schedule.arrivals.size() && view.interval[s] == i; ++s) {
      const Item& item = instance.item(schedule.arrivals[s].id);
      if (row.picked_id < 0 && item.value >= row.threshold) {
        row.picked_id = item.id;
        out.selection.Add(item);
        lower = std::max(lower, item.value);
      }
    }
    out.trace.push_back(row);
  }
  return out;
}

namespace {

std::optional<int> UniformPick(const Selection& selection, Rng& rng) {
  if (selection.empty()) return std::nullopt;
  const int64_t k =
      rng.UniformInt(0, static_cast<int64_t>(selection.size()) - 1);
  return selection.picks()[static_cast<size_t>(k)].id;
}

}  // namespace

std::optional<int> ProbMaxSingle(const Instance& instance,
                                 const ArrivalSchedule& schedule,
                                 uint64_t seed) {
  Rng rng(seed);
  const int K = ProbMaxK(static_cast<int>(schedule.arrivals.size()));
  const bool use_struct = rng.Bernoulli(0.5);
  const Selection picks = use_struct
                              ? StructProc(instance, schedule, K)
                              : SearchProc(instance, schedule, K).selection;
  return UniformPick(picks, rng);
}

std::optional<int> SampleProc(const ArrivalSchedule& schedule, uint64_t seed) {
  if (schedule.arrivals.empty()) return std::nullopt;
  Rng rng(seed);
  const int64_t k =
      rng.UniformInt(0, static_cast<int64_t>(schedule.arrivals.size()) - 1);
  return schedule.arrivals[static_cast<size_t>(k)].id;
}

SearchIIResult SearchII(const Instance& instance,
                        const ArrivalSchedule& schedule, int K, uint64_t seed) {
  const QuarterView view(instance, schedule, K);
  const double n = static_cast<double>(schedule.arrivals.size());
  const auto mu = [&view](int i) { return view.mu[static_cast<size_t>(i)]; };
  Rng rng(seed);
  SearchIIResult out;
  out.selection = Selection(instance.d);
  size_t s = 0;
  while (s < schedule.arrivals.size() && view.interval[s] == 0) ++s;
  for (int i = 1; i <= K; ++i) {
    SearchIITraceRow row;
    row.interval = i;
    int count = 0;
    int last = -1;
    for (int j = 1; j <= i - 1; ++j) {
      if (mu(j) >= mu(i - 1) && mu(j - 1) >= mu(i - 1)) {
        ++count;
        last = j;
      }
    }
    row.level = count + 1;
    row.anchor = row.level > 1 ? last : i - 1;
    const int bound = IteratedLogBound(n, row.level);
    row.exponent = static_cast<int>(rng.UniformInt(-bound, bound));
    row.threshold = std::ldexp(mu(row.anchor), row.exponent);
    for (; s < schedule.arrivals.size() && view.interval[s] == i; ++s) {
      const Item& item = instance.item(schedule.arrivals[s].id);
      if (row.picked_id < 0 && item.value >= row.threshold) {
        row.picked_id = item.id;
        out.selection.Add(item);
      }
    }
    out.trace.push_back(row);
  }
  return out;
}

SingleValueResult ValueMaxSingle(const Instance& instance,
                                 const ArrivalSchedule& schedule,
                                 uint64_t seed) {
  Rng rng(seed);
  const int K = ValueMaxK(static_cast<int>(schedule.arrivals.size()));
  SingleValueResult out;
  const int64_t branch = rng.UniformInt(0, 2);
  const uint64_t sub_seed = rng.Next();
  if (branch == 0) {
    out.procedure = ValueProcedure::kStruct;
    out.pick = UniformPick(StructProc(instance, schedule, K), rng);
  } else if (branch == 1) {
    out.procedure = ValueProcedure::kSample;
    out.pick = SampleProc(schedule, sub_seed);
  } else {
    out.procedure = ValueProcedure::kSearchII;
    out.pick =
        UniformPick(SearchII(instance, schedule, K, sub_seed).selection, rng);
  }
  return out;
}

}  // namespace byzopt

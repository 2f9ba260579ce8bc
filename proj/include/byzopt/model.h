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

// Instances, arrival schedules and selections shared by every algorithm.

#ifndef BYZOPT_MODEL_H_
#define BYZOPT_MODEL_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace byzopt {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Green items arrive at uniformly random times; red items are placed by the
// adversary.
enum class Color { kGreen, kRed };

struct Item {
  int id = 0;
  double value = 0.0;
  std::vector<double> size;  // one entry per constraint, each in [0, 1]
  Color color = Color::kGreen;

  bool green() const { return color == Color::kGreen; }
};

// Packing instance max c.x s.t. sum_i a_i x_i <= B * 1. Item ids equal
// their position in `items`.
struct Instance {
  int d = 1;
  double budget = 1.0;
  std::vector<Item> items;

  int n() const { return static_cast<int>(items.size()); }
  int GreenCount() const;
  int RedCount() const;
  std::vector<Item> Greens() const;
  const Item& item(int id) const { return items[static_cast<size_t>(id)]; }

  // Throws ConfigError if an invariant is broken.
  void Validate() const;
};

struct Arrival {
  double time = 0.0;
  int id = 0;

  bool operator==(const Arrival&) const = default;
};

struct ArrivalSchedule {
  std::vector<Arrival> arrivals;  // ascending by time
  uint64_t seed = 0;

  bool operator==(const ArrivalSchedule&) const = default;
};

// Places greens i.i.d. uniformly on [0, 1) and reds at `red_times`, which are
// listed in the order the red items appear in `instance.items`. Ties order
// reds before greens, then by position.
ArrivalSchedule MakeSchedule(const Instance& instance,
                             std::span<const double> red_times, uint64_t seed);

// Throws ConfigError unless every item of `instance` appears exactly once
// and times are nondecreasing within [0, 1].
void ValidateSchedule(const Instance& instance,
                      const ArrivalSchedule& schedule);

struct Pick {
  int id = 0;
  double fraction = 1.0;

  bool operator==(const Pick&) const = default;
};

class Selection {
 public:
  Selection() = default;
  explicit Selection(int d) : occupation_(static_cast<size_t>(d), 0.0) {}

  void Add(const Item& item, double fraction = 1.0);
  // Appends every pick of `other` (same dimension).
  void Merge(const Selection& other, const Instance& instance);

  const std::vector<Pick>& picks() const { return picks_; }
  const std::vector<double>& occupation() const { return occupation_; }
  double total_value() const { return total_value_; }
  bool empty() const { return picks_.empty(); }
  size_t size() const { return picks_.size(); }
  bool Contains(int id) const;

  // Largest occupation coordinate; 0 for an empty selection.
  double MaxOccupation() const;

  // Rebuilds occupation and value from the picks, in pick order.
  static Selection Recompute(const Instance& instance,
                             std::span<const Pick> picks);

 private:
  std::vector<Pick> picks_;
  std::vector<double> occupation_;
  double total_value_ = 0.0;
};

struct Benchmarks {
  double opt_green = 0.0;            // OPT(G)
  double opt_green_minus_max = 0.0;  // OPT(G \ g_max)
  double second_green_value = 0.0;   // C* = val(g_2)
  double opt_estimate = 0.0;
};

// Interval layouts used by the online algorithms.
//   kPipUniform: [0, 1] cut into K equal intervals [i/K, (i+1)/K), the last
//     one closed; indices 0..K-1.
//   kSecretaryQuarters: I_0 = [0, 1/4], then K intervals (1/4 + (i-1)/(2K),
//     1/4 + i/(2K)] for i = 1..K; times in (3/4, 1] map to K + 1.
enum class IntervalLayout { kPipUniform, kSecretaryQuarters };

int IntervalIndex(double time, int K, IntervalLayout layout);

// Index returned by IntervalIndex for times after the last secretary
// interval.
inline int AfterIntervals(int K) { return K + 1; }

}  // namespace byzopt

#endif  // BYZOPT_MODEL_H_

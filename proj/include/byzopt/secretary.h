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


// Single-item Byzantine secretary: probability and value maximization.
//
// Every procedure uses the kSecretaryQuarters layout: I_0 = [0, 1/4], then
// K intervals of width 1/(2K) covering (1/4, 3/4], then the tail (3/4, 1].
// mu_i is the largest value arriving in I_i, or -inf when I_i is empty.

#ifndef BYZOPT_SECRETARY_H_
#define BYZOPT_SECRETARY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "byzopt/model.h"

namespace byzopt {

// log^(0) n = n, log^(i) n = log2(log^(i-1) n); -inf once undefined.
double IteratedLog(double n, int level);

// min{i : log^(i) n <= 1}.
int LogStar(double n);

// floor(log^(level) n), or 0 when log^(level) n < 1 (also when undefined).
int IteratedLogBound(double n, int level);

// ceil(2 log2 n) + 4 and 2 log* n + 2.
int ProbMaxK(int n);
int ValueMaxK(int n);

// Interval index of every arrival and the per-interval maxima mu_0..mu_{K+1}
// (the last entry covers the tail).
struct QuarterView {
  int K = 0;
  std::vector<int> interval;  // parallel to schedule.arrivals
  std::vector<double> mu;     // size K + 2

  QuarterView(const Instance& instance, const ArrivalSchedule& schedule,
              int K);
};

// K parallel classic-secretary subroutines: subroutine i waits out I_i and
// takes the first later item of value >= mu_i. Items taken by several
// subroutines appear once.
Selection StructProc(const Instance& instance, const ArrivalSchedule& schedule,
                     int K);

struct SearchTraceRow {
  int interval = 0;
  double lower = kNegInf;  // L: best value picked before I_i
  double upper = kNegInf;  // U: mu_{i-1}
  int candidates = 0;      // |Theta_i|
  double threshold = kNegInf;
  int picked_id = -1;
};

struct SearchResult {
  Selection selection;
  std::vector<SearchTraceRow> trace;  // one row per interval 1..K
};

// Median (lower middle for even sizes) of Theta_i = {v in I_0 : L < v <= U};
// -inf for an empty set. Takes the first item of I_i reaching it.
SearchResult SearchProc(const Instance& instance,
                        const ArrivalSchedule& schedule, int K);

// Lower-middle median of a multiset; -inf when empty.
double LowerMedian(std::vector<double> values);

// Runs Struct or Search (fair coin) with K = ProbMaxK(n) and returns one of
// that procedure's picks uniformly at random.
std::optional<int> ProbMaxSingle(const Instance& instance,
                                 const ArrivalSchedule& schedule,
                                 uint64_t seed);

// One item chosen uniformly at random.
std::optional<int> SampleProc(const ArrivalSchedule& schedule, uint64_t seed);

struct SearchIITraceRow {
  int interval = 0;
  int level = 1;       // l_i = |N_i| + 1
  int anchor = 0;      // j_i
  int exponent = 0;    // k_i
  double threshold = kNegInf;
  int picked_id = -1;
};

struct SearchIIResult {
  Selection selection;
  std::vector<SearchIITraceRow> trace;
};

// For interval i: N_i = {j in 1..i-1 : mu_j >= mu_{i-1} and
// mu_{j-1} >= mu_{i-1}}, l_i = |N_i| + 1, j_i = max N_i (or i - 1),
// k_i uniform in [-b, b] with b = IteratedLogBound(n, l_i); takes the first
// item of I_i with value >= 2^{k_i} * mu_{j_i}.
SearchIIResult SearchII(const Instance& instance,
                        const ArrivalSchedule& schedule, int K, uint64_t seed);

enum class ValueProcedure { kNone, kStruct, kSample, kSearchII };

struct SingleValueResult {
  std::optional<int> pick;
  ValueProcedure procedure = ValueProcedure::kNone;
};

// Uniform over {Struct, Sample, SearchII} with K = ValueMaxK(n), then
// uniform over that procedure's picks.
SingleValueResult ValueMaxSingle(const Instance& instance,
                                 const ArrivalSchedule& schedule,
                                 uint64_t seed);

}  // namespace byzopt

#endif  // BYZOPT_SECRETARY_H_

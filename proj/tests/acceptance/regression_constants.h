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


// Regression thresholds, frozen from reference runs of the configs in
// tests/reference_configs.h. Each lower bound is 0.9 times the measured
// statistic, rounded down to two significant digits; kC is 1.1 times its
// measurement, rounded up. `byzopt_acceptance --measure` and
// `byzopt_unit_tests --gtest_filter=Regression.*` print fresh measurements.

#ifndef BYZOPT_TESTS_ACCEPTANCE_REGRESSION_CONSTANTS_H_
#define BYZOPT_TESTS_ACCEPTANCE_REGRESSION_CONSTANTS_H_

namespace byzopt::regression {

inline constexpr char kConfigHash[] = "835247759b50998f";

inline constexpr double kR0 = 0.55;     // byz-pip mean value / OPT(G)
inline constexpr double kR1 = 0.18;     // smooth reduction mean / OPT(G \ g_max)
inline constexpr double kS0 = 0.42;     // prob-max success rate * log2 n
inline constexpr double kV0 = 150.0;    // SearchII mean value / C*
inline constexpr double kW0 = 2.6;      // value-max mean / C* * log* n
inline constexpr double kM0 = 7.5;      // matroid mean / OPT(G \ g_max) * (log* n)^2 log2 r
inline constexpr double kP0 = 0.86;     // prophet, zero augmentation, mean / OPT_base
inline constexpr double kP1 = 1.1;      // prophet, threshold chaser, mean / OPT_base
inline constexpr double kQ0 = 1.0;      // truncation reduction, heavy tail, mean / OPT_base
inline constexpr double kC = 0.17;      // refined byz-pip: 1 - mean ratio <= kC * eps

}  // namespace byzopt::regression

#endif  // BYZOPT_TESTS_ACCEPTANCE_REGRESSION_CONSTANTS_H_

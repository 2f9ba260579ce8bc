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

#ifndef BYZOPT_MULTISCALE_H_
#define BYZOPT_MULTISCALE_H_

#include <span>
#include <vector>

#include "byzopt/rng.h"

namespace byzopt {

struct MultiscaleDecision {
  std::vector<double> distribution;
  int index = 0;
};

// Full-information experts with per-expert reward ranges [0, c_i].
//
// Mirror descent with the weighted entropy sum_i (c_i / eps) p_i ln p_i:
// each round multiplies p_i by exp(eta_i * (r_i - lambda)) with
// eta_i = eps / c_i and the common multiplier lambda >= 0 chosen so the
// result sums to one. The starting distribution is proportional to 1 / c_i.
//
// Target guarantee, for every expert i:
//   R_i - sum_t <r_t, p_t> <= eps * R_i + kappa * c_i * ln(M) / eps,
// with kappa = kMultiscaleKappa (checked empirically by the test suite).
class MultiscaleLearner {
 public:
  MultiscaleLearner(std::vector<double> scales, double epsilon);

  const std::vector<double>& Distribution() const { return played_; }

  // Distribution plus one index sampled from it with `rng`.
  MultiscaleDecision Decide(Rng& rng) const;

  // Throws ContractViolation unless 0 <= r_i <= c_i for every i.
  void Observe(std::span<const double> rewards);

  int experts() const { return static_cast<int>(scales_.size()); }
  const std::vector<double>& scales() const { return scales_; }
  double epsilon() const { return epsilon_; }

 private:
  std::vector<double> scales_;
  double epsilon_;
  std::vector<double> log_p_;
  std::vector<double> played_;
};

inline constexpr double kMultiscaleKappa = 8.0;

}  // namespace byzopt

#endif  // BYZOPT_MULTISCALE_H_

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

#ifndef BYZOPT_OLO_H_
#define BYZOPT_OLO_H_

#include <span>
#include <vector>

namespace byzopt {

// A point of the probability simplex (weights sum to 1) or, when
// `full_dimensional`, of {p >= 0 : sum p <= 1}.
struct SimplexPoint {
  std::vector<double> weights;
  bool full_dimensional = false;

  double Sum() const;
};

// Online linear optimization over the simplex with a
// multiplicative-plus-additive regret guarantee: for every fixed vertex p*,
//
//   sum_t f_t(p*) - sum_t f_t(p_t) <= eps * sum_t |f_t(p*)| + ln(V) / eps
//
// where f_t(p) = <g_t, p> takes values in [-1, 1] and V is the number of
// vertices (d, or d + 1 for the full-dimensional simplex).
//
// The learner runs multiplicative weights with the linear update
// w_i <- w_i * (1 + eps * g_i). The full-dimensional simplex is realized by
// a phantom (d+1)-th expert whose reward is always zero; its weight is
// dropped from the played point. Log-weights are kept to avoid underflow.
class OloLearner {
 public:
  OloLearner(int d, double epsilon, bool full_dimensional);

  SimplexPoint Decide() const;

  // Observes the reward vector g of f_t(p) = <g, p>. Throws ContractViolation
  // if some coordinate of g lies outside [-1, 1].
  void Observe(std::span<const double> g);

  // Writes the current point into `out` (size d) without allocating.
  void DecideInto(std::span<double> out) const;

  int d() const { return d_; }
  double epsilon() const { return epsilon_; }
  bool full_dimensional() const { return full_dimensional_; }
  long steps() const { return steps_; }

 private:
  void Refresh();

  int d_;
  double epsilon_;
  bool full_dimensional_;
  long steps_ = 0;
  std::vector<double> log_weights_;  // d or d + 1 entries
  std::vector<double> played_;       // normalized over all experts
};

}  // namespace byzopt

#endif  // BYZOPT_OLO_H_

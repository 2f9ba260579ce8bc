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

#include "byzopt/multiscale.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "byzopt/errors.h"

namespace byzopt {
namespace {

// sum_i exp(log_q_i - eta_i * lambda)
double MassAt(std::span<const double> log_q, std::span<const double> eta,
              double lambda) {
  double total = 0.0;
  for (size_t i = 0; i < log_q.size(); ++i) {
    total += std::exp(log_q[i] - eta[i] * lambda);
  }
  return total;
}

}  // namespace

MultiscaleLearner::MultiscaleLearner(std::vector<double> scales,
                                     double epsilon)
    : scales_(std::move(scales)), epsilon_(epsilon) {
  if (scales_.empty()) throw ContractViolation("MultiscaleLearner: no experts");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ContractViolation("MultiscaleLearner: epsilon must lie in (0, 1]");
  }
  double inv_total = 0.0;
  for (double c : scales_) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw ContractViolation("MultiscaleLearner: scales must be positive");
    }
    inv_total += 1.0 / c;
  }
  log_p_.resize(scales_.size());
  played_.resize(scales_.size());
  for (size_t i = 0; i < scales_.size(); ++i) {
    played_[i] = (1.0 / scales_[i]) / inv_total;
    log_p_[i] = std::log(played_[i]);
  }
}

MultiscaleDecision MultiscaleLearner::Decide(Rng& rng) const {
  MultiscaleDecision decision;
  decision.distribution = played_;
  const double u = rng.UniformDouble();
  double cumulative = 0.0;
  decision.index = static_cast<int>(played_.size()) - 1;
  for (size_t i = 0; i < played_.size(); ++i) {
    cumulative += played_[i];
    if (u < cumulative) {
      decision.index = static_cast<int>(i);
      break;
    }
  }
  return decision;
}

void MultiscaleLearner::Observe(std::span<const double> rewards) {
  if (rewards.size() != scales_.size()) {
    throw ContractViolation("MultiscaleLearner::Observe: expected " +
                            std::to_string(scales_.size()) + " rewards");
  }
  bool any = false;
  double top_reward = 0.0;
  for (size_t i = 0; i < rewards.size(); ++i) {
    const double r = rewards[i];
    if (!(r >= 0.0 && r <= scales_[i])) {
      throw ContractViolation("MultiscaleLearner::Observe: reward " +
                              std::to_string(r) + " of expert " +
                              std::to_string(i) + " outside [0, " +
                              std::to_string(scales_[i]) + "]");
    }
    any = any || r > 0.0;
    top_reward = std::max(top_reward, r);
  }
  if (!any) return;

  const size_t m = scales_.size();
  std::vector<double> eta(m), log_q(m);
  for (size_t i = 0; i < m; ++i) {
    eta[i] = epsilon_ / scales_[i];
    log_q[i] = log_p_[i] + eta[i] * rewards[i];
  }
  // Mass is decreasing in lambda, >= 1 at 0 and <= 1 at max_i r_i.
  double lo = 0.0;
  double hi = top_reward;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (MassAt(log_q, eta, mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lambda = 0.5 * (lo + hi);
  double total = 0.0;
  for (size_t i = 0; i < m; ++i) {
    log_p_[i] = log_q[i] - eta[i] * lambda;
    total += std::exp(log_p_[i]);
  }
  const double log_total = std::log(total);
  for (size_t i = 0; i < m; ++i) {
    log_p_[i] -= log_total;
    played_[i] = std::exp(log_p_[i]);
  }
}

}  // namespace byzopt

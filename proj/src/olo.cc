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

#include "byzopt/olo.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "byzopt/errors.h"

namespace byzopt {

double SimplexPoint::Sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

OloLearner::OloLearner(int d, double epsilon, bool full_dimensional)
    : d_(d), epsilon_(epsilon), full_dimensional_(full_dimensional) {
  if (d < 1) throw ContractViolation("OloLearner: d must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw ContractViolation("OloLearner: epsilon must lie in (0, 1/2]");
  }
  const size_t experts = static_cast<size_t>(d) + (full_dimensional ? 1 : 0);
  log_weights_.assign(experts, 0.0);
  played_.assign(experts, 1.0 / static_cast<double>(experts));
}

void OloLearner::Refresh() {
  const double top = *std::max_element(log_weights_.begin(), log_weights_.end());
  double total = 0.0;
  for (size_t i = 0; i < log_weights_.size(); ++i) {
    played_[i] = std::exp(log_weights_[i] - top);
    total += played_[i];
  }
  for (double& p : played_) p /= total;
}

SimplexPoint OloLearner::Decide() const {
  SimplexPoint point;
  point.full_dimensional = full_dimensional_;
  point.weights.assign(played_.begin(), played_.begin() + d_);
  return point;
}

void OloLearner::DecideInto(std::span<double> out) const {
  if (static_cast<int>(out.size()) != d_) {
    throw ContractViolation("OloLearner::DecideInto: wrong output size");
  }
  std::copy(played_.begin(), played_.begin() + d_, out.begin());
}

void OloLearner::Observe(std::span<const double> g) {
  if (static_cast<int>(g.size()) != d_) {
    throw ContractViolation("OloLearner::Observe: reward has length " +
                            std::to_string(g.size()) + ", expected " +
                            std::to_string(d_));
  }
  for (double gi : g) {
    if (!(gi >= -1.0 && gi <= 1.0)) {
      throw ContractViolation(
          "OloLearner::Observe: reward coordinate outside [-1, 1]: " +
          std::to_string(gi));
    }
  }
  bool changed = false;
  for (int i = 0; i < d_; ++i) {
    if (g[i] != 0.0) {
      log_weights_[i] += std::log1p(epsilon_ * g[i]);
      changed = true;
    }
  }
  ++steps_;
  if (changed) Refresh();
}

}  // namespace byzopt

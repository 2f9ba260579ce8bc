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


#include "byzopt/prophet_instance.h"

#include <cmath>
#include <string>

#include "byzopt/errors.h"
#include "byzopt/offline.h"

namespace byzopt {

double ProphetItem::Mean() const {
  double m = 0.0;
  for (const auto& [v, p] : dist) m += v * p;
  return m;
}

double ProphetItem::MaxValue() const {
  double m = 0.0;
  for (const auto& [v, p] : dist) {
    if (p > 0.0) m = std::max(m, v);
  }
  return m;
}

void BaseProphetInstance::Validate() const {
  if (d < 1) throw ConfigError("prophet instance: d must be positive");
  if (!(budget > 0.0)) throw ConfigError("prophet instance: B must be > 0");
  for (size_t t = 0; t < items.size(); ++t) {
    const ProphetItem& it = items[t];
    const std::string where = " (item " + std::to_string(t) + ")";
    if (static_cast<int>(it.size.size()) != d) {
      throw ConfigError("prophet instance: size length differs from d" + where);
    }
    for (double a : it.size) {
      if (!(a >= 0.0 && a <= 1.0)) {
        throw ConfigError("prophet instance: size outside [0,1]" + where);
      }
    }
    if (it.dist.empty()) {
      throw ConfigError("prophet instance: empty support" + where);
    }
    double total = 0.0;
    for (const auto& [v, p] : it.dist) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw ConfigError("prophet instance: negative value" + where);
      }
      if (!(p >= 0.0)) {
        throw ConfigError("prophet instance: negative probability" + where);
      }
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw ConfigError("prophet instance: probabilities sum to " +
                        std::to_string(total) + where);
    }
  }
}

double SampleValue(const ProphetItem& item, Rng& rng) {
  const double u = rng.UniformDouble();
  double cumulative = 0.0;
  for (const auto& [v, p] : item.dist) {
    cumulative += p;
    if (u < cumulative) return v;
  }
  for (size_t k = item.dist.size(); k-- > 0;) {
    if (item.dist[k].second > 0.0) return item.dist[k].first;
  }
  return item.dist.back().first;
}

std::vector<Item> RealizedItems(const BaseProphetInstance& instance,
                                std::span<const double> values) {
  std::vector<Item> out(instance.items.size());
  for (size_t t = 0; t < out.size(); ++t) {
    out[t].id = static_cast<int>(t);
    out[t].value = values[t];
    out[t].size = instance.items[t].size;
  }
  return out;
}

ProphetOptResult ProphetOptBaseExact(const BaseProphetInstance& instance) {
  instance.Validate();
  long profiles = 1;
  for (const ProphetItem& it : instance.items) {
    profiles *= static_cast<long>(it.dist.size());
    if (profiles > kMaxExactProfiles) {
      throw SizeError("prophet_opt_base: more than " +
                      std::to_string(kMaxExactProfiles) +
                      " value profiles; use Monte Carlo mode");
    }
  }
  const size_t n = instance.items.size();
  std::vector<size_t> digit(n, 0);
  std::vector<Item> items = RealizedItems(instance, std::vector<double>(n, 0.0));
  ProphetOptResult res;
  for (long s = 0; s < profiles; ++s) {
    double prob = 1.0;
    for (size_t t = 0; t < n; ++t) {
      const auto& [v, p] = instance.items[t].dist[digit[t]];
      items[t].value = v;
      prob *= p;
    }
    if (prob > 0.0) {
      const IntegralOpt opt =
          IntegralPackingOpt(items, instance.budget, instance.d);
      res.value += prob * opt.value;
      res.lp_surrogate = res.lp_surrogate || opt.lp_surrogate;
    }
    for (size_t t = 0; t < n; ++t) {
      if (++digit[t] < instance.items[t].dist.size()) break;
      digit[t] = 0;
    }
  }
  res.scenarios = profiles;
  return res;
}

ProphetOptResult ProphetOptBaseMonteCarlo(const BaseProphetInstance& instance,
                                          int trials, uint64_t seed) {
  instance.Validate();
  if (trials < 1) throw ContractViolation("prophet_opt_base: trials < 1");
  Rng rng(seed);
  const size_t n = instance.items.size();
  std::vector<Item> items = RealizedItems(instance, std::vector<double>(n, 0.0));
  ProphetOptResult res;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < trials; ++s) {
    for (size_t t = 0; t < n; ++t) {
      items[t].value = SampleValue(instance.items[t], rng);
    }
    const IntegralOpt opt = IntegralPackingOpt(items, instance.budget, instance.d);
    sum += opt.value;
    sum_sq += opt.value * opt.value;
    res.lp_surrogate = res.lp_surrogate || opt.lp_surrogate;
  }
  res.value = sum / trials;
  if (trials > 1) {
    const double var =
        std::max(0.0, (sum_sq - trials * res.value * res.value) / (trials - 1));
    res.std_error = std::sqrt(var / trials);
  }
  res.scenarios = trials;
  return res;
}

}  // namespace byzopt

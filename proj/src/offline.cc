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


#include "byzopt/offline.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"
#include "byzopt/lp.h"
#include "byzopt/rng.h"

namespace byzopt {

Benchmarks SecretaryBenchmarks(std::span<const Item> greens) {
  Benchmarks b;
  double first = kNegInf;
  double second = kNegInf;
  for (const Item& it : greens) {
    if (it.value > first) {
      second = first;
      first = it.value;
    } else if (it.value > second) {
      second = it.value;
    }
  }
  b.opt_green = greens.empty() ? 0.0 : first;
  b.second_green_value = greens.size() < 2 ? 0.0 : second;
  b.opt_green_minus_max = b.second_green_value;
  return b;
}

int ArgMaxValue(std::span<const Item> items) {
  int best = -1;
  for (size_t i = 0; i < items.size(); ++i) {
    if (best < 0) {
      best = static_cast<int>(i);
      continue;
    }
    const Item& cur = items[static_cast<size_t>(best)];
    if (items[i].value > cur.value ||
        (items[i].value == cur.value && items[i].id < cur.id)) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

Benchmarks PipBenchmarks(const Instance& instance) {
  std::vector<Item> greens = instance.Greens();
  Benchmarks b;
  b.opt_green = LpOpt(greens, instance.budget, instance.d).value;
  const int top = ArgMaxValue(greens);
  if (top >= 0) greens.erase(greens.begin() + top);
  b.opt_green_minus_max = LpOpt(greens, instance.budget, instance.d).value;
  b.second_green_value = SecretaryBenchmarks(instance.Greens()).second_green_value;
  b.opt_estimate = b.opt_green;
  return b;
}

double MatroidOpt(std::span<const Item> greens, const Matroid& matroid,
                  bool exclude_gmax) {
  const int skip = exclude_gmax ? ArgMaxValue(greens) : -1;
  std::vector<size_t> order;
  for (size_t i = 0; i < greens.size(); ++i) {
    if (static_cast<int>(i) != skip) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (greens[a].value != greens[b].value) {
      return greens[a].value > greens[b].value;
    }
    return greens[a].id < greens[b].id;
  });
  if (!matroid.Independent({})) {
    throw ContractViolation("MatroidOpt: oracle rejects the empty set");
  }
  std::vector<int> chosen;
  double total = 0.0;
  for (size_t i : order) {
    if (static_cast<int>(chosen.size()) >= matroid.rank()) break;
    if (!matroid.CanAdd(chosen, greens[i].id)) continue;
    chosen.push_back(greens[i].id);
    if (!matroid.Independent(chosen)) {
      throw ContractViolation("MatroidOpt: CanAdd and Independent disagree on " +
                              matroid.Describe());
    }
    total += greens[i].value;
  }
  return total;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(std::span<const Item> items, double budget, int d)
      : budget_(budget), d_(static_cast<size_t>(d)) {
    for (const Item& it : items) sorted_.push_back(&it);
    std::stable_sort(sorted_.begin(), sorted_.end(),
                     [](const Item* a, const Item* b) {
                       return a->value > b->value;
                     });
    suffix_.assign(sorted_.size() + 1, 0.0);
    for (size_t i = sorted_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + sorted_[i]->value;
    }
    load_.assign(d_, 0.0);
  }

  double Solve() {
    Visit(0, 0.0);
    return best_;
  }

 private:
  void Visit(size_t i, double value) {
    best_ = std::max(best_, value);
    if (i == sorted_.size() || value + suffix_[i] <= best_) return;
    const Item& it = *sorted_[i];
    bool fits = true;
    for (size_t k = 0; k < d_; ++k) {
      if (load_[k] + it.size[k] > budget_) {
        fits = false;
        break;
      }
    }
    if (fits) {
      kernels::Axpy(1.0, it.size, load_);
      Visit(i + 1, value + it.value);
      kernels::Axpy(-1.0, it.size, load_);
    }
    Visit(i + 1, value);
  }

  double budget_;
  size_t d_;
  std::vector<const Item*> sorted_;
  std::vector<double> suffix_;
  std::vector<double> load_;
  double best_ = 0.0;
};

}  // namespace

IntegralOpt IntegralPackingOpt(std::span<const Item> items, double budget,
                               int d) {
  IntegralOpt out;
  if (static_cast<int>(items.size()) > kMaxExactItems) {
    out.value = LpOpt(items, budget, d).value;
    out.lp_surrogate = true;
    return out;
  }
  for (const Item& it : items) {
    if (static_cast<int>(it.size.size()) != d) {
      throw ContractViolation("IntegralPackingOpt: size length differs from d");
    }
  }
  out.value = BranchAndBound(items, budget, d).Solve();
  return out;
}

Selection RoundIntegral(std::span<const double> x, std::span<const Item> items,
                        double budget, int d, double eps, uint64_t seed) {
  if (x.size() != items.size()) {
    throw ContractViolation("RoundIntegral: x and items differ in length");
  }
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw ContractViolation("RoundIntegral: eps must lie in [0, 1]");
  }
  std::vector<double> load(static_cast<size_t>(d), 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
      throw ContractViolation("RoundIntegral: x outside [0, 1]");
    }
    kernels::Axpy(x[i], items[i].size, load);
  }
  if (kernels::AnyGreater(load, budget * (1.0 + 1e-9) + 1e-9)) {
    throw ContractViolation("RoundIntegral: x violates the budget");
  }
  Rng rng(seed);
  Selection out(d);
  for (size_t i = 0; i < x.size(); ++i) {
    // One draw per item keeps the stream aligned across different x.
    const double u = rng.UniformDouble();
    if (u < (1.0 - eps) * x[i]) out.Add(items[i]);
  }
  return out;
}

}  // namespace byzopt

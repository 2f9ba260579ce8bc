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

#include "byzopt/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"

namespace byzopt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-11;

enum class Status : unsigned char { kBasic, kAtLower, kAtUpper };

class BoundedSimplex {
 public:
  explicit BoundedSimplex(const PackingLp& lp)
      : m_(lp.rhs.size()), n_(lp.cost.size()), cols_(n_ + m_) {
    tableau_.assign(m_ * cols_, 0.0);
    for (size_t j = 0; j < n_; ++j) {
      for (size_t r = 0; r < m_; ++r) tableau_[r * cols_ + j] = lp.columns[j][r];
    }
    for (size_t r = 0; r < m_; ++r) tableau_[r * cols_ + n_ + r] = 1.0;
    reduced_.assign(cols_, 0.0);
    upper_.assign(cols_, kInf);
    double cost_scale = 1.0;
    for (size_t j = 0; j < n_; ++j) {
      reduced_[j] = lp.cost[j];
      upper_[j] = lp.upper[j];
      cost_scale = std::max(cost_scale, std::abs(lp.cost[j]));
    }
    cost_tol_ = 1e-12 * cost_scale;
    status_.assign(cols_, Status::kAtLower);
    basis_.resize(m_);
    beta_ = lp.rhs;
    for (size_t r = 0; r < m_; ++r) {
      basis_[r] = n_ + r;
      status_[n_ + r] = Status::kBasic;
    }
  }

  long Run() {
    const long cap = 100L * static_cast<long>(cols_ + m_) + 10000;
    long iter = 0;
    for (; iter < cap; ++iter) {
      const size_t entering = ChooseEntering();
      if (entering == cols_) return iter;
      Step(entering);
    }
    throw ContractViolation("SolvePackingLp: iteration limit exceeded");
  }

  std::vector<double> Solution() const {
    std::vector<double> x(cols_, 0.0);
    for (size_t j = 0; j < cols_; ++j) {
      if (status_[j] == Status::kAtUpper) x[j] = upper_[j];
    }
    for (size_t r = 0; r < m_; ++r) x[basis_[r]] = beta_[r];
    for (size_t j = 0; j < cols_; ++j) {
      x[j] = std::clamp(x[j], 0.0, upper_[j]);
    }
    return x;
  }

 private:
  double* Row(size_t r) { return tableau_.data() + r * cols_; }

  size_t ChooseEntering() const {
    for (size_t j = 0; j < cols_; ++j) {
      if (status_[j] == Status::kAtLower && reduced_[j] > cost_tol_) return j;
      if (status_[j] == Status::kAtUpper && reduced_[j] < -cost_tol_) return j;
    }
    return cols_;
  }

  void Step(size_t j) {
    const double dir = status_[j] == Status::kAtLower ? 1.0 : -1.0;
    // Basic variable in row r moves by -dir * T[r][j] * theta.
    double best = upper_[j];
    size_t leave_row = m_;
    bool leave_to_upper = false;
    for (size_t r = 0; r < m_; ++r) {
      const double a = dir * tableau_[r * cols_ + j];
      double limit = kInf;
      bool to_upper = false;
      if (a > kPivotTol) {
        limit = std::max(0.0, beta_[r]) / a;
      } else if (a < -kPivotTol && upper_[basis_[r]] < kInf) {
        limit = std::max(0.0, upper_[basis_[r]] - beta_[r]) / -a;
        to_upper = true;
      } else {
        continue;
      }
      if (limit < best ||
          (limit == best && leave_row < m_ && basis_[r] < basis_[leave_row])) {
        best = limit;
        leave_row = r;
        leave_to_upper = to_upper;
      }
    }
    if (leave_row == m_ && best == kInf) {
      throw ContractViolation("SolvePackingLp: unbounded direction");
    }
    const double theta = best;
    for (size_t r = 0; r < m_; ++r) {
      beta_[r] -= dir * tableau_[r * cols_ + j] * theta;
    }
    if (leave_row == m_) {
      // Bound flip, basis unchanged.
      status_[j] = status_[j] == Status::kAtLower ? Status::kAtUpper
                                                  : Status::kAtLower;
      return;
    }
    const double entering_value =
        status_[j] == Status::kAtLower ? theta : upper_[j] - theta;
    const size_t leaving = basis_[leave_row];
    status_[leaving] = leave_to_upper ? Status::kAtUpper : Status::kAtLower;
    status_[j] = Status::kBasic;
    basis_[leave_row] = j;
    beta_[leave_row] = entering_value;
    Pivot(leave_row, j);
  }

  void Pivot(size_t pr, size_t pc) {
    double* prow = Row(pr);
    const double inv = 1.0 / prow[pc];
    for (size_t k = 0; k < cols_; ++k) prow[k] *= inv;
    prow[pc] = 1.0;
    const std::span<const double> pivot_row(prow, cols_);
    for (size_t r = 0; r < m_; ++r) {
      if (r == pr) continue;
      double* row = Row(r);
      const double f = row[pc];
      if (f == 0.0) continue;
      kernels::Axpy(-f, pivot_row, std::span<double>(row, cols_));
      row[pc] = 0.0;
    }
    const double f = reduced_[pc];
    if (f != 0.0) {
      kernels::Axpy(-f, pivot_row, reduced_);
      reduced_[pc] = 0.0;
    }
  }

  size_t m_;
  size_t n_;
  size_t cols_;
  std::vector<double> tableau_;  // m_ x cols_, row-major
  std::vector<double> reduced_;
  std::vector<double> upper_;
  std::vector<Status> status_;
  std::vector<size_t> basis_;
  std::vector<double> beta_;  // values of the basic variables
  double cost_tol_ = 1e-12;
};

}  // namespace

LpSolution SolvePackingLp(const PackingLp& lp) {
  const size_t n = lp.cost.size();
  const size_t m = lp.rhs.size();
  if (lp.columns.size() != n || lp.upper.size() != n) {
    throw ContractViolation("SolvePackingLp: inconsistent column count");
  }
  for (double b : lp.rhs) {
    if (!(b >= 0.0)) throw ContractViolation("SolvePackingLp: negative rhs");
  }
  for (size_t j = 0; j < n; ++j) {
    if (lp.columns[j].size() != m) {
      throw ContractViolation("SolvePackingLp: column " + std::to_string(j) +
                              " has wrong length");
    }
    if (!(lp.upper[j] >= 0.0)) {
      throw ContractViolation("SolvePackingLp: negative upper bound");
    }
  }
  LpSolution sol;
  if (n == 0) return sol;
  BoundedSimplex simplex(lp);
  sol.iterations = simplex.Run();
  std::vector<double> full = simplex.Solution();
  sol.x.assign(full.begin(), full.begin() + static_cast<long>(n));
  for (size_t j = 0; j < n; ++j) sol.value += lp.cost[j] * sol.x[j];
  for (size_t r = 0; r < m; ++r) {
    if (full[n + r] <= 1e-9 * std::max(1.0, lp.rhs[r])) {
      sol.tight_rows.push_back(static_cast<int>(r));
    }
  }
  return sol;
}

LpSolution LpOpt(std::span<const Item> items, double budget, int d) {
  if (!(budget > 0.0)) throw ContractViolation("LpOpt: budget must be > 0");
  PackingLp lp;
  lp.rhs.assign(static_cast<size_t>(d), budget);
  lp.cost.reserve(items.size());
  lp.columns.reserve(items.size());
  for (const Item& it : items) {
    if (static_cast<int>(it.size.size()) != d) {
      throw ContractViolation("LpOpt: size vector length differs from d");
    }
    lp.cost.push_back(it.value);
    lp.columns.push_back(it.size);
  }
  lp.upper.assign(items.size(), 1.0);
  return SolvePackingLp(lp);
}

}  // namespace byzopt

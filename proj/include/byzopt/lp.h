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

// Dense bounded-variable primal simplex for packing LPs.

#ifndef BYZOPT_LP_H_
#define BYZOPT_LP_H_

#include <span>
#include <vector>

#include "byzopt/model.h"

namespace byzopt {

// max cost.x  s.t.  sum_j columns[j] * x_j <= rhs,  0 <= x_j <= upper[j].
// Columns and rhs must be nonnegative, so x = 0 is always feasible.
struct PackingLp {
  std::vector<double> cost;
  std::vector<std::vector<double>> columns;  // each of length rhs.size()
  std::vector<double> upper;
  std::vector<double> rhs;
};

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
  std::vector<int> tight_rows;
  long iterations = 0;
};

// Slacks start basic; the entering variable is the lowest-index improving
// column and the leaving row is the lowest-index blocking basic variable
// (Bland's rule), so degenerate instances terminate.
LpSolution SolvePackingLp(const PackingLp& lp);

// LP relaxation of the packing instance restricted to `items`:
// max sum c_i x_i s.t. sum a_i x_i <= B * 1, x in [0, 1]^|items|.
LpSolution LpOpt(std::span<const Item> items, double budget, int d);

}  // namespace byzopt

#endif  // BYZOPT_LP_H_

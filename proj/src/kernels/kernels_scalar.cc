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

#include <limits>

#include "byzopt/kernels.h"

namespace byzopt::kernels {
namespace {

double DotScalar(const double* a, const double* b, size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) {
      const double p = a[i + l] * b[i + l];
      lane[l] = lane[l] + p;
    }
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double p = a[i] * b[i];
    sum = sum + p;
  }
  return sum;
}

void AxpyScalar(double alpha, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double p = alpha * x[i];
    y[i] = y[i] + p;
  }
}

bool AnyGreaterScalar(const double* v, size_t n, double bound) {
  for (size_t i = 0; i < n; ++i) {
    if (v[i] > bound) return true;
  }
  return false;
}

double MaxElementScalar(const double* v, size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) {
    if (v[i] > best) best = v[i];
  }
  return best;
}

}  // namespace

const KernelTable& ScalarTable() {
  static const KernelTable table = {DotScalar, AxpyScalar, AnyGreaterScalar,
                                    MaxElementScalar};
  return table;
}

}  // namespace byzopt::kernels

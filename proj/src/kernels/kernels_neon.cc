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

// AArch64 variant. Two float64x2 accumulators reproduce the four-lane
// order of the scalar reference.

#include <arm_neon.h>

#include <limits>

#include "byzopt/kernels.h"

namespace byzopt::kernels {
namespace {

double DotNeon(const double* a, const double* b, size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc23 = vaddq_f64(acc23,
                      vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  const double l0 = vgetq_lane_f64(acc01, 0);
  const double l1 = vgetq_lane_f64(acc01, 1);
  const double l2 = vgetq_lane_f64(acc23, 0);
  const double l3 = vgetq_lane_f64(acc23, 1);
  double sum = (l0 + l1) + (l2 + l3);
  for (; i < n; ++i) {
    const double p = a[i] * b[i];
    sum = sum + p;
  }
  return sum;
}

void AxpyNeon(double alpha, const double* x, double* y, size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) {
    const double p = alpha * x[i];
    y[i] = y[i] + p;
  }
}

bool AnyGreaterNeon(const double* v, size_t n, double bound) {
  const float64x2_t vb = vdupq_n_f64(bound);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t gt = vcgtq_f64(vld1q_f64(v + i), vb);
    if ((vgetq_lane_u64(gt, 0) | vgetq_lane_u64(gt, 1)) != 0) return true;
  }
  for (; i < n; ++i) {
    if (v[i] > bound) return true;
  }
  return false;
}

double MaxElementNeon(const double* v, size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  float64x2_t best = vdupq_n_f64(m);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) best = vmaxq_f64(best, vld1q_f64(v + i));
  const double l0 = vgetq_lane_f64(best, 0);
  const double l1 = vgetq_lane_f64(best, 1);
  if (l0 > m) m = l0;
  if (l1 > m) m = l1;
  for (; i < n; ++i) {
    if (v[i] > m) m = v[i];
  }
  return m;
}

}  // namespace

const KernelTable& NeonTable() {
  static const KernelTable table = {DotNeon, AxpyNeon, AnyGreaterNeon,
                                    MaxElementNeon};
  return table;
}

}  // namespace byzopt::kernels

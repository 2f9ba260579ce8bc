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

// Compiled with -mavx2 only; never call into this file without checking
// the CPU first (see dispatch.cc).

#include <immintrin.h>

#include <limits>

#include "byzopt/kernels.h"

namespace byzopt::kernels {
namespace {

double DotAvx2(const double* a, const double* b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, p);
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double p = a[i] * b[i];
    sum = sum + p;
  }
  return sum;
}

void AxpyAvx2(double alpha, const double* x, double* y, size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
  }
  for (; i < n; ++i) {
    const double p = alpha * x[i];
    y[i] = y[i] + p;
  }
}

bool AnyGreaterAvx2(const double* v, size_t n, double bound) {
  const __m256d vb = _mm256_set1_pd(bound);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(v + i), vb, _CMP_GT_OQ);
    if (_mm256_movemask_pd(gt) != 0) return true;
  }
  for (; i < n; ++i) {
    if (v[i] > bound) return true;
  }
  return false;
}

double MaxElementAvx2(const double* v, size_t n) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  __m256d best = _mm256_set1_pd(kNegInf);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    best = _mm256_max_pd(best, _mm256_loadu_pd(v + i));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, best);
  double m = kNegInf;
  for (double x : lane) {
    if (x > m) m = x;
  }
  for (; i < n; ++i) {
    if (v[i] > m) m = v[i];
  }
  return m;
}

}  // namespace

const KernelTable& Avx2Table() {
  static const KernelTable table = {DotAvx2, AxpyAvx2, AnyGreaterAvx2,
                                    MaxElementAvx2};
  return table;
}

}  // namespace byzopt::kernels

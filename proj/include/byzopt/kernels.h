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

// Dense vector kernels behind the pick rule, occupation bookkeeping and the
// simplex pivots.
//
// Every instruction-set variant produces bit-identical results to the scalar
// reference: Dot accumulates in four interleaved lanes (element i goes to lane
// i % 4), reduces them as (l0 + l1) + (l2 + l3), and then adds the tail
// sequentially. No variant uses fused multiply-add. Experiments are therefore
// reproducible regardless of which variant the dispatcher picks.

#ifndef BYZOPT_KERNELS_H_
#define BYZOPT_KERNELS_H_

#include <cstddef>
#include <span>

namespace byzopt::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

struct KernelTable {
  double (*dot)(const double* a, const double* b, size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, size_t n);
  // true iff some v[i] > bound
  bool (*any_greater)(const double* v, size_t n, double bound);
  // -inf for n == 0
  double (*max_element)(const double* v, size_t n);
};

const KernelTable& ScalarTable();

// Table for `isa`, or nullptr when it was not compiled in or the CPU lacks it.
const KernelTable* TableFor(Isa isa);

const char* IsaName(Isa isa);

// Best available ISA. BYZOPT_SIMD=scalar|avx2|neon in the environment
// overrides the choice (an unavailable request falls back to scalar).
Isa ActiveIsa();

// Forces the dispatcher; intended for tests and benchmarks.
void SetActiveIsa(Isa isa);

double Dot(std::span<const double> a, std::span<const double> b);
void Axpy(double alpha, std::span<const double> x, std::span<double> y);
bool AnyGreater(std::span<const double> v, double bound);
double MaxElement(std::span<const double> v);

}  // namespace byzopt::kernels

#endif  // BYZOPT_KERNELS_H_

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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "byzopt/errors.h"
#include "byzopt/kernels.h"

namespace byzopt::kernels {

#if defined(BYZOPT_HAVE_AVX2)
const KernelTable& Avx2Table();
#endif
#if defined(BYZOPT_HAVE_NEON)
const KernelTable& NeonTable();
#endif

namespace {

bool CpuHasAvx2() {
#if defined(BYZOPT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa DetectIsa() {
  if (const char* env = std::getenv("BYZOPT_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::kScalar;
    if (std::strcmp(env, "avx2") == 0) {
      return TableFor(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
    }
    if (std::strcmp(env, "neon") == 0) {
      return TableFor(Isa::kNeon) ? Isa::kNeon : Isa::kScalar;
    }
  }
  if (TableFor(Isa::kAvx2)) return Isa::kAvx2;
  if (TableFor(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

struct Active {
  std::atomic<const KernelTable*> table;
  std::atomic<Isa> isa;
  Active() {
    const Isa detected = DetectIsa();
    isa.store(detected);
    table.store(TableFor(detected));
  }
};

Active& GetActive() {
  static Active active;
  return active;
}

inline const KernelTable& T() {
  return *GetActive().table.load(std::memory_order_relaxed);
}

}  // namespace

const KernelTable* TableFor(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &ScalarTable();
    case Isa::kAvx2:
#if defined(BYZOPT_HAVE_AVX2)
      if (CpuHasAvx2()) return &Avx2Table();
#endif
      return nullptr;
    case Isa::kNeon:
#if defined(BYZOPT_HAVE_NEON)
      return &NeonTable();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const char* IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

Isa ActiveIsa() { return GetActive().isa.load(); }

void SetActiveIsa(Isa isa) {
  const KernelTable* table = TableFor(isa);
  if (table == nullptr) {
    throw ConfigError(std::string("SIMD variant not available: ") +
                      IsaName(isa));
  }
  GetActive().table.store(table);
  GetActive().isa.store(isa);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ContractViolation("Dot: length mismatch");
  return T().dot(a.data(), b.data(), a.size());
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw ContractViolation("Axpy: length mismatch");
  T().axpy(alpha, x.data(), y.data(), x.size());
}

bool AnyGreater(std::span<const double> v, double bound) {
  return T().any_greater(v.data(), v.size(), bound);
}

double MaxElement(std::span<const double> v) {
  return T().max_element(v.data(), v.size());
}

}  // namespace byzopt::kernels

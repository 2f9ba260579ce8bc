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

#include "byzopt/rng.h"

#include <cmath>

#include "byzopt/errors.h"

namespace byzopt {

uint64_t Rng::Mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  if (hi < lo) throw ContractViolation("UniformInt: empty range");
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<int64_t>(engine_());
  const uint64_t range = span + 1;
  // Reject the top partial block of size 2^64 mod range.
  const uint64_t partial = (UINT64_MAX % range + 1) % range;
  const uint64_t limit = UINT64_MAX - partial;
  uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return lo + static_cast<int64_t>(x % range);
}

double Rng::Exponential(double mean) {
  return -mean * std::log1p(-UniformDouble());
}

}  // namespace byzopt

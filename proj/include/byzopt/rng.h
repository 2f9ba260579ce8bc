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

#ifndef BYZOPT_RNG_H_
#define BYZOPT_RNG_H_

#include <cstdint>
#include <random>

namespace byzopt {

// Seeded generator with platform-independent derived draws.
//
// std::mt19937_64's raw output sequence is fixed by the standard, but the
// <random> distributions are not, so every draw used by the algorithms goes
// through the helpers below.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(Mix(seed)) {}

  uint64_t Next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) {
    return lo + (hi - lo) * UniformDouble();
  }

  // Uniform integer in [lo, hi], inclusive; unbiased.
  int64_t UniformInt(int64_t lo, int64_t hi);

  bool Bernoulli(double p) { return UniformDouble() < p; }

  double Exponential(double mean);

  // Independent child stream; children with distinct tags never collide.
  Rng Fork(uint64_t tag) { return Rng(Mix(engine_() ^ Mix(tag))); }

  // SplitMix64 finalizer.
  static uint64_t Mix(uint64_t x);

 private:
  std::mt19937_64 engine_;
};

}  // namespace byzopt

#endif  // BYZOPT_RNG_H_

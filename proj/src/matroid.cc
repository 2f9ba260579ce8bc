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


#include "byzopt/matroid.h"

#include <algorithm>
#include <numeric>

#include "byzopt/errors.h"

namespace byzopt {

bool Matroid::CanAdd(std::span<const int> independent_set, int id) const {
  std::vector<int> ids(independent_set.begin(), independent_set.end());
  ids.push_back(id);
  return Independent(ids);
}

UniformMatroid::UniformMatroid(int r) : r_(r) {
  if (r < 0) throw ConfigError("uniform matroid: rank must be >= 0");
}

bool UniformMatroid::Independent(std::span<const int> ids) const {
  return static_cast<int>(ids.size()) <= r_;
}

bool UniformMatroid::CanAdd(std::span<const int> independent_set,
                            int /*id*/) const {
  return static_cast<int>(independent_set.size()) < r_;
}

std::string UniformMatroid::Describe() const {
  return "uniform(r=" + std::to_string(r_) + ")";
}

PartitionMatroid::PartitionMatroid(std::vector<std::vector<int>> blocks,
                                   std::vector<int> caps)
    : blocks_(std::move(blocks)), caps_(std::move(caps)) {
  if (blocks_.size() != caps_.size()) {
    throw ConfigError("partition matroid: blocks and caps differ in length");
  }
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (caps_[b] < 0) throw ConfigError("partition matroid: negative cap");
    for (int id : blocks_[b]) {
      if (id < 0) throw ConfigError("partition matroid: negative id");
      if (static_cast<size_t>(id) >= block_of_.size()) {
        block_of_.resize(static_cast<size_t>(id) + 1, -1);
      }
      if (block_of_[static_cast<size_t>(id)] != -1) {
        throw ConfigError("partition matroid: id " + std::to_string(id) +
                          " listed in two blocks");
      }
      block_of_[static_cast<size_t>(id)] = static_cast<int>(b);
    }
    rank_ += std::min(caps_[b], static_cast<int>(blocks_[b].size()));
  }
}

int PartitionMatroid::BlockOf(int id) const {
  if (id < 0 || static_cast<size_t>(id) >= block_of_.size()) return -1;
  return block_of_[static_cast<size_t>(id)];
}

bool PartitionMatroid::Independent(std::span<const int> ids) const {
  std::vector<int> used(blocks_.size(), 0);
  for (int id : ids) {
    const int b = BlockOf(id);
    if (b < 0) return false;
    if (++used[static_cast<size_t>(b)] > caps_[static_cast<size_t>(b)]) {
      return false;
    }
  }
  return true;
}

bool PartitionMatroid::CanAdd(std::span<const int> independent_set,
                              int id) const {
  const int b = BlockOf(id);
  if (b < 0) return false;
  int used = 0;
  for (int other : independent_set) {
    if (BlockOf(other) == b) ++used;
  }
  return used < caps_[static_cast<size_t>(b)];
}

std::string PartitionMatroid::Describe() const {
  return "partition(blocks=" + std::to_string(blocks_.size()) +
         ", rank=" + std::to_string(rank_) + ")";
}

ExplicitBasisMatroid::ExplicitBasisMatroid(std::vector<std::vector<int>> bases)
    : bases_(std::move(bases)) {
  if (bases_.empty()) {
    throw ConfigError("explicit matroid: at least one basis is required");
  }
  for (auto& b : bases_) std::sort(b.begin(), b.end());
  rank_ = static_cast<int>(bases_.front().size());
  for (const auto& b : bases_) {
    if (static_cast<int>(b.size()) != rank_) {
      throw ConfigError("explicit matroid: bases differ in size");
    }
  }
}

bool ExplicitBasisMatroid::Independent(std::span<const int> ids) const {
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(bases_.begin(), bases_.end(), [&](const auto& b) {
    return std::includes(b.begin(), b.end(), sorted.begin(), sorted.end());
  });
}

std::string ExplicitBasisMatroid::Describe() const {
  return "explicit(bases=" + std::to_string(bases_.size()) +
         ", rank=" + std::to_string(rank_) + ")";
}

namespace {

// Random independent set built by greedy insertion in random order.
std::vector<int> RandomIndependent(const Matroid& m, int n, Rng& rng) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<size_t>(i)],
              order[static_cast<size_t>(rng.UniformInt(0, i))]);
  }
  std::vector<int> set;
  const int keep = static_cast<int>(rng.UniformInt(0, n));
  for (int id : order) {
    if (static_cast<int>(set.size()) >= keep) break;
    if (m.CanAdd(set, id)) set.push_back(id);
  }
  return set;
}

}  // namespace

std::string CheckMatroidAxioms(const Matroid& matroid, int n, Rng& rng,
                               int samples) {
  if (!matroid.Independent({})) return "empty set is not independent";
  for (int s = 0; s < samples; ++s) {
    const std::vector<int> a = RandomIndependent(matroid, n, rng);
    if (!matroid.Independent(a)) return "greedy set is not independent";
    std::vector<int> sub;
    for (int id : a) {
      if (rng.Bernoulli(0.5)) sub.push_back(id);
    }
    if (!matroid.Independent(sub)) return "subset of independent set rejected";
    const std::vector<int> b = RandomIndependent(matroid, n, rng);
    const auto& small = a.size() < b.size() ? a : b;
    const auto& large = a.size() < b.size() ? b : a;
    if (small.size() == large.size()) continue;
    bool extended = false;
    for (int id : large) {
      if (std::find(small.begin(), small.end(), id) != small.end()) continue;
      if (matroid.CanAdd(small, id)) {
        extended = true;
        break;
      }
    }
    if (!extended) return "exchange property fails";
  }
  return "";
}

}  // namespace byzopt

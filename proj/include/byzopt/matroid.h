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


// Matroid independence oracles over item ids.

#ifndef BYZOPT_MATROID_H_
#define BYZOPT_MATROID_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "byzopt/rng.h"

namespace byzopt {

class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int rank() const = 0;

  // `ids` holds distinct item ids.
  virtual bool Independent(std::span<const int> ids) const = 0;

  // Whether `independent_set + {id}` is independent. The default copies and
  // calls Independent; subclasses answer without allocating.
  virtual bool CanAdd(std::span<const int> independent_set, int id) const;

  virtual std::string Describe() const = 0;
};

// Every set of at most r elements is independent.
class UniformMatroid : public Matroid {
 public:
  explicit UniformMatroid(int r);

  int rank() const override { return r_; }
  bool Independent(std::span<const int> ids) const override;
  bool CanAdd(std::span<const int> independent_set, int id) const override;
  std::string Describe() const override;

 private:
  int r_;
};

// A set is independent iff it takes at most caps[b] elements from block b.
// Ids outside every block are loops (never independent).
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<std::vector<int>> blocks, std::vector<int> caps);

  int rank() const override { return rank_; }
  bool Independent(std::span<const int> ids) const override;
  bool CanAdd(std::span<const int> independent_set, int id) const override;
  std::string Describe() const override;

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

 private:
  int BlockOf(int id) const;

  std::vector<std::vector<int>> blocks_;
  std::vector<int> caps_;
  std::vector<int> block_of_;  // indexed by id, -1 for loops
  int rank_ = 0;
};

// Independent sets are the subsets of the listed bases. The caller is
// responsible for supplying a genuine basis family (all of equal size and
// satisfying basis exchange); CheckMatroidAxioms can verify small ones.
class ExplicitBasisMatroid : public Matroid {
 public:
  explicit ExplicitBasisMatroid(std::vector<std::vector<int>> bases);

  int rank() const override { return rank_; }
  bool Independent(std::span<const int> ids) const override;
  std::string Describe() const override;

 private:
  std::vector<std::vector<int>> bases_;  // each sorted
  int rank_ = 0;
};

// Randomized spot check of the independence axioms on ground set
// {0, ..., n-1}: the empty set is independent, subsets of sampled independent
// sets are independent, and the exchange property holds for sampled pairs.
// Returns an empty string on success, else a description of the failure.
std::string CheckMatroidAxioms(const Matroid& matroid, int n, Rng& rng,
                               int samples);

}  // namespace byzopt

#endif  // BYZOPT_MATROID_H_

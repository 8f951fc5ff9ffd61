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

#ifndef CSFM_MATROID_H_
#define CSFM_MATROID_H_

#include <string>
#include <utility>
#include <vector>

#include "csfm/subset.h"

namespace csfm {

enum class MatroidKind { kUniform, kPartition, kGraphic };

std::string ToString(MatroidKind kind);

// Matroids with trivial independence oracles. Immutable after construction.
class Matroid {
 public:
  static Matroid Uniform(int n, int rank);
  // `blocks` must partition the ground set {0..n-1}.
  static Matroid Partition(int n, std::vector<Mask> blocks,
                           std::vector<int> capacities);
  // Ground element i is edges[i]; independent sets are forests.
  static Matroid Graphic(int num_vertices,
                         std::vector<std::pair<int, int>> edges);

  MatroidKind kind() const { return kind_; }
  int ground_size() const { return n_; }

  bool IsIndependent(Mask s) const;

  // Size of a largest independent subset of s (greedy).
  int Rank(Mask s) const;

  int uniform_rank() const { return rank_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  Matroid(MatroidKind kind, int n) : kind_(kind), n_(n) {}

  MatroidKind kind_;
  int n_;
  int rank_ = 0;
  std::vector<Mask> blocks_;
  std::vector<int> capacities_;
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace csfm

#endif  // CSFM_MATROID_H_

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

#include "csfm/matroid.h"

#include <numeric>
#include <stdexcept>

namespace csfm {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  // False if x and y were already connected.
  bool Union(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent_[static_cast<std::size_t>(x)] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string ToString(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kGraphic:
      return "graphic";
  }
  return "unknown";
}

Matroid Matroid::Uniform(int n, int rank) {
  if (n < 0 || n > kMaxGroundSize || rank < 0 || rank > n) {
    throw std::invalid_argument("uniform matroid: bad size or rank");
  }
  Matroid m(MatroidKind::kUniform, n);
  m.rank_ = rank;
  return m;
}

Matroid Matroid::Partition(int n, std::vector<Mask> blocks,
                           std::vector<int> capacities) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("partition matroid: bad ground size");
  }
  if (blocks.size() != capacities.size()) {
    throw std::invalid_argument("partition matroid: one capacity per block");
  }
  Mask seen = 0;
  for (Mask b : blocks) {
    if ((b & seen) != 0) {
      throw std::invalid_argument("partition matroid: blocks overlap");
    }
    seen |= b;
  }
  if (seen != FullMask(n)) {
    throw std::invalid_argument(
        "partition matroid: blocks must cover the ground set");
  }
  for (int c : capacities) {
    if (c < 0) throw std::invalid_argument("partition matroid: capacity < 0");
  }
  Matroid m(MatroidKind::kPartition, n);
  m.blocks_ = std::move(blocks);
  m.capacities_ = std::move(capacities);
  return m;
}

Matroid Matroid::Graphic(int num_vertices,
                         std::vector<std::pair<int, int>> edges) {
  const int n = static_cast<int>(edges.size());
  if (n > kMaxGroundSize || num_vertices < 0) {
    throw std::invalid_argument("graphic matroid: bad size");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw std::invalid_argument("graphic matroid: endpoint out of range");
    }
  }
  Matroid m(MatroidKind::kGraphic, n);
  m.num_vertices_ = num_vertices;
  m.edges_ = std::move(edges);
  return m;
}

bool Matroid::IsIndependent(Mask s) const {
  if (!IsSubset(s, FullMask(n_))) return false;
  switch (kind_) {
    case MatroidKind::kUniform:
      return Cardinality(s) <= rank_;
    case MatroidKind::kPartition:
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (Cardinality(s & blocks_[b]) > capacities_[b]) return false;
      }
      return true;
    case MatroidKind::kGraphic: {
      UnionFind forest(num_vertices_);
      for (int e : Elements(s)) {
        const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
        if (!forest.Union(u, v)) return false;
      }
      return true;
    }
  }
  return false;
}

int Matroid::Rank(Mask s) const {
  Mask independent = 0;
  for (int e : Elements(s & FullMask(n_))) {
    if (IsIndependent(independent | Singleton(e))) {
      independent |= Singleton(e);
    }
  }
  return Cardinality(independent);
}

}  // namespace csfm

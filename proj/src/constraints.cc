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

#include "csfm/constraints.h"

#include <memory>
#include <stdexcept>
#include <string>

namespace csfm {
namespace {

void RequireSmall(const FeasibilityFamily& family) {
  if (family.ground_size() > kMaxExchangeCheckSize) {
    throw std::length_error("exchange checks need n <= 8");
  }
}

// Backtracking search for the Y_e of one pair (S, T).
class ExchangeSearch {
 public:
  ExchangeSearch(const FeasibilityFamily& family, Mask s, Mask t, int k)
      : family_(family),
        s_(s),
        added_(Elements(t & ~s)),
        k_(k) {
    ForEachSubsetUpTo(s & ~t, k, [&](Mask y) { candidates_.push_back(y); });
    usage_.assign(static_cast<std::size_t>(family.ground_size()), 0);
    removed_.assign(added_.size(), 0);
  }

  bool Run() { return Assign(0); }

 private:
  bool Assign(std::size_t i) {
    if (i == added_.size()) return true;
    for (Mask y : candidates_) {
      bool fits = true;
      for (int e : Elements(y)) {
        if (usage_[e] + 1 > k_) fits = false;
      }
      if (!fits) continue;
      for (int e : Elements(y)) ++usage_[e];
      removed_[i] = y;
      if (NewSubsetsFeasible(i) && Assign(i + 1)) return true;
      for (int e : Elements(y)) --usage_[e];
    }
    return false;
  }

  // Checks every T' <= {added_[0..i]} that contains added_[i].
  bool NewSubsetsFeasible(std::size_t i) const {
    const std::size_t prefix = i;
    for (std::size_t bits = 0; bits < (std::size_t{1} << prefix); ++bits) {
      Mask removed = removed_[i];
      Mask inserted = Singleton(added_[i]);
      for (std::size_t j = 0; j < prefix; ++j) {
        if ((bits >> j) & 1) {
          removed |= removed_[j];
          inserted |= Singleton(added_[j]);
        }
      }
      if (!family_.Contains((s_ & ~removed) | inserted)) return false;
    }
    return true;
  }

  const FeasibilityFamily& family_;
  Mask s_;
  std::vector<int> added_;
  int k_;
  std::vector<Mask> candidates_;
  std::vector<int> usage_;
  std::vector<Mask> removed_;
};

}  // namespace

FeasibilityFamily PowerSetFamily(int n) {
  return FeasibilityFamily::MatroidIntersection(n, {Matroid::Uniform(n, n)});
}

FeasibilityFamily MatroidFamily(Matroid matroid) {
  const int n = matroid.ground_size();
  return FeasibilityFamily::MatroidIntersection(n, {std::move(matroid)});
}

std::vector<Matroid> BipartiteMatchingMatroids(
    int left, int right, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<Mask> left_blocks(static_cast<std::size_t>(left), 0);
  std::vector<Mask> right_blocks(static_cast<std::size_t>(right), 0);
  for (int i = 0; i < n; ++i) {
    const auto [l, r] = edges[i];
    if (l < 0 || l >= left || r < 0 || r >= right) {
      throw std::invalid_argument("bipartite edge endpoint out of range");
    }
    left_blocks[l] |= Singleton(i);
    right_blocks[r] |= Singleton(i);
  }
  auto make = [n](std::vector<Mask> blocks) {
    std::vector<Mask> nonempty;
    for (Mask b : blocks) {
      if (b != 0) nonempty.push_back(b);
    }
    std::vector<int> caps(nonempty.size(), 1);
    return Matroid::Partition(n, std::move(nonempty), std::move(caps));
  };
  return {make(std::move(left_blocks)), make(std::move(right_blocks))};
}

FeasibilityFamily BMatchingFamily(int num_vertices,
                                  std::vector<std::pair<int, int>> edges,
                                  std::vector<int> capacities) {
  const int n = static_cast<int>(edges.size());
  if (n > kMaxGroundSize) throw std::invalid_argument("b-matching: too big");
  if (capacities.size() != static_cast<std::size_t>(num_vertices)) {
    throw std::invalid_argument("b-matching: one capacity per vertex");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices || u == v) {
      throw std::invalid_argument("b-matching: bad edge");
    }
  }
  auto shared_edges =
      std::make_shared<const std::vector<std::pair<int, int>>>(
          std::move(edges));
  auto shared_caps = std::make_shared<const std::vector<int>>(
      std::move(capacities));
  FeasibilityFamily family(
      n,
      [shared_edges, shared_caps](Mask s) {
        std::vector<int> degree(shared_caps->size(), 0);
        for (int e : Elements(s)) {
          const auto& [u, v] = (*shared_edges)[e];
          if (++degree[u] > (*shared_caps)[u]) return false;
          if (++degree[v] > (*shared_caps)[v]) return false;
        }
        return true;
      },
      /*down_closed=*/true, FamilyBackend::kKExchange,
      "b_matching(" + std::to_string(n) + " edges)");
  family.set_claimed_k(2);
  return family;
}

FeasibilityFamily ExplicitKExchangeFamily(int n, std::vector<Mask> sets,
                                          int claimed_k) {
  FeasibilityFamily base = FeasibilityFamily::Explicit(n, std::move(sets));
  if (!base.is_down_closed()) {
    throw std::invalid_argument(
        "a k-exchange family must be an independence system");
  }
  base.set_claimed_k(claimed_k);
  return base;
}

ExchangeCheck CheckExchangeAxiom(const FeasibilityFamily& family) {
  RequireSmall(family);
  const std::vector<Mask> members = family.Enumerate();
  for (Mask i : members) {
    for (Mask j : members) {
      if (Cardinality(i) >= Cardinality(j)) continue;
      bool augmentable = false;
      for (int e : Elements(j & ~i)) {
        if (family.Contains(i | Singleton(e))) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable) return {false, std::make_pair(i, j)};
    }
  }
  return {true, std::nullopt};
}

ExchangeCheck CheckExchangeAxiom(const Matroid& matroid) {
  return CheckExchangeAxiom(MatroidFamily(matroid));
}

ExchangeCheck CheckKExchange(const FeasibilityFamily& family, int k) {
  RequireSmall(family);
  if (k < 1) throw std::invalid_argument("k-exchange check needs k >= 1");
  const std::vector<Mask> members = family.Enumerate();
  for (Mask s : members) {
    for (Mask t : members) {
      if (!ExchangeSearch(family, s, t, k).Run()) {
        return {false, std::make_pair(s, t)};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace csfm

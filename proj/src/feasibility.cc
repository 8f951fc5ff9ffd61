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

#include "csfm/feasibility.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace csfm {

std::string ToString(FamilyBackend backend) {
  switch (backend) {
    case FamilyBackend::kExplicit:
      return "explicit";
    case FamilyBackend::kMatroidIntersection:
      return "k_intersection";
    case FamilyBackend::kKExchange:
      return "k_exchange";
    case FamilyBackend::kHardness:
      return "hardness";
  }
  return "unknown";
}

FeasibilityFamily::FeasibilityFamily(int n, Membership membership,
                                     bool down_closed, FamilyBackend backend,
                                     std::string description)
    : n_(n),
      membership_(std::move(membership)),
      down_closed_(down_closed),
      backend_(backend),
      description_(std::move(description)),
      restriction_(FullMask(n)) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("family: ground size must be in [0, 64]");
  }
  if (down_closed_ && !membership_(0)) {
    throw std::invalid_argument(
        "family flagged down-closed but the empty set is infeasible");
  }
}

FeasibilityFamily FeasibilityFamily::Explicit(int n, std::vector<Mask> sets) {
  if (sets.empty()) throw std::invalid_argument("explicit family is empty");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (Mask s : sets) {
    if (!IsSubset(s, FullMask(n))) {
      throw std::invalid_argument("explicit family: set outside ground set");
    }
  }
  auto list = std::make_shared<const std::vector<Mask>>(std::move(sets));
  auto lookup = std::make_shared<std::unordered_set<Mask>>(list->begin(),
                                                           list->end());
  bool down_closed = true;
  for (Mask s : *list) {
    for (int e : Elements(s)) {
      if (!lookup->count(s & ~Singleton(e))) {
        down_closed = false;
        break;
      }
    }
    if (!down_closed) break;
  }
  FeasibilityFamily family(
      n, [lookup](Mask s) { return lookup->count(s) > 0; }, down_closed,
      FamilyBackend::kExplicit,
      "explicit(" + std::to_string(list->size()) + " sets)");
  family.explicit_ = std::move(list);
  return family;
}

FeasibilityFamily FeasibilityFamily::MatroidIntersection(
    int n, std::vector<Matroid> matroids) {
  if (matroids.empty()) {
    throw std::invalid_argument("matroid intersection needs k >= 1 matroids");
  }
  std::string description = "intersection(";
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    if (matroids[i].ground_size() != n) {
      throw std::invalid_argument(
          "matroid intersection: ground set sizes differ");
    }
    description += (i ? "," : "") + ToString(matroids[i].kind());
  }
  description += ")";
  auto shared = std::make_shared<const std::vector<Matroid>>(
      std::move(matroids));
  FeasibilityFamily family(
      n,
      [shared](Mask s) {
        for (const auto& m : *shared) {
          if (!m.IsIndependent(s)) return false;
        }
        return true;
      },
      /*down_closed=*/true, FamilyBackend::kMatroidIntersection,
      std::move(description));
  family.matroids_ = std::move(shared);
  return family;
}

std::vector<Mask> FeasibilityFamily::Enumerate() const {
  if (explicit_) {
    std::vector<Mask> out;
    for (Mask s : *explicit_) {
      if (IsSubset(s, restriction_)) out.push_back(s);
    }
    return out;
  }
  if (Cardinality(restriction_) > 24) {
    throw std::length_error("family enumeration needs at most 24 elements");
  }
  std::vector<Mask> out;
  for (Mask s : AllSubsets(restriction_)) {
    if (membership_(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FeasibilityFamily FeasibilityFamily::Restrict(Mask ground) const {
  FeasibilityFamily out = *this;
  out.restriction_ = restriction_ & ground;
  return out;
}

bool CheckDownClosed(const FeasibilityFamily& family) {
  if (family.ground_size() > 20) {
    throw std::length_error("down-closure check needs at most 20 elements");
  }
  for (Mask s : family.Enumerate()) {
    for (int e : Elements(s)) {
      if (!family.Contains(s & ~Singleton(e))) return false;
    }
  }
  return true;
}

}  // namespace csfm

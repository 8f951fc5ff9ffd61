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

#ifndef CSFM_BRUTE_FORCE_H_
#define CSFM_BRUTE_FORCE_H_

#include <optional>
#include <utility>
#include <vector>

#include "csfm/feasibility.h"
#include "csfm/oracle.h"
#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

inline constexpr int kMaxSubmodularCheckSize = 16;
inline constexpr int kMaxBruteForceSize = 20;

struct SubmodularityCheck {
  bool submodular = true;
  // A pair (S, T) with f(S u T) + f(S n T) > f(S) + f(T), when one exists.
  std::optional<std::pair<Mask, Mask>> violation;
};

// Decides submodularity of an explicit table over n <= 16 elements. Uses the
// local form f(S+a) + f(S+b) >= f(S+a+b) + f(S), which is equivalent to the
// pairwise inequality; a local violation is reported as the pair
// (S+a, S+b). Throws std::length_error for n > 16.
SubmodularityCheck CheckSubmodular(int n, const std::vector<Rational>& table);
SubmodularityCheck CheckSubmodular(const SubmodularOracle& f);

// Full check of f(S) <= f(T) for S subset of T (n <= 16).
bool CheckMonotone(const SubmodularOracle& f);

struct Optimum {
  Mask set = 0;
  Rational value;
};

// Maximizes f over F by enumerating every subset. Ties go to the smallest
// cardinality, then the lexicographically smallest set. Throws
// std::length_error when n > 20 and std::invalid_argument when F is empty.
Optimum BruteForceOpt(const SubmodularOracle& f,
                      const FeasibilityFamily& family);

// Drops every u with {u} infeasible or f({u}) <= f(empty). Requires a
// down-closed family; throws std::invalid_argument otherwise. Returns the
// kept elements within `ground`.
Mask PruneGroundSet(Mask ground, const FeasibilityFamily& family,
                    const SubmodularOracle& f);

}  // namespace csfm

#endif  // CSFM_BRUTE_FORCE_H_

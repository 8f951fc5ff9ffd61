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

#ifndef CSFM_ADJACENCY_H_
#define CSFM_ADJACENCY_H_

#include <vector>

#include "csfm/feasibility.h"
#include "csfm/subset.h"

namespace csfm {

inline constexpr std::size_t kMaxAdjacencyFamilySize = 4096;

// Whether chi^S and chi^U are adjacent vertices of conv{chi^F : F in sets}.
//
// The midpoint (chi^S + chi^U)/2 is written as a convex combination of
// vertices minimizing lambda_S + lambda_U; the two are adjacent iff that
// minimum is 1. Only vertices F with S n U <= F <= S u U can carry weight
// (every other vertex disagrees with the midpoint on a 0/1 coordinate), so
// the LP is restricted to that interval.
//
// `sets` must be sorted and duplicate-free. Throws std::domain_error if
// S or U is not a member or S == U, and std::length_error above 4096 sets.
bool VertexAdjacency(const std::vector<Mask>& sets, Mask s, Mask u);

// Same, over the enumerated members of `family`.
bool VertexAdjacency(const FeasibilityFamily& family, Mask s, Mask u);

}  // namespace csfm

#endif  // CSFM_ADJACENCY_H_

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

#include "csfm/adjacency.h"

#include <algorithm>
#include <stdexcept>

#include "csfm/lp.h"

namespace csfm {

bool VertexAdjacency(const std::vector<Mask>& sets, Mask s, Mask u) {
  if (sets.size() > kMaxAdjacencyFamilySize) {
    throw std::length_error("adjacency test needs at most 4096 sets");
  }
  if (s == u) throw std::domain_error("adjacency test needs S != U");
  if (!std::binary_search(sets.begin(), sets.end(), s) ||
      !std::binary_search(sets.begin(), sets.end(), u)) {
    throw std::domain_error("adjacency test: S or U is not feasible");
  }
  const Mask lower = s & u;
  const Mask upper = s | u;
  std::vector<Mask> interval;
  for (Mask f : sets) {
    if (IsSubset(lower, f) && IsSubset(f, upper)) interval.push_back(f);
  }
  if (interval.size() == 2) return true;

  const std::vector<int> free_elements = Elements(s ^ u);
  LinearProgram lp;
  lp.num_variables = static_cast<int>(interval.size());
  lp.direction = OptimizationDirection::kMinimize;
  lp.objective.assign(interval.size(), Rational(0));
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (interval[i] == s || interval[i] == u) lp.objective[i] = 1;
  }
  lp.AddConstraint(std::vector<Rational>(interval.size(), Rational(1)),
                   ConstraintSense::kEqual, 1);
  const Rational half(1, 2);
  for (int e : free_elements) {
    std::vector<Rational> row(interval.size(), Rational(0));
    for (std::size_t i = 0; i < interval.size(); ++i) {
      if (Contains(interval[i], e)) row[i] = 1;
    }
    lp.AddConstraint(std::move(row), ConstraintSense::kEqual, half);
  }
  const LpResult result = SolveLp(lp);
  if (result.status != LpStatus::kOptimal) {
    throw std::logic_error("adjacency LP not optimal: " +
                           ToString(result.status));
  }
  return result.objective_value == 1;
}

bool VertexAdjacency(const FeasibilityFamily& family, Mask s, Mask u) {
  return VertexAdjacency(family.Enumerate(), s, u);
}

}  // namespace csfm

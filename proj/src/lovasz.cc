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

#include "csfm/lovasz.h"

#include <algorithm>
#include <stdexcept>

#include "csfm/lp.h"

namespace csfm {

FractionalPoint::FractionalPoint(std::vector<Rational> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw std::invalid_argument("point has more than 64 coordinates");
  }
  for (const auto& c : coordinates_) {
    if (c < 0 || c > 1) {
      throw std::domain_error("coordinate " + FormatRational(c) +
                              " outside [0,1]");
    }
  }
}

FractionalPoint FractionalPoint::Indicator(Mask s, int n) {
  std::vector<Rational> coordinates(static_cast<std::size_t>(n), Rational(0));
  for (int e : Elements(s & FullMask(n))) coordinates[e] = 1;
  return FractionalPoint(std::move(coordinates));
}

Rational LovaszValue(const SubmodularOracle& f, const FractionalPoint& x) {
  if (x.size() != f.ground_size()) {
    throw std::invalid_argument("point dimension differs from ground set");
  }
  std::vector<Rational> levels = x.coordinates();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  levels.push_back(1);  // sentinel x_{m+1}

  Rational total = 0;
  Rational previous = 0;
  for (const Rational& level : levels) {
    const Rational width = level - previous;
    previous = level;
    if (sgn(width) == 0) continue;
    Mask upper = 0;
    for (int e = 0; e < x.size(); ++e) {
      if (x[e] >= level) upper |= Singleton(e);
    }
    total += width * f.Evaluate(upper);
  }
  return total;
}

ConvexClosure ConvexClosureValue(const SubmodularOracle& f,
                                 const FractionalPoint& x) {
  const int n = f.ground_size();
  if (x.size() != n) {
    throw std::invalid_argument("point dimension differs from ground set");
  }
  if (n > 12) throw std::length_error("convex closure LP needs n <= 12");
  const int columns = 1 << n;

  LinearProgram lp;
  lp.num_variables = columns;
  lp.direction = OptimizationDirection::kMinimize;
  lp.objective.reserve(static_cast<std::size_t>(columns));
  for (Mask s = 0; s < static_cast<Mask>(columns); ++s) {
    lp.objective.push_back(f.Evaluate(s));
  }
  lp.AddConstraint(std::vector<Rational>(columns, Rational(1)),
                   ConstraintSense::kEqual, 1);
  for (int e = 0; e < n; ++e) {
    std::vector<Rational> row(static_cast<std::size_t>(columns), Rational(0));
    for (Mask s = 0; s < static_cast<Mask>(columns); ++s) {
      if (Contains(s, e)) row[s] = 1;
    }
    lp.AddConstraint(std::move(row), ConstraintSense::kEqual, x[e]);
  }
  LpResult result = SolveLp(lp);
  if (result.status != LpStatus::kOptimal) {
    // Every x in [0,1]^E is a convex combination of its level sets.
    throw std::logic_error("convex closure LP not optimal: " +
                           ToString(result.status));
  }
  ConvexClosure closure;
  closure.value = result.objective_value;
  for (Mask s = 0; s < static_cast<Mask>(columns); ++s) {
    if (sgn(result.solution[s]) > 0) {
      closure.distribution.emplace_back(s, result.solution[s]);
    }
  }
  return closure;
}

}  // namespace csfm

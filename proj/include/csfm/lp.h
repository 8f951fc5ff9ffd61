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

#ifndef CSFM_LP_H_
#define CSFM_LP_H_

#include <string>
#include <vector>

#include "csfm/rational.h"

namespace csfm {

enum class ConstraintSense { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  ConstraintSense sense = ConstraintSense::kEqual;
  Rational rhs;
};

enum class OptimizationDirection { kMaximize, kMinimize };

// An LP over non-negative variables x >= 0. Free variables are not
// supported; every use in this library has a natural sign constraint.
struct LinearProgram {
  int num_variables = 0;
  std::vector<Rational> objective;  // empty means the zero objective
  OptimizationDirection direction = OptimizationDirection::kMaximize;
  std::vector<LinearConstraint> constraints;

  void AddConstraint(std::vector<Rational> coefficients, ConstraintSense sense,
                     Rational rhs) {
    constraints.push_back({std::move(coefficients), sense, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  // A basic (vertex) solution when status is kOptimal; empty otherwise.
  std::vector<Rational> solution;
  Rational objective_value;
  int pivots = 0;
};

// Two-phase primal simplex on a dense rational tableau with Bland's rule.
// Arithmetic is exact and termination is guaranteed. Throws
// std::invalid_argument if a coefficient vector does not match
// num_variables.
LpResult SolveLp(const LinearProgram& program);

}  // namespace csfm

#endif  // CSFM_LP_H_

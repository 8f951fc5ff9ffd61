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

#ifndef CSFM_LOVASZ_H_
#define CSFM_LOVASZ_H_

#include <utility>
#include <vector>

#include "csfm/oracle.h"
#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

// A point of [0,1]^E. The constructor rejects coordinates outside [0,1]
// with std::domain_error.
class FractionalPoint {
 public:
  explicit FractionalPoint(std::vector<Rational> coordinates);
  static FractionalPoint Indicator(Mask s, int n);

  int size() const { return static_cast<int>(coordinates_.size()); }
  const Rational& operator[](int e) const { return coordinates_[e]; }
  const std::vector<Rational>& coordinates() const { return coordinates_; }

 private:
  std::vector<Rational> coordinates_;
};

// The Lovász extension via level sets:
//   f_L(x) = sum_i (x_i - x_{i-1}) * f({e : x(e) >= x_i})
// over the distinct coordinates x_1 < ... < x_m with x_0 = 0 and
// x_{m+1} = 1. Zero-width slices are skipped, so at most n + 1 oracle
// calls are made.
Rational LovaszValue(const SubmodularOracle& f, const FractionalPoint& x);

struct ConvexClosure {
  Rational value;
  // Sets with positive weight in one optimal distribution.
  std::vector<std::pair<Mask, Rational>> distribution;
};

// The convex closure f^-(x): the cheapest way to write x as a convex
// combination of indicator vectors, solved as an exact LP over all 2^n
// subsets. Requires n <= 12 (std::length_error otherwise).
ConvexClosure ConvexClosureValue(const SubmodularOracle& f,
                                 const FractionalPoint& x);

}  // namespace csfm

#endif  // CSFM_LOVASZ_H_

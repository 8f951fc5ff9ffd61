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

// Seeded random instances for sweeps and tests.

#ifndef CSFM_GENERATORS_H_
#define CSFM_GENERATORS_H_

#include <random>
#include <vector>

#include "csfm/feasibility.h"
#include "csfm/matroid.h"
#include "csfm/oracle.h"

namespace csfm {

using Rng = std::mt19937_64;

// Integer-valued rationals in [lo, hi].
Rational RandomInteger(Rng& rng, int lo, int hi);

// Weighted coverage with `items` universe items; monotone.
FunctionSpec RandomCoverage(int n, int items, Rng& rng);
// Weighted directed cut on a random digraph; non-monotone in general.
FunctionSpec RandomDirectedCut(int n, Rng& rng);
// Non-negative modular with a random offset.
FunctionSpec RandomModular(int n, Rng& rng);
// Table of coverage + directed cut (+ constant); submodular, usually not
// monotone.
FunctionSpec RandomMixture(int n, Rng& rng);

// One of the three matroid kinds, picked at random.
Matroid RandomMatroid(int n, Rng& rng);
Matroid RandomPartitionMatroid(int n, Rng& rng);

// The down-closure of a few random sets, as an explicit family.
FeasibilityFamily RandomDownClosedFamily(int n, Rng& rng);

// The intersection of `k` random partition matroids.
FeasibilityFamily RandomPartitionIntersection(int n, int k, Rng& rng);

}  // namespace csfm

#endif  // CSFM_GENERATORS_H_

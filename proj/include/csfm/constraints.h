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

#ifndef CSFM_CONSTRAINTS_H_
#define CSFM_CONSTRAINTS_H_

#include <optional>
#include <utility>
#include <vector>

#include "csfm/feasibility.h"
#include "csfm/matroid.h"
#include "csfm/subset.h"

namespace csfm {

// Concrete feasibility families. Every family here is down-closed.

FeasibilityFamily PowerSetFamily(int n);
FeasibilityFamily MatroidFamily(Matroid matroid);

// The two side partition matroids of a bipartite graph with `left` and
// `right` vertices; ground element i is edges[i] = (l, r). Their
// intersection is the family of bipartite matchings.
std::vector<Matroid> BipartiteMatchingMatroids(
    int left, int right, const std::vector<std::pair<int, int>>& edges);

// Subgraphs of a simple graph with degree(v) <= capacities[v]. A 2-exchange
// system; membership is by direct degree counting.
FeasibilityFamily BMatchingFamily(int num_vertices,
                                  std::vector<std::pair<int, int>> edges,
                                  std::vector<int> capacities);

// An explicit family with a claimed exchange parameter k.
FeasibilityFamily ExplicitKExchangeFamily(int n, std::vector<Mask> sets,
                                          int claimed_k);

inline constexpr int kMaxExchangeCheckSize = 8;

struct ExchangeCheck {
  bool holds = true;
  // For the augmentation axiom: independent (I, J) with |I| < |J| and no
  // e in J \ I such that I + e is independent. For the k-exchange check:
  // the pair (S, T) with no valid multiset Y.
  std::optional<std::pair<Mask, Mask>> witness;
};

// Matroid augmentation axiom over all pairs of members (n <= 8).
ExchangeCheck CheckExchangeAxiom(const FeasibilityFamily& family);
ExchangeCheck CheckExchangeAxiom(const Matroid& matroid);

// Exhaustive search for the k-exchange multisets {Y_e : e in T \ S} over
// all pairs S, T in F (n <= 8):
//   |Y_e| <= k, every e' in S \ T lies in at most k of the Y_e, and
//   (S \ U_{e in T'} Y_e) u T' is feasible for all T' <= T \ S.
ExchangeCheck CheckKExchange(const FeasibilityFamily& family, int k);

}  // namespace csfm

#endif  // CSFM_CONSTRAINTS_H_

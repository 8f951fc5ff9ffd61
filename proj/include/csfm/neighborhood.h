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

#ifndef CSFM_NEIGHBORHOOD_H_
#define CSFM_NEIGHBORHOOD_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csfm/cone.h"
#include "csfm/feasibility.h"
#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

enum class NeighborhoodKind {
  kSwap,
  kPolyhedralExplicit,
  kPolyhedralMatroid,
  kCustom,
};

std::string ToString(NeighborhoodKind kind);

// N : F -> 2^F with S in N(S), together with the conic parameter alpha the
// caller claims for it. Copies share any memoized state.
class NeighborhoodFunction {
 public:
  using Enumerator = std::function<std::vector<Mask>(Mask)>;

  NeighborhoodFunction(FeasibilityFamily family, NeighborhoodKind kind,
                       Rational claimed_alpha, Enumerator enumerate,
                       std::string description);

  // N_p^k(S) = {T in F : |T \ S| <= p, |S \ T| <= (k-1)p + 1}. The claimed
  // alpha is k - 1 + 1/p, or 1 when that is smaller.
  static NeighborhoodFunction Swap(FeasibilityFamily family, int k, int p);

  // {S} plus every T whose indicator is adjacent to chi^S on P_F. Explicit
  // families (|F| <= 4096) use the adjacency LP, memoized per S. A single
  // matroid uses the add / delete / swap-one superset of the polytope
  // neighbors. Other backends throw std::invalid_argument.
  static NeighborhoodFunction Polyhedral(FeasibilityFamily family);

  // Throws std::domain_error if S is not in F. Every enumeration checks that
  // S is returned; debug builds also re-check feasibility of each neighbor.
  std::vector<Mask> Neighbors(Mask s) const;

  // N_{E'}(S) = {A in N(S) : A <= E'} on F n 2^{E'}.
  NeighborhoodFunction Restrict(Mask ground) const;

  const FeasibilityFamily& family() const { return family_; }
  NeighborhoodKind kind() const { return kind_; }
  const Rational& claimed_alpha() const { return claimed_alpha_; }
  const std::string& description() const { return description_; }
  int swap_k() const { return swap_k_; }
  int swap_p() const { return swap_p_; }

 private:
  FeasibilityFamily family_;
  NeighborhoodKind kind_;
  Rational claimed_alpha_;
  Enumerator enumerate_;
  std::string description_;
  int swap_k_ = 0;
  int swap_p_ = 0;
};

// The swap neighborhood of one set, without wrapping it in a function
// object. Throws std::domain_error if S is not in F.
std::vector<Mask> SwapNeighborhood(const FeasibilityFamily& family, Mask s,
                                   int k, int p);

struct ConicCheckOptions {
  // Number of sampled (S, T) pairs; nullopt picks exhaustive checking when
  // |F| <= 64 and 500 seeded uniform pairs otherwise.
  std::optional<std::size_t> samples;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ConicPairResult {
  Mask s = 0;
  Mask t = 0;
  std::size_t neighborhood_size = 0;
  std::optional<ConeCertificate> certificate;  // set iff the pair passed
};

struct ConicReport {
  Rational alpha;
  bool exhaustive = false;
  std::size_t family_size = 0;
  std::vector<ConicPairResult> pairs;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

// Runs ConeMembership over sampled or all pairs S, T in F. Failures are
// reported, not thrown. Results are ordered deterministically regardless of
// the thread count.
ConicReport EmpiricalConicCheck(const NeighborhoodFunction& neighborhood,
                                const Rational& alpha,
                                const ConicCheckOptions& options = {});

}  // namespace csfm

#endif  // CSFM_NEIGHBORHOOD_H_

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

#ifndef CSFM_CONE_H_
#define CSFM_CONE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csfm/oracle.h"
#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

// C = chi^S + cone{chi^A - chi^S : A in neighbors}. Generators have entries
// in {-1, 0, +1}; the apex itself must be among the neighbors, so the zero
// generator is always present.
class ShiftedCone {
 public:
  // Throws std::invalid_argument if `apex` is not among `neighbors`.
  ShiftedCone(int n, Mask apex, std::vector<Mask> neighbors);

  int dimension() const { return n_; }
  Mask apex() const { return apex_; }
  const std::vector<Mask>& neighbors() const { return neighbors_; }

  // Generator i as a dense vector.
  std::vector<int> Generator(std::size_t i) const;

  // Non-negative mu with sum_i mu_i * generator_i == direction, as a basic
  // LP solution (at most n non-zero entries), or nullopt if none exists.
  std::optional<std::vector<Rational>> Decompose(
      const std::vector<Rational>& direction) const;

  // Whether `point` lies in C.
  bool Contains(const std::vector<Rational>& point) const;

 private:
  int n_;
  Mask apex_;
  std::vector<Mask> neighbors_;
};

struct CertificateTerm {
  std::size_t index = 0;  // position in the neighbor list
  Mask set = 0;
  Rational lambda;        // strictly positive
};

// Coefficients witnessing
//   chi^T + (alpha-1) chi^{S n T} = alpha chi^S + sum_i lambda_i (chi^{A_i} - chi^S)
// with at most n positive lambdas.
struct ConeCertificate {
  Mask s = 0;
  Mask t = 0;
  Rational alpha;
  std::vector<CertificateTerm> terms;

  Rational TotalWeight() const;
  bool EquationHolds(int n) const;
  std::string ToString() const;
};

// Decides whether (1/alpha)(chi^T + (alpha-1) chi^{S n T}) lies in the cone
// at chi^S spanned by the neighbors and, if so, returns a basic certificate.
// Throws std::domain_error for alpha < 1 and std::invalid_argument when S
// is not among the neighbors.
std::optional<ConeCertificate> ConeMembership(int n, Mask s, Mask t,
                                              const std::vector<Mask>& neighbors,
                                              const Rational& alpha);

// Checks
//   (alpha+1) f(S) + sum_i lambda_i (f(A_i) - f(S)) >= f(S u T) + alpha f(S n T)
// exactly. For submodular f this always holds, so `false` flags either a
// non-submodular f or a bug. Throws std::invalid_argument if the
// certificate's own equation is violated.
bool VerifyConeInequality(const SubmodularOracle& f,
                          const ConeCertificate& certificate);

enum class StepBranch {
  kNoGap,              // (alpha+1) f(S) >= f(S u T) + alpha f(S n T)
  kImprovingNeighbor,  // f(A_j) - f(S) >= gap / (alpha |E|)
  kNeither,            // impossible for submodular f
};

std::string ToString(StepBranch branch);

struct StepBound {
  StepBranch branch = StepBranch::kNeither;
  // gap = f(S u T) + alpha f(S n T) - (alpha+1) f(S)
  Rational gap;
  // Best neighbor and its gain f(A_j) - f(S); set unless branch is kNoGap.
  std::optional<std::size_t> neighbor_index;
  Mask neighbor = 0;
  Rational gain;
  // gap / (alpha |E|)
  Rational required_gain;
};

// The improving-step dichotomy: either S already satisfies the no-gap
// inequality for T, or some neighbor gains at least a 1/(alpha |E|)
// fraction of the gap. Throws std::invalid_argument if cone membership
// fails for (S, T, neighbors, alpha).
StepBound ImprovingStepBound(const SubmodularOracle& f, Mask s, Mask t,
                             const std::vector<Mask>& neighbors,
                             const Rational& alpha);

// Given z in C and 0 <= y <= z, reports whether y is in C as well. For
// swap neighborhoods of down-closed families the answer must be true.
// Throws std::invalid_argument on a violated precondition.
bool CheckConeDownClosure(const ShiftedCone& cone,
                          const std::vector<Rational>& y,
                          const std::vector<Rational>& z);

}  // namespace csfm

#endif  // CSFM_CONE_H_

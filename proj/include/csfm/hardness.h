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

// The block instance on which a linear optimization oracle cannot find a
// good submodular solution.
//
// E has n = m^2 elements split into m contiguous blocks of size m (block i
// holds elements i*m .. i*m + m - 1). A hidden transversal T takes one
// uniformly random element per block. Feasible sets are the standard sets,
// touching at most beta blocks, and the special sets, subsets of T touching
// more than beta blocks. The objective counts the blocks a set touches.

#ifndef CSFM_HARDNESS_H_
#define CSFM_HARDNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csfm/feasibility.h"
#include "csfm/oracle.h"
#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

inline constexpr int kMaxHardnessBlocks = 8;  // n <= 64

struct HardnessParams {
  int sqrt_n = 2;
  std::optional<int> beta;  // overrides the formula
  std::optional<int> c;     // defaults to 2d + 2
  int d = 1;
  std::uint64_t seed = 0;
};

// c * ceil(ln n / ln ln n); needs n >= 16 (std::domain_error otherwise).
int BetaFromFormula(int n, int c);

enum class SetClass { kInfeasible, kStandard, kSpecial };

std::string ToString(SetClass value);

class HardnessInstance {
 public:
  // Throws std::invalid_argument for sqrt_n outside [2, 8] or beta < 1, and
  // std::domain_error for n < 16 without an explicit beta.
  static HardnessInstance Generate(const HardnessParams& params);
  // A fixed secret, one element index per block (each inside its block).
  static HardnessInstance WithSecret(int sqrt_n, int beta,
                                     std::vector<int> secret);

  int sqrt_n() const { return sqrt_n_; }
  int n() const { return sqrt_n_ * sqrt_n_; }
  int beta() const { return beta_; }
  int c() const { return c_; }
  int d() const { return d_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<int>& secret() const { return secret_; }
  Mask secret_mask() const { return secret_mask_; }

  Mask Block(int i) const;
  int BlockOf(int element) const { return element / sqrt_n_; }
  // Number of blocks F touches.
  int Value(Mask f) const;
  SetClass Classify(Mask f) const;

  FunctionSpec Objective() const;
  FeasibilityFamily Family() const;

 private:
  int sqrt_n_ = 0;
  int beta_ = 0;
  int c_ = 0;
  int d_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<int> secret_;
  Mask secret_mask_ = 0;
};

struct LinOptAnswer {
  Mask set = 0;
  Rational value;
  SetClass set_class = SetClass::kStandard;
};

// max w(F) over F, ties to smaller cardinality then lexicographically
// smaller sorted element list; special sets only win when strictly better
// than every standard set. Negative weights throw std::domain_error unless
// `clamp` is set, in which case they are replaced by 0.
LinOptAnswer LinOptOracle(const HardnessInstance& instance,
                          const std::vector<Rational>& w, bool clamp = false);

// max over standard sets of w(U) (sum of the beta largest block sums).
Rational MaxStandardValue(const HardnessInstance& instance,
                          const std::vector<Rational>& w);

// w_bar(e) = w(e) / w(S_i) for e in S_i, or 0 on zero blocks.
std::vector<Rational> NormalizeWeights(const HardnessInstance& instance,
                                       const std::vector<Rational>& w);

// Pr over a fresh random T of w(T) > max standard value; T is the only
// random part of the instance. The exact form enumerates all m^m choices
// by meeting in the middle.
Rational DetectionProbabilityExact(const HardnessInstance& instance,
                                   const std::vector<Rational>& w);
Rational DetectionProbabilityMonteCarlo(const HardnessInstance& instance,
                                        const std::vector<Rational>& w,
                                        std::size_t trials,
                                        std::uint64_t seed);

enum class AdversaryStrategy { kRandomWeights, kGreedyProbe, kKnownSpecial };

std::string ToString(AdversaryStrategy strategy);
// Throws std::invalid_argument on an unknown name.
AdversaryStrategy ParseAdversaryStrategy(const std::string& name);

struct AdversaryTrial {
  std::size_t trial = 0;
  std::size_t queries_used = 0;
  bool detected_special = false;
  int best_value = 0;
  Rational ratio_to_opt;
};

struct AdversaryReport {
  std::vector<AdversaryTrial> trials;

  std::size_t detections() const;
  // trial,queries_used,detected_special,best_value,ratio_to_opt
  std::string ToCsv() const;
};

// Each trial samples a fresh secret from the trial's own seed and lets the
// strategy spend up to `budget` oracle calls. Once a special set comes back,
// one further call with weights n on it and 1 elsewhere recovers T. The
// final answer is the best returned set or, failing that, one element from
// each of the first beta blocks.
AdversaryReport RunAdversary(const HardnessParams& params,
                             AdversaryStrategy strategy, std::size_t budget,
                             std::size_t trials, int threads = 1);

}  // namespace csfm

#endif  // CSFM_HARDNESS_H_

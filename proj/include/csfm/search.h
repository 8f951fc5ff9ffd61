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

#ifndef CSFM_SEARCH_H_
#define CSFM_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csfm/neighborhood.h"
#include "csfm/oracle.h"
#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

struct SearchConfig {
  Rational epsilon{1, 10};
  Rational alpha{1};
  std::optional<std::size_t> max_steps_override;
  // Threads used to evaluate one neighborhood scan.
  int threads = 1;

  // Throws std::invalid_argument unless epsilon > 0 and alpha >= 1.
  void Validate() const;
};

// One most-improving step taken from S_j.
struct StepRecord {
  std::size_t j = 0;
  std::size_t i = 0;  // anchor at the time of the step
  std::size_t neighborhood_size = 0;
  Rational value;     // f(S_j)
  Rational delta;     // f(S_{j+1}) - f(S_j)
};

struct SearchTrace {
  std::vector<Mask> sets_visited;  // S_0, S_1, ...
  std::vector<Rational> values;    // f(S_0), f(S_1), ...
  std::vector<Rational> deltas;    // deltas[j] = values[j+1] - values[j]
  std::size_t anchor_index = 0;
  std::size_t steps = 0;
  std::int64_t oracle_calls = 0;
  // Size of every scan in order; the initial singleton scan comes first
  // when there is one. Sums to oracle_calls.
  std::vector<std::size_t> scan_sizes;
  std::vector<StepRecord> records;
  bool step_cap_hit = false;
};

struct StepResult {
  Mask next = 0;
  Rational value;  // f(next)
  Rational delta;  // f(next) - f(S)
  std::size_t neighborhood_size = 0;
};

// argmax over N(S), ties to smaller cardinality then lexicographic order.
// Evaluates f exactly once per neighbor (S included).
StepResult MostImprovingStep(const SubmodularOracle& f,
                             const NeighborhoodFunction& neighborhood, Mask s,
                             int threads = 1);

struct MonotoneResult {
  Mask set = 0;
  Rational value;
  std::size_t step_limit = 0;  // |E| * ceil(ln((alpha+1+eps)/eps))
  SearchTrace trace;
};

// Most-improving steps from S_0 for up to |E| ceil(ln((alpha+1+eps)/eps))
// steps; stops early once a step gains nothing. Requires a declared
// monotone f; throws std::invalid_argument otherwise.
MonotoneResult MonotoneLocalSearch(const SubmodularOracle& f,
                                   const NeighborhoodFunction& neighborhood,
                                   Mask start, const SearchConfig& config);

struct BasicResult {
  Mask s = 0;
  Mask q = 0;
  SearchTrace trace;
};

// Basic-Local-Search on the ground set `ground` (already pruned, nonempty).
// The neighborhood is restricted to `ground` internally. Throws
// std::invalid_argument on an empty ground set.
BasicResult BasicLocalSearch(const SubmodularOracle& f,
                             const NeighborhoodFunction& neighborhood,
                             Mask ground, const SearchConfig& config);

struct IterativeRound {
  Mask ground = 0;  // E_i
  Mask s = 0;
  Mask q = 0;
  Rational value;   // f(S_i)
  std::optional<SearchTrace> trace;  // empty when E_i was empty
};

struct IterativeTrace {
  Mask pruned_ground = 0;
  std::size_t prune_calls = 0;
  std::vector<IterativeRound> rounds;
  std::size_t winner = 0;
  std::int64_t oracle_calls = 0;

  std::size_t total_steps() const;
};

struct IterativeResult {
  Mask set = 0;
  Rational value;
  IterativeTrace trace;
};

// Iterative-Local-Search: prunes E, then runs floor(alpha)+1 rounds on
// E_{i+1} = E_i \ Q_i and returns the best S_i (first on ties).
IterativeResult IterativeLocalSearch(const SubmodularOracle& f,
                                     const NeighborhoodFunction& neighborhood,
                                     const SearchConfig& config);

// 2 |E| (ceil(ln(alpha |E| n / eps)) + 1).
std::size_t BasicStepBound(std::size_t ground_size, int n,
                           const Rational& alpha, const Rational& epsilon);

// Human-readable step records, one per line.
std::string FormatTrace(const SearchTrace& trace);

}  // namespace csfm

#endif  // CSFM_SEARCH_H_

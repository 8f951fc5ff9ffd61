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

#include <atomic>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "csfm/brute_force.h"
#include "csfm/constraints.h"
#include "csfm/generators.h"
#include "csfm/neighborhood.h"
#include "csfm/search.h"
#include "support/oracles.h"

namespace csfm {
namespace {

namespace ref = reference;

void ExpectTraceInvariants(const SearchTrace& trace, const FunctionSpec& spec) {
  ASSERT_EQ(trace.values.size(), trace.sets_visited.size());
  ASSERT_EQ(trace.deltas.size() + 1, trace.values.size());
  for (std::size_t j = 0; j < trace.values.size(); ++j) {
    EXPECT_EQ(trace.values[j], spec.Value(trace.sets_visited[j]));
  }
  for (std::size_t j = 0; j < trace.deltas.size(); ++j) {
    EXPECT_EQ(trace.deltas[j], trace.values[j + 1] - trace.values[j]);
    EXPECT_GE(trace.deltas[j], 0);
  }
  EXPECT_EQ(trace.steps, trace.deltas.size());
  EXPECT_EQ(trace.records.size(), trace.steps);
  EXPECT_EQ(std::accumulate(trace.scan_sizes.begin(), trace.scan_sizes.end(),
                            std::int64_t{0}),
            trace.oracle_calls);
}

SearchConfig Config(const Rational& alpha) {
  SearchConfig config;
  config.alpha = alpha;
  return config;
}

TEST(ConfigTest, Validation) {
  SearchConfig config;
  config.epsilon = 0;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config.epsilon = 1;
  config.alpha = Rational(1, 2);
  EXPECT_THROW(config.Validate(), std::invalid_argument);
}

TEST(StepTest, LocalMaximumStays) {
  SubmodularOracle f(FunctionSpec::Modular({1, 2}));
  const auto n = NeighborhoodFunction::Swap(PowerSetFamily(2), 1, 1);
  const StepResult r = MostImprovingStep(f, n, 0b11);
  EXPECT_EQ(r.next, 0b11u);
  EXPECT_EQ(r.delta, 0);
  EXPECT_EQ(r.neighborhood_size, 3u);
}

TEST(StepTest, ModularFromEmptyAddsHeaviest) {
  SubmodularOracle f(FunctionSpec::Modular({3, 0, 5, 5}));
  const auto n = NeighborhoodFunction::Swap(PowerSetFamily(4), 1, 1);
  const StepResult r = MostImprovingStep(f, n, 0);
  // e3 and e4 tie; the canonical order picks e3.
  EXPECT_EQ(r.next, 0b0100u);
  EXPECT_EQ(r.delta, 5);
}

TEST(StepTest, ParallelScanIsDeterministic) {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + trial % 4;
    SubmodularOracle f(RandomMixture(n, rng));
    const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(n), 2, 2);
    for (Mask s = 0; s < (Mask{1} << n); s += 3) {
      const StepResult a = MostImprovingStep(f, nf, s, 1);
      const StepResult b = MostImprovingStep(f, nf, s, 4);
      EXPECT_EQ(a.next, b.next);
      EXPECT_EQ(a.value, b.value);
    }
  }
}

TEST(StepTest, NondeterministicOracleDetected) {
  auto counter = std::make_shared<std::atomic<int>>(0);
  SubmodularOracle f(
      2, [counter](Mask s) { return Rational(Cardinality(s) + (*counter)++); },
      false);
  const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(2), 1, 1);
  EXPECT_THROW(BasicLocalSearch(f, nf, 0b11, SearchConfig{}), std::logic_error);
}

TEST(MonotoneTest, EmptyOnlyFamily) {
  SubmodularOracle f(FunctionSpec::Modular({1, 2}));
  const auto nf = NeighborhoodFunction::Swap(FeasibilityFamily::Explicit(2, {0}), 1, 1);
  const MonotoneResult r = MonotoneLocalSearch(f, nf, 0, SearchConfig{});
  EXPECT_EQ(r.set, 0u);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.trace.steps, 1u);
}

TEST(MonotoneTest, StepLimitFormula) {
  SubmodularOracle f(FunctionSpec::Modular({1, 2, 3, 4}));
  const auto nf = NeighborhoodFunction::Polyhedral(MatroidFamily(Matroid::Uniform(4, 2)));
  const MonotoneResult r = MonotoneLocalSearch(f, nf, 0, SearchConfig{});
  // ceil(ln(21)) = 4
  EXPECT_EQ(r.step_limit, 16u);
  EXPECT_EQ(r.set, 0b1100u);
  EXPECT_EQ(r.value, 7);
}

TEST(MonotoneTest, Preconditions) {
  const auto nf = NeighborhoodFunction::Swap(MatroidFamily(Matroid::Uniform(2, 1)), 1, 1);
  SubmodularOracle cut(FunctionSpec::DirectedCut(2, {{0, 1, 1}}));
  EXPECT_THROW(MonotoneLocalSearch(cut, nf, 0, SearchConfig{}), std::invalid_argument);
  SubmodularOracle f(FunctionSpec::Modular({1, 2}));
  EXPECT_THROW(MonotoneLocalSearch(f, nf, 0b11, SearchConfig{}), std::domain_error);
}

TEST(MonotoneTest, GuaranteeAgainstBruteForce) {
  Rng rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 9;
    FunctionSpec spec = trial % 2 ? RandomCoverage(n, 8, rng) : RandomModular(n, rng);
    SubmodularOracle f(spec);
    const auto family = MatroidFamily(RandomMatroid(n, rng));
    const auto nf = NeighborhoodFunction::Polyhedral(family);
    const MonotoneResult r = MonotoneLocalSearch(f, nf, 0, SearchConfig{});
    ExpectTraceInvariants(r.trace, spec);
    EXPECT_EQ(f.call_count(), r.trace.oracle_calls);
    EXPECT_LE(r.trace.steps, r.step_limit);
    const Optimum opt = BruteForceOpt(SubmodularOracle(spec), family);
    EXPECT_GE((2 + Rational(1, 10)) * r.value, opt.value);
  }
}

TEST(BasicTest, TwoSetFamily) {
  SubmodularOracle f(FunctionSpec::Modular({3}, 1));
  const auto nf = NeighborhoodFunction::Swap(FeasibilityFamily::Explicit(1, {0, 1}), 1, 1);
  const BasicResult r = BasicLocalSearch(f, nf, 0b1, SearchConfig{});
  EXPECT_EQ(r.s, 0b1u);
  EXPECT_EQ(r.q, 0b1u);
  EXPECT_EQ(r.trace.sets_visited.front(), 0b1u);
  ASSERT_EQ(r.trace.deltas.size(), 1u);
  EXPECT_EQ(r.trace.deltas[0], 0);
}

TEST(BasicTest, EmptyGroundRejected) {
  SubmodularOracle f(FunctionSpec::Modular({3}));
  const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(1), 1, 1);
  EXPECT_THROW(BasicLocalSearch(f, nf, 0, SearchConfig{}), std::invalid_argument);
}

TEST(BasicTest, StepCapStopsEarly) {
  SubmodularOracle f(FunctionSpec::Modular({1, 2, 3, 4, 5, 6}));
  const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(6), 1, 1);
  SearchConfig config;
  config.max_steps_override = 2;
  const BasicResult r = BasicLocalSearch(f, nf, FullMask(6), config);
  EXPECT_TRUE(r.trace.step_cap_hit);
  EXPECT_EQ(r.trace.steps, 2u);
}

TEST(BasicTest, PairSatisfiesGoalAgainstEveryFeasibleSet) {
  Rng rng(53);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 9;
    FunctionSpec spec = RandomMixture(n, rng);
    SubmodularOracle f(spec);
    const auto family = trial % 2 ? RandomDownClosedFamily(n, rng)
                                  : MatroidFamily(RandomMatroid(n, rng));
    const auto nf = NeighborhoodFunction::Polyhedral(family);
    const Mask ground = PruneGroundSet(family.restriction(), family, f);
    if (ground == 0) continue;
    const SearchConfig config = Config(1);
    const BasicResult r = BasicLocalSearch(f, nf, ground, config);
    ExpectTraceInvariants(r.trace, spec);
    EXPECT_LE(r.trace.steps, BasicStepBound(Cardinality(ground), n, 1, config.epsilon));
    const Rational lhs = (2 + config.epsilon) * spec.Value(r.s);
    for (Mask t : ref::Feasible(n, [&](Mask t) {
           return (t & ~ground) == 0 && family.Contains(t);
         })) {
      ASSERT_GE(lhs, spec.Value(r.q | t) + spec.Value(r.q & t));
    }
  }
}

TEST(IterativeTest, RequiresDownClosedFamily) {
  SubmodularOracle f(FunctionSpec::Modular({1, 1}));
  const auto nf = NeighborhoodFunction::Swap(FeasibilityFamily::Explicit(2, {0, 3}), 1, 1);
  EXPECT_THROW(IterativeLocalSearch(f, nf, SearchConfig{}), std::invalid_argument);
}

TEST(IterativeTest, EverythingPrunedGivesEmptySet) {
  SubmodularOracle f(FunctionSpec::Modular({0, 0}, 2));
  const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(2), 1, 1);
  const IterativeResult r = IterativeLocalSearch(f, nf, SearchConfig{});
  EXPECT_EQ(r.set, 0u);
  EXPECT_EQ(r.value, 2);
  ASSERT_EQ(r.trace.rounds.size(), 2u);
  EXPECT_FALSE(r.trace.rounds[0].trace.has_value());
}

TEST(IterativeTest, TraceInvariantsAndGuarantee) {
  Rng rng(54);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 8;
    FunctionSpec spec = RandomMixture(n, rng);
    SubmodularOracle f(spec);
    const bool swap = trial % 3 == 0;
    const auto family = swap ? RandomPartitionIntersection(n, 2, rng)
                             : RandomDownClosedFamily(n, rng);
    const auto nf = swap ? NeighborhoodFunction::Swap(family, 2, 1)
                         : NeighborhoodFunction::Polyhedral(family);
    const Rational alpha = nf.claimed_alpha();
    SearchConfig config = Config(alpha);
    config.threads = 1 + trial % 3;
    const IterativeResult r = IterativeLocalSearch(f, nf, config);
    const auto& trace = r.trace;

    const int rounds = Floor(alpha) + 1;
    ASSERT_EQ(trace.rounds.size(), static_cast<std::size_t>(rounds));
    EXPECT_EQ(trace.rounds[0].ground, trace.pruned_ground);
    Mask used = 0;
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      const auto& round = trace.rounds[i];
      EXPECT_EQ(round.q & used, 0u);
      used |= round.q;
      EXPECT_EQ(round.s & ~round.ground, 0u);
      EXPECT_EQ(round.value, spec.Value(round.s));
      if (i + 1 < trace.rounds.size()) {
        EXPECT_EQ(trace.rounds[i + 1].ground, round.ground & ~round.q);
      }
      if (round.trace) ExpectTraceInvariants(*round.trace, spec);
      EXPECT_LE(round.value, r.value);
    }
    EXPECT_EQ(f.call_count(), trace.oracle_calls);
    EXPECT_TRUE(family.Contains(r.set));

    const Optimum opt = BruteForceOpt(SubmodularOracle(spec), family);
    const Rational floor_alpha = Floor(alpha);
    EXPECT_GE((floor_alpha + 1) * (alpha + 1 + config.epsilon) * r.value,
              floor_alpha * opt.value);
  }
}

TEST(IterativeTest, MonotoneResultAtLeastFirstRound) {
  Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    SubmodularOracle f(RandomCoverage(n, 6, rng));
    const auto family = MatroidFamily(RandomMatroid(n, rng));
    const auto nf = NeighborhoodFunction::Polyhedral(family);
    const IterativeResult r = IterativeLocalSearch(f, nf, SearchConfig{});
    EXPECT_GE(r.value, r.trace.rounds[0].value);
  }
}

TEST(IterativeTest, IdenticalRunsGiveIdenticalTraces) {
  Rng rng(56);
  FunctionSpec spec = RandomMixture(7, rng);
  const auto family = RandomDownClosedFamily(7, rng);
  const auto nf = NeighborhoodFunction::Polyhedral(family);
  const IterativeResult a = IterativeLocalSearch(SubmodularOracle(spec), nf, SearchConfig{});
  SearchConfig parallel;
  parallel.threads = 4;
  const IterativeResult b = IterativeLocalSearch(SubmodularOracle(spec), nf, parallel);
  ASSERT_EQ(a.trace.rounds.size(), b.trace.rounds.size());
  for (std::size_t i = 0; i < a.trace.rounds.size(); ++i) {
    const auto& x = a.trace.rounds[i];
    const auto& y = b.trace.rounds[i];
    EXPECT_EQ(x.ground, y.ground);
    EXPECT_EQ(x.s, y.s);
    EXPECT_EQ(x.q, y.q);
    ASSERT_EQ(x.trace.has_value(), y.trace.has_value());
    if (x.trace) {
      EXPECT_EQ(x.trace->sets_visited, y.trace->sets_visited);
      EXPECT_EQ(FormatTrace(*x.trace), FormatTrace(*y.trace));
    }
  }
}

TEST(StepBoundTest, Formula) {
  // 2 * 4 * (ceil(ln(1 * 4 * 4 / (1/10))) + 1) = 8 * (ceil(ln 160) + 1) = 56
  EXPECT_EQ(BasicStepBound(4, 4, 1, Rational(1, 10)), 56u);
}

TEST(FormatTraceTest, OneLinePerStep) {
  SubmodularOracle f(FunctionSpec::Modular({1, 2}));
  const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(2), 1, 1);
  const BasicResult r = BasicLocalSearch(f, nf, 0b11, SearchConfig{});
  EXPECT_EQ(FormatTrace(r.trace),
            "j=0 i=0 |N|=4 f=2 delta=1\nj=1 i=0 |N|=3 f=3 delta=0\n");
}

}  // namespace
}  // namespace csfm

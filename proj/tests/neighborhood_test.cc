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

#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

#include "csfm/adjacency.h"
#include "csfm/brute_force.h"
#include "csfm/constraints.h"
#include "csfm/generators.h"
#include "csfm/neighborhood.h"
#include "support/oracles.h"

namespace csfm {
namespace {

namespace ref = reference;

std::vector<Mask> Sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(SwapTest, AddOneFromEmpty) {
  const auto n = NeighborhoodFunction::Swap(PowerSetFamily(2), 1, 1);
  EXPECT_EQ(Sorted(n.Neighbors(0)), (std::vector<Mask>{0, 1, 2}));
}

TEST(SwapTest, RankOneMatroid) {
  const auto n =
      NeighborhoodFunction::Swap(MatroidFamily(Matroid::Uniform(2, 1)), 2, 1);
  EXPECT_EQ(Sorted(n.Neighbors(0b01)), (std::vector<Mask>{0, 1, 2}));
  EXPECT_EQ(n.claimed_alpha(), 2);
}

TEST(SwapTest, ClaimedAlpha) {
  EXPECT_EQ(NeighborhoodFunction::Swap(PowerSetFamily(3), 1, 1).claimed_alpha(), 1);
  EXPECT_EQ(NeighborhoodFunction::Swap(PowerSetFamily(3), 1, 2).claimed_alpha(), 1);
  EXPECT_EQ(NeighborhoodFunction::Swap(PowerSetFamily(3), 2, 2).claimed_alpha(),
            Rational(3, 2));
  EXPECT_EQ(NeighborhoodFunction::Swap(PowerSetFamily(3), 3, 1).claimed_alpha(), 3);
}

TEST(SwapTest, InfeasibleSetRejected) {
  const auto n =
      NeighborhoodFunction::Swap(MatroidFamily(Matroid::Uniform(2, 1)), 1, 1);
  EXPECT_THROW(n.Neighbors(0b11), std::domain_error);
  EXPECT_THROW(NeighborhoodFunction::Swap(PowerSetFamily(2), 0, 1),
               std::invalid_argument);
}

TEST(SwapTest, MatchesScanOfAllSubsets) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const auto family = trial % 2 ? RandomDownClosedFamily(n, rng)
                                  : RandomPartitionIntersection(n, 2, rng);
    const int k = 1 + trial % 3;
    const int p = 1 + (trial / 3) % 2;
    const auto nf = NeighborhoodFunction::Swap(family, k, p);
    for (Mask s : family.Enumerate()) {
      const auto got = nf.Neighbors(s);
      EXPECT_EQ(got.front(), s);
      EXPECT_EQ(Sorted(got),
                ref::SwapByScan(n, [&](Mask t) { return family.Contains(t); }, s,
                                k, p));
    }
  }
}

TEST(SwapTest, EnumerationOrderIsAdditionsThenDeletions) {
  const auto got = SwapNeighborhood(PowerSetFamily(3), 0b010, 1, 1);
  // S first, then additions of e1 and e3 in order, each with 0 or 1
  // deletions; pure deletions come with the empty addition.
  ASSERT_FALSE(got.empty());
  EXPECT_EQ(got.front(), 0b010u);
  EXPECT_EQ(Sorted(got), Sorted(ref::SwapByScan(
                             3, [](Mask) { return true; }, 0b010, 1, 1)));
}

TEST(PolyhedralTest, CubeNeighborsAreSingleFlips) {
  std::vector<Mask> cube;
  for (Mask s = 0; s < 16; ++s) cube.push_back(s);
  const auto n =
      NeighborhoodFunction::Polyhedral(FeasibilityFamily::Explicit(4, cube));
  EXPECT_EQ(n.kind(), NeighborhoodKind::kPolyhedralExplicit);
  for (Mask s : cube) EXPECT_EQ(n.Neighbors(s).size(), 5u);
}

TEST(PolyhedralTest, TriangleMatroid) {
  const auto n =
      NeighborhoodFunction::Polyhedral(MatroidFamily(Matroid::Uniform(2, 1)));
  EXPECT_EQ(n.kind(), NeighborhoodKind::kPolyhedralMatroid);
  EXPECT_EQ(Sorted(n.Neighbors(0b01)), (std::vector<Mask>{0, 1, 2}));
}

TEST(PolyhedralTest, ExplicitMatchesAdjacency) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const auto family = RandomDownClosedFamily(n, rng);
    const auto sets = family.Enumerate();
    const auto nf = NeighborhoodFunction::Polyhedral(family);
    for (Mask s : sets) {
      std::vector<Mask> expected = {s};
      for (Mask u : sets) {
        if (u != s && VertexAdjacency(sets, s, u)) expected.push_back(u);
      }
      EXPECT_EQ(Sorted(nf.Neighbors(s)), Sorted(expected));
    }
  }
}

TEST(PolyhedralTest, MatroidSupersetOfPolytopeEdges) {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const Matroid m = RandomMatroid(n, rng);
    const auto family = MatroidFamily(m);
    const auto sets = family.Enumerate();
    const auto nf = NeighborhoodFunction::Polyhedral(family);
    for (Mask s : sets) {
      const auto got = nf.Neighbors(s);
      for (Mask u : sets) {
        if (u != s && VertexAdjacency(sets, s, u)) {
          EXPECT_NE(std::find(got.begin(), got.end(), u), got.end());
        }
      }
    }
  }
}

TEST(PolyhedralTest, UnsupportedBackendRejected) {
  EXPECT_THROW(NeighborhoodFunction::Polyhedral(FeasibilityFamily::MatroidIntersection(
                   3, {Matroid::Uniform(3, 1), Matroid::Uniform(3, 2)})),
               std::invalid_argument);
}

TEST(RestrictTest, FullGroundIsIdentical) {
  Rng rng(44);
  const auto family = RandomPartitionIntersection(5, 2, rng);
  const auto nf = NeighborhoodFunction::Swap(family, 2, 1);
  const auto restricted = nf.Restrict(FullMask(5));
  for (Mask s : family.Enumerate()) {
    EXPECT_EQ(nf.Neighbors(s), restricted.Neighbors(s));
  }
}

TEST(RestrictTest, EmptyGroundLeavesOnlyEmptySet) {
  const auto nf = NeighborhoodFunction::Swap(PowerSetFamily(3), 1, 1);
  EXPECT_EQ(nf.Restrict(0).Neighbors(0), (std::vector<Mask>{0}));
}

TEST(RestrictTest, SizesNeverGrow) {
  Rng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    const auto family = RandomDownClosedFamily(n, rng);
    const auto nf = trial % 2 ? NeighborhoodFunction::Swap(family, 2, 1)
                              : NeighborhoodFunction::Polyhedral(family);
    const Mask ground =
        std::uniform_int_distribution<Mask>(0, FullMask(n))(rng);
    const auto restricted = nf.Restrict(ground);
    for (Mask s : family.Restrict(ground).Enumerate()) {
      const auto small = restricted.Neighbors(s);
      EXPECT_LE(small.size(), nf.Neighbors(s).size());
      for (Mask a : small) EXPECT_EQ(a & ~ground, 0u);
    }
  }
}

TEST(ConicTest, PolyhedralExplicitIsOneConic) {
  Rng rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const auto family = RandomDownClosedFamily(3 + trial % 4, rng);
    const auto report =
        EmpiricalConicCheck(NeighborhoodFunction::Polyhedral(family), 1);
    EXPECT_TRUE(report.exhaustive);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.pairs.size(), report.family_size * report.family_size);
  }
}

TEST(ConicTest, K33MatchingWithOneSwapIsTwoConic) {
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < 3; ++l) {
    for (int r = 0; r < 3; ++r) edges.emplace_back(l, r);
  }
  const auto family = FeasibilityFamily::MatroidIntersection(
      9, BipartiteMatchingMatroids(3, 3, edges));
  const auto report =
      EmpiricalConicCheck(NeighborhoodFunction::Swap(family, 2, 1), 2);
  EXPECT_EQ(report.family_size, 34u);
  EXPECT_TRUE(report.all_passed());
}

TEST(ConicTest, SingleMatroidSwapIsOneConic) {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto family = MatroidFamily(RandomMatroid(2 + trial % 5, rng));
    ConicCheckOptions options;
    options.exhaustive = true;
    EXPECT_TRUE(
        EmpiricalConicCheck(NeighborhoodFunction::Swap(family, 1, 1), 1, options)
            .all_passed());
  }
}

TEST(ConicTest, TooSmallNeighborhoodFails) {
  // Additions only, no swaps: {e1} -> {e2} on a rank-one matroid is not in
  // the cone at alpha = 1.
  const auto family = MatroidFamily(Matroid::Uniform(2, 1));
  NeighborhoodFunction add_only(
      family, NeighborhoodKind::kCustom, 1,
      [&](Mask s) {
        std::vector<Mask> out = {s};
        for (int e = 0; e < 2; ++e) {
          if (family.Contains(s | Singleton(e)) && !Contains(s, e)) {
            out.push_back(s | Singleton(e));
          }
        }
        return out;
      },
      "add-only");
  EXPECT_FALSE(EmpiricalConicCheck(add_only, 1).all_passed());
}

TEST(ConicTest, SampledModeIsSeededAndSized) {
  Rng rng(48);
  const auto family = PowerSetFamily(7);
  ConicCheckOptions options;
  options.samples = 40;
  options.seed = 9;
  const auto nf = NeighborhoodFunction::Swap(family, 1, 1);
  const auto a = EmpiricalConicCheck(nf, 1, options);
  options.threads = 3;
  const auto b = EmpiricalConicCheck(nf, 1, options);
  ASSERT_EQ(a.pairs.size(), 40u);
  EXPECT_FALSE(a.exhaustive);
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].s, b.pairs[i].s);
    EXPECT_EQ(a.pairs[i].t, b.pairs[i].t);
  }
}

TEST(LocalOptimumTest, MonotoneLocalOptimaAreWithinAlphaPlusOne) {
  Rng rng(49);
  int optima = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    FunctionSpec spec = trial % 2 ? RandomCoverage(n, 6, rng) : RandomModular(n, rng);
    SubmodularOracle f(spec);
    const bool matroid = trial % 3 != 2;
    const auto family = matroid ? MatroidFamily(RandomMatroid(n, rng))
                                : RandomPartitionIntersection(n, 2, rng);
    const auto nf = matroid ? NeighborhoodFunction::Polyhedral(family)
                            : NeighborhoodFunction::Swap(family, 2, 1);
    const Rational alpha = nf.claimed_alpha();
    const Optimum opt = BruteForceOpt(f, family);
    for (Mask s : family.Enumerate()) {
      bool local = true;
      for (Mask a : nf.Neighbors(s)) local = local && spec.Value(a) <= spec.Value(s);
      if (!local) continue;
      ++optima;
      EXPECT_GE((alpha + 1) * spec.Value(s), opt.value);
    }
  }
  EXPECT_GT(optima, 40);
}

}  // namespace
}  // namespace csfm

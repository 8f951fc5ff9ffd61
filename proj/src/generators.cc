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

#include "csfm/generators.h"

#include <algorithm>
#include <set>

namespace csfm {

Rational RandomInteger(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

FunctionSpec RandomCoverage(int n, int items, Rng& rng) {
  std::bernoulli_distribution coin(0.4);
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  for (auto& list : covers) {
    for (int i = 0; i < items; ++i) {
      if (coin(rng)) list.push_back(i);
    }
  }
  std::vector<Rational> weights;
  for (int i = 0; i < items; ++i) weights.push_back(RandomInteger(rng, 1, 9));
  return FunctionSpec::Coverage(n, std::move(covers), std::move(weights));
}

FunctionSpec RandomDirectedCut(int n, Rng& rng) {
  std::bernoulli_distribution coin(0.35);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v, RandomInteger(rng, 1, 5)});
    }
  }
  return FunctionSpec::DirectedCut(n, std::move(arcs));
}

FunctionSpec RandomModular(int n, Rng& rng) {
  std::vector<Rational> weights;
  for (int e = 0; e < n; ++e) weights.push_back(RandomInteger(rng, 0, 9));
  return FunctionSpec::Modular(std::move(weights), RandomInteger(rng, 0, 2));
}

FunctionSpec RandomMixture(int n, Rng& rng) {
  const FunctionSpec coverage = RandomCoverage(n, n, rng);
  const FunctionSpec cut = RandomDirectedCut(n, rng);
  const Rational offset = RandomInteger(rng, 0, 2);
  std::vector<Rational> values;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    values.push_back(coverage.Value(s) + 2 * cut.Value(s) + offset);
  }
  return FunctionSpec::Table(n, std::move(values));
}

Matroid RandomPartitionMatroid(int n, Rng& rng) {
  const int parts = std::uniform_int_distribution<int>(1, std::max(1, n / 2))(rng);
  std::vector<Mask> blocks(static_cast<std::size_t>(parts), 0);
  std::uniform_int_distribution<int> pick(0, parts - 1);
  for (int e = 0; e < n; ++e) blocks[pick(rng)] |= Singleton(e);
  std::vector<Mask> nonempty;
  std::vector<int> caps;
  for (Mask b : blocks) {
    if (b == 0) continue;
    nonempty.push_back(b);
    caps.push_back(std::uniform_int_distribution<int>(1, Cardinality(b))(rng));
  }
  return Matroid::Partition(n, std::move(nonempty), std::move(caps));
}

Matroid RandomMatroid(int n, Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return Matroid::Uniform(n, std::uniform_int_distribution<int>(1, n)(rng));
    case 1:
      return RandomPartitionMatroid(n, rng);
    default: {
      const int vertices = std::uniform_int_distribution<int>(3, 5)(rng);
      std::uniform_int_distribution<int> vertex(0, vertices - 1);
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        int u = vertex(rng);
        int v = vertex(rng);
        while (v == u) v = vertex(rng);
        edges.emplace_back(u, v);
      }
      return Matroid::Graphic(vertices, std::move(edges));
    }
  }
}

FeasibilityFamily RandomDownClosedFamily(int n, Rng& rng) {
  const int generators = std::uniform_int_distribution<int>(1, 4)(rng);
  std::bernoulli_distribution coin(0.5);
  std::set<Mask> sets;
  for (int g = 0; g < generators; ++g) {
    Mask top = 0;
    for (int e = 0; e < n; ++e) {
      if (coin(rng)) top |= Singleton(e);
    }
    for (Mask sub = top;; sub = (sub - 1) & top) {
      sets.insert(sub);
      if (sub == 0) break;
    }
  }
  return FeasibilityFamily::Explicit(n, {sets.begin(), sets.end()});
}

FeasibilityFamily RandomPartitionIntersection(int n, int k, Rng& rng) {
  std::vector<Matroid> matroids;
  for (int i = 0; i < k; ++i) matroids.push_back(RandomPartitionMatroid(n, rng));
  return FeasibilityFamily::MatroidIntersection(n, std::move(matroids));
}

}  // namespace csfm

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

#include "csfm/brute_force.h"

#include <stdexcept>

namespace csfm {
namespace {

std::vector<Rational> Tabulate(const SubmodularOracle& f) {
  const int n = f.ground_size();
  if (n > kMaxSubmodularCheckSize) {
    throw std::length_error("submodularity check needs n <= 16");
  }
  std::vector<Rational> table;
  table.reserve(std::size_t{1} << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s) table.push_back(f.Evaluate(s));
  return table;
}

}  // namespace

SubmodularityCheck CheckSubmodular(int n, const std::vector<Rational>& table) {
  if (n > kMaxSubmodularCheckSize) {
    throw std::length_error("submodularity check needs n <= 16");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("submodularity check: table size != 2^n");
  }
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    for (int a = 0; a < n; ++a) {
      if (Contains(s, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (Contains(s, b)) continue;
        const Mask sa = s | Singleton(a);
        const Mask sb = s | Singleton(b);
        if (table[sa] + table[sb] < table[sa | sb] + table[s]) {
          return {false, std::make_pair(sa, sb)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SubmodularityCheck CheckSubmodular(const SubmodularOracle& f) {
  return CheckSubmodular(f.ground_size(), Tabulate(f));
}

bool CheckMonotone(const SubmodularOracle& f) {
  const int n = f.ground_size();
  const std::vector<Rational> table = Tabulate(f);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    for (int e = 0; e < n; ++e) {
      if (!Contains(s, e) && table[s | Singleton(e)] < table[s]) return false;
    }
  }
  return true;
}

Optimum BruteForceOpt(const SubmodularOracle& f,
                      const FeasibilityFamily& family) {
  if (family.ground_size() > kMaxBruteForceSize) {
    throw std::length_error("brute force needs n <= 20");
  }
  std::optional<Optimum> best;
  const Mask ground = family.restriction();
  Mask s = 0;
  do {
    if (family.Contains(s)) {
      Rational value = f.Evaluate(s);
      if (!best || value > best->value ||
          (value == best->value && CanonicalLess(s, best->set))) {
        best = Optimum{s, std::move(value)};
      }
    }
    s = (s - ground) & ground;
  } while (s != 0);
  if (!best) throw std::invalid_argument("brute force: family is empty");
  return *best;
}

Mask PruneGroundSet(Mask ground, const FeasibilityFamily& family,
                    const SubmodularOracle& f) {
  if (!family.is_down_closed()) {
    throw std::invalid_argument(
        "pruning requires a down-closed family");
  }
  const Rational empty_value = f.Evaluate(0);
  Mask kept = 0;
  for (int u : Elements(ground)) {
    if (family.Contains(Singleton(u)) &&
        f.Evaluate(Singleton(u)) > empty_value) {
      kept |= Singleton(u);
    }
  }
  return kept;
}

}  // namespace csfm

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

#include "csfm/subset.h"

#include <algorithm>
#include <stdexcept>

namespace csfm {
namespace {

// Extends `chosen` by elements of `pool` at positions >= start until it has
// `remaining` more elements. Positions are visited in increasing order, so
// combinations come out lexicographically.
void Combinations(const std::vector<int>& pool, std::size_t start,
                  int remaining, Mask chosen,
                  const std::function<void(Mask)>& visit) {
  if (remaining == 0) {
    visit(chosen);
    return;
  }
  for (std::size_t i = start;
       i + static_cast<std::size_t>(remaining) <= pool.size(); ++i) {
    Combinations(pool, i + 1, remaining - 1, chosen | Singleton(pool[i]),
                 visit);
  }
}

}  // namespace

std::vector<int> Elements(Mask s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(Cardinality(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

void ForEachSubsetUpTo(Mask universe, int max_size,
                       const std::function<void(Mask)>& visit) {
  const std::vector<int> pool = Elements(universe);
  const int limit = std::min<int>(max_size, static_cast<int>(pool.size()));
  for (int size = 0; size <= limit; ++size) {
    Combinations(pool, 0, size, Mask{0}, visit);
  }
}

std::vector<Mask> AllSubsets(Mask universe) {
  if (Cardinality(universe) > 30) {
    throw std::length_error("refusing to enumerate more than 2^30 subsets");
  }
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << Cardinality(universe));
  // Walks submasks upward: s -> (s - universe) & universe.
  Mask s = 0;
  do {
    out.push_back(s);
    s = (s - universe) & universe;
  } while (s != 0);
  return out;
}

std::vector<int> Indicator(Mask s, int n) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int e : Elements(s)) out[static_cast<std::size_t>(e)] = 1;
  return out;
}

}  // namespace csfm

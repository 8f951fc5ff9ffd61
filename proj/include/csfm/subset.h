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

#ifndef CSFM_SUBSET_H_
#define CSFM_SUBSET_H_

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace csfm {

// A subset of the ground set. Bit i stands for the i-th element in the fixed
// element numbering; that numbering is also the lexicographic order.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

inline int Cardinality(Mask s) { return std::popcount(s); }

inline Mask FullMask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline Mask Singleton(int element) { return Mask{1} << element; }

inline bool Contains(Mask s, int element) { return (s >> element) & 1; }

inline bool IsSubset(Mask inner, Mask outer) { return (inner & ~outer) == 0; }

// Lexicographic order on sets of equal cardinality: compare the sorted
// element lists. The first difference is the lowest element of the
// symmetric difference.
inline bool LexLess(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

// The tie-breaking order used by every arg-max in the library: smaller
// cardinality first, then lexicographically smaller.
inline bool CanonicalLess(Mask a, Mask b) {
  const int ca = Cardinality(a);
  const int cb = Cardinality(b);
  if (ca != cb) return ca < cb;
  return LexLess(a, b);
}

// Element indices of s in increasing order.
std::vector<int> Elements(Mask s);

// Visits every subset of `universe` with at most `max_size` elements, in
// canonical order (by size, then lexicographically).
void ForEachSubsetUpTo(Mask universe, int max_size,
                       const std::function<void(Mask)>& visit);

// All subsets of `universe`, in increasing numeric order of the mask.
std::vector<Mask> AllSubsets(Mask universe);

// Indicator vector of length n with 0/1 entries.
std::vector<int> Indicator(Mask s, int n);

}  // namespace csfm

#endif  // CSFM_SUBSET_H_

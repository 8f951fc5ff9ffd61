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

#ifndef CSFM_FEASIBILITY_H_
#define CSFM_FEASIBILITY_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "csfm/matroid.h"
#include "csfm/subset.h"

namespace csfm {

enum class FamilyBackend { kExplicit, kMatroidIntersection, kKExchange,
                           kHardness };

std::string ToString(FamilyBackend backend);

// Membership oracle for a non-empty family F of subsets of E, plus whatever
// structure the backend exposes (explicit member list, matroids).
class FeasibilityFamily {
 public:
  using Membership = std::function<bool(Mask)>;

  FeasibilityFamily(int n, Membership membership, bool down_closed,
                    FamilyBackend backend, std::string description);

  // The explicit family `sets` (duplicates removed). Down-closure is
  // determined by inspection. Throws if `sets` is empty.
  static FeasibilityFamily Explicit(int n, std::vector<Mask> sets);

  // The intersection of the given matroids on a common ground set.
  static FeasibilityFamily MatroidIntersection(int n,
                                               std::vector<Matroid> matroids);

  int ground_size() const { return n_; }
  bool is_down_closed() const { return down_closed_; }
  FamilyBackend backend() const { return backend_; }
  const std::string& description() const { return description_; }

  bool Contains(Mask s) const {
    return IsSubset(s, restriction_) && membership_(s);
  }

  // Members of F, sorted by mask value. Explicit families return their
  // list; other backends filter all 2^n subsets (n <= 24).
  std::vector<Mask> Enumerate() const;

  // F restricted to subsets of `ground`.
  FeasibilityFamily Restrict(Mask ground) const;
  Mask restriction() const { return restriction_; }

  // Non-null for explicit families.
  const std::vector<Mask>* explicit_sets() const { return explicit_.get(); }
  // Non-null for matroid-intersection families.
  const std::vector<Matroid>* matroids() const { return matroids_.get(); }

  // Claimed exchange parameter for k-exchange backends (0 if unknown).
  int claimed_k() const { return claimed_k_; }
  void set_claimed_k(int k) { claimed_k_ = k; }

 private:
  int n_;
  Membership membership_;
  bool down_closed_;
  FamilyBackend backend_;
  std::string description_;
  Mask restriction_;
  std::shared_ptr<const std::vector<Mask>> explicit_;
  std::shared_ptr<const std::vector<Matroid>> matroids_;
  int claimed_k_ = 0;
};

// Full check of down-closure by enumeration (n <= 20).
bool CheckDownClosed(const FeasibilityFamily& family);

}  // namespace csfm

#endif  // CSFM_FEASIBILITY_H_

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

#ifndef CSFM_GROUND_SET_H_
#define CSFM_GROUND_SET_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "csfm/subset.h"

namespace csfm {

// The finite ground set E with its fixed element numbering. Immutable.
class GroundSet {
 public:
  // Elements e0, e1, ... (1-based names "e1".."en" to match textbook usage).
  static GroundSet Numbered(int n);

  // Throws std::invalid_argument on duplicate ids or more than 64 elements.
  explicit GroundSet(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  Mask full() const { return FullMask(size()); }
  const std::string& id(int element) const { return ids_[element]; }
  const std::vector<std::string>& ids() const { return ids_; }

  std::optional<int> IndexOf(std::string_view id) const;

  // "{a,b}" using element ids.
  std::string Format(Mask s) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace csfm

#endif  // CSFM_GROUND_SET_H_

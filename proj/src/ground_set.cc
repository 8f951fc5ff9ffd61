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

#include "csfm/ground_set.h"

#include <stdexcept>

namespace csfm {

GroundSet GroundSet::Numbered(int n) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) ids.push_back("e" + std::to_string(i));
  return GroundSet(std::move(ids));
}

GroundSet::GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw std::invalid_argument("ground set has more than 64 elements");
  }
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate ground set element '" + ids_[i] +
                                  "'");
    }
  }
}

std::optional<int> GroundSet::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GroundSet::Format(Mask s) const {
  std::string out = "{";
  bool first = true;
  for (int e : Elements(s)) {
    if (!first) out += ",";
    out += e < size() ? ids_[e] : "#" + std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace csfm

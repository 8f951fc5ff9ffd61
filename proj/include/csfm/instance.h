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

// Instance files. The schema is documented in docs/instance_format.md.

#ifndef CSFM_INSTANCE_H_
#define CSFM_INSTANCE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "csfm/feasibility.h"
#include "csfm/ground_set.h"
#include "csfm/hardness.h"
#include "csfm/neighborhood.h"
#include "csfm/oracle.h"

namespace csfm {

// A malformed instance. The message starts with the offending field path
// (for example "function.covers.e3") or, for syntax errors, "line L, column
// C".
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NeighborhoodSpec {
  enum class Kind { kSwap, kPolyhedral };
  Kind kind = Kind::kPolyhedral;
  int k = 1;
  int p = 1;
};

struct Instance {
  GroundSet ground;
  FunctionSpec function;
  FeasibilityFamily family;
  NeighborhoodSpec neighborhood;
  bool monotone = false;
  std::optional<HardnessInstance> hardness;
  std::string constraint_backend;

  SubmodularOracle MakeOracle() const;
  NeighborhoodFunction MakeNeighborhood() const;
  NeighborhoodFunction MakeNeighborhood(const NeighborhoodSpec& spec) const;
};

Instance ParseInstance(std::string_view text);
// Reads and parses a file; I/O failures are InstanceErrors too.
Instance LoadInstance(const std::string& path);

// A complete instance file for a hardness instance, with the secret fixed.
std::string HardnessInstanceJson(const HardnessInstance& instance);

// "swap:k:p" or "polyhedral".
NeighborhoodSpec ParseNeighborhoodSpec(const std::string& text);

}  // namespace csfm

#endif  // CSFM_INSTANCE_H_

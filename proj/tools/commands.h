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

#ifndef CSFM_TOOLS_COMMANDS_H_
#define CSFM_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "report.h"

namespace csfm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  OutputFormat format = OutputFormat::kText;
  bool timing = false;
};

struct SolveOptions {
  std::string instance;
  std::string algorithm = "iterative";
  std::string epsilon = "1/10";
  std::optional<std::string> alpha;
  std::optional<std::string> neighborhood;
  std::optional<std::string> start;
  bool verify = false;
  std::optional<std::string> trace;
};

struct ConicOptions {
  std::string instance;
  std::optional<std::string> neighborhood;
  std::optional<std::string> alpha;
  std::optional<std::size_t> samples;
  bool exhaustive = false;
};

struct GuaranteeOptions {
  std::optional<std::string> instance;
  std::string epsilon = "1/10";
  std::size_t count = 20;
  int p = 2;
};

struct LovaszOptions {
  std::string instance;
  std::string point;
  bool closure = false;
};

struct HardnessOptions {
  std::string mode = "adversary";
  int sqrt_n = 4;
  std::optional<int> beta;
  std::optional<int> c;
  int d = 1;
  std::size_t trials = 100;
  std::string strategy = "random-weights";
  std::size_t budget = 16;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code.
int RunSolve(const GlobalOptions& global, const SolveOptions& options,
             std::ostream& out, std::ostream& err);
int RunVerifyConic(const GlobalOptions& global, const ConicOptions& options,
                   std::ostream& out, std::ostream& err);
int RunVerifySubmodular(const GlobalOptions& global, const std::string& path,
                        std::ostream& out, std::ostream& err);
int RunVerifyGuarantees(const GlobalOptions& global,
                        const GuaranteeOptions& options, std::ostream& out,
                        std::ostream& err);
int RunLovaszEval(const GlobalOptions& global, const LovaszOptions& options,
                  std::ostream& out, std::ostream& err);
int RunHardness(const GlobalOptions& global, const HardnessOptions& options,
                std::ostream& out, std::ostream& err);
int RunBruteForce(const GlobalOptions& global, const std::string& path,
                  std::ostream& out, std::ostream& err);

}  // namespace csfm::cli

#endif  // CSFM_TOOLS_COMMANDS_H_

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

// csfm: local search for constrained submodular maximization.
//
//   csfm solve instance.json --algorithm iterative --epsilon 1/10 --verify
//   csfm verify conic instance.json --neighborhood swap:2:1 --alpha 2
//   csfm verify submodular instance.json
//   csfm verify guarantees [instance.json] --count 20
//   csfm lovasz eval instance.json --point 1/2,1/3,0
//   csfm hardness --sqrt-n 8 --beta 2 --strategy random-weights --budget 64
//   csfm brute-force instance.json

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using namespace csfm::cli;

  CLI::App app{"Local search for constrained submodular maximization"};
  app.require_subcommand(1);

  GlobalOptions global;
  std::string output = "text";
  app.add_option("--seed", global.seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", global.timing, "Include wall time in reports");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a local search");
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->check(CLI::IsMember({"monotone", "basic", "iterative"}))
      ->capture_default_str();
  solve_cmd->add_option("--epsilon", solve.epsilon)->capture_default_str();
  solve_cmd->add_option("--alpha", solve.alpha,
                        "Defaults to the neighborhood's claimed alpha");
  solve_cmd->add_option("--neighborhood", solve.neighborhood,
                        "polyhedral or swap:k:p");
  solve_cmd->add_option("--start", solve.start,
                        "Comma-separated start set (monotone only)");
  solve_cmd->add_flag("--verify", solve.verify,
                      "Compare with brute force (n <= 16)");
  solve_cmd->add_option("--trace", solve.trace, "Write step records here");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Property checks");
  verify_cmd->require_subcommand(1);

  ConicOptions conic;
  CLI::App* conic_cmd =
      verify_cmd->add_subcommand("conic", "Empirical alpha-conic check");
  conic_cmd->add_option("instance", conic.instance)->required();
  conic_cmd->add_option("--neighborhood", conic.neighborhood);
  conic_cmd->add_option("--alpha", conic.alpha);
  conic_cmd->add_option("--samples", conic.samples);
  conic_cmd->add_flag("--exhaustive", conic.exhaustive);

  std::string submodular_path;
  CLI::App* submodular_cmd =
      verify_cmd->add_subcommand("submodular", "Exhaustive submodularity check");
  submodular_cmd->add_option("instance", submodular_path)->required();

  GuaranteeOptions guarantees;
  CLI::App* guarantees_cmd = verify_cmd->add_subcommand(
      "guarantees", "Approximation guarantees against brute force");
  guarantees_cmd->add_option("instance", guarantees.instance,
                             "Omit for a random sweep");
  guarantees_cmd->add_option("--epsilon", guarantees.epsilon)->capture_default_str();
  guarantees_cmd->add_option("--count", guarantees.count, "Sweep size")
      ->capture_default_str();
  guarantees_cmd->add_option("--p", guarantees.p,
                             "Swap size for the 2-intersection sweep")
      ->capture_default_str();

  CLI::App* lovasz_cmd = app.add_subcommand("lovasz", "Lovasz extension");
  lovasz_cmd->require_subcommand(1);
  LovaszOptions lovasz;
  CLI::App* eval_cmd = lovasz_cmd->add_subcommand("eval", "Evaluate f_L(x)");
  eval_cmd->add_option("instance", lovasz.instance)->required();
  eval_cmd->add_option("--point", lovasz.point, "Comma-separated p/q values")
      ->required();
  eval_cmd->add_flag("--closure", lovasz.closure,
                     "Also solve the convex closure LP");

  HardnessOptions hardness;
  CLI::App* hardness_cmd =
      app.add_subcommand("hardness", "Linear optimization oracle simulator");
  hardness_cmd->add_option("--mode", hardness.mode)
      ->check(CLI::IsMember({"adversary", "detection", "instance"}))
      ->capture_default_str();
  hardness_cmd->add_option("--sqrt-n", hardness.sqrt_n)->capture_default_str();
  auto* beta_opt = hardness_cmd->add_option("--beta", hardness.beta);
  hardness_cmd->add_option("--c", hardness.c)->excludes(beta_opt);
  hardness_cmd->add_option("--d", hardness.d)->capture_default_str();
  hardness_cmd->add_option("--trials", hardness.trials)->capture_default_str();
  hardness_cmd->add_option("--strategy", hardness.strategy)
      ->check(CLI::IsMember({"random-weights", "greedy-probe", "known-special"}))
      ->capture_default_str();
  hardness_cmd->add_option("--budget", hardness.budget)->capture_default_str();

  std::string brute_path;
  CLI::App* brute_cmd =
      app.add_subcommand("brute-force", "Exact optimum by enumeration");
  brute_cmd->add_option("instance", brute_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::kText},
      {"csv", OutputFormat::kCsv},
      {"json", OutputFormat::kJson}};
  global.format = formats.at(output);

  if (*solve_cmd) return RunSolve(global, solve, std::cout, std::cerr);
  if (*conic_cmd) return RunVerifyConic(global, conic, std::cout, std::cerr);
  if (*submodular_cmd) {
    return RunVerifySubmodular(global, submodular_path, std::cout, std::cerr);
  }
  if (*guarantees_cmd) {
    return RunVerifyGuarantees(global, guarantees, std::cout, std::cerr);
  }
  if (*eval_cmd) return RunLovaszEval(global, lovasz, std::cout, std::cerr);
  if (*hardness_cmd) return RunHardness(global, hardness, std::cout, std::cerr);
  if (*brute_cmd) return RunBruteForce(global, brute_path, std::cout, std::cerr);
  return kBadInput;
}

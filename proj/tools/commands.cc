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

#include "commands.h"

#include <chrono>
#include <fstream>
#include <sstream>
#include <vector>

#include "csfm/brute_force.h"
#include "csfm/generators.h"
#include "csfm/hardness.h"
#include "csfm/instance.h"
#include "csfm/lovasz.h"
#include "csfm/neighborhood.h"
#include "csfm/search.h"

namespace csfm::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  if (!current.empty() || !parts.empty()) parts.push_back(current);
  return parts;
}

Mask ParseSet(const GroundSet& ground, const std::string& text) {
  Mask set = 0;
  for (const std::string& id : SplitCommas(text)) {
    if (id.empty()) continue;
    const auto index = ground.IndexOf(id);
    if (!index) throw std::invalid_argument("unknown element \"" + id + "\"");
    set |= Singleton(*index);
  }
  return set;
}

std::string Ms(Clock::time_point start) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      Clock::now() - start);
  std::ostringstream out;
  out << elapsed.count() / 1000 << "." << (elapsed.count() % 1000) / 100;
  return out.str();
}

Rational MonotoneFactor(const Rational& alpha, const Rational& epsilon) {
  return 1 / (alpha + 1 + epsilon);
}

// floor(alpha) / ((floor(alpha) + 1)(alpha + 1 + eps)).
Rational IterativeFactor(const Rational& alpha, const Rational& epsilon) {
  const Rational rounds(Floor(alpha));
  return rounds / ((rounds + 1) * (alpha + 1 + epsilon));
}

std::string Status(bool ok) { return ok ? "ok" : "VIOLATED"; }

// (alpha + 1 + eps) f(S) >= f(Q u T) + alpha f(Q n T) for every T in F.
bool PairInequalityHolds(const SubmodularOracle& f,
                         const FeasibilityFamily& family, Mask s, Mask q,
                         const Rational& alpha, const Rational& epsilon) {
  const Rational lhs = (alpha + 1 + epsilon) * f.Evaluate(s);
  for (Mask t : family.Enumerate()) {
    if (lhs < f.Evaluate(q | t) + alpha * f.Evaluate(q & t)) return false;
  }
  return true;
}

}  // namespace

int RunSolve(const GlobalOptions& global, const SolveOptions& options,
             std::ostream& out, std::ostream& err) {
  const Clock::time_point started = Clock::now();
  std::optional<Instance> instance;
  SearchConfig config;
  std::optional<NeighborhoodFunction> neighborhood;
  try {
    instance.emplace(LoadInstance(options.instance));
    config.epsilon = ParseRational(options.epsilon);
    neighborhood.emplace(
        options.neighborhood
            ? instance->MakeNeighborhood(ParseNeighborhoodSpec(*options.neighborhood))
            : instance->MakeNeighborhood());
    config.alpha = options.alpha ? ParseRational(*options.alpha)
                                 : neighborhood->claimed_alpha();
    config.threads = global.threads;
    config.Validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const SubmodularOracle f = instance->MakeOracle();
  const GroundSet& ground = instance->ground;

  Report report;
  report.Add("instance", options.instance);
  report.Add("n", std::to_string(ground.size()));
  report.Add("function", ToString(instance->function.kind()));
  report.Add("constraint", instance->family.description());
  report.Add("neighborhood", neighborhood->description());
  report.Add("algorithm", options.algorithm);
  report.Add("epsilon", FormatRational(config.epsilon));
  report.Add("alpha", FormatRational(config.alpha));

  Mask result = 0;
  Rational value;
  std::size_t steps = 0;
  std::string trace_text;
  std::optional<Rational> factor;
  try {
    if (options.algorithm == "monotone") {
      if (!instance->monotone) {
        err << "error: the monotone algorithm needs a monotone function\n";
        return kBadInput;
      }
      const Mask start = options.start ? ParseSet(ground, *options.start) : 0;
      const MonotoneResult run =
          MonotoneLocalSearch(f, *neighborhood, start, config);
      result = run.set;
      value = run.value;
      steps = run.trace.steps;
      trace_text = FormatTrace(run.trace);
      report.Add("step_limit", std::to_string(run.step_limit));
      factor = MonotoneFactor(config.alpha, config.epsilon);
    } else if (options.algorithm == "basic") {
      const Mask pruned =
          PruneGroundSet(neighborhood->family().restriction(), instance->family, f);
      if (pruned == 0) {
        value = f.Evaluate(0);
      } else {
        const BasicResult run = BasicLocalSearch(f, *neighborhood, pruned, config);
        result = run.s;
        value = f.Evaluate(run.s);
        steps = run.trace.steps;
        trace_text = FormatTrace(run.trace);
        report.Add("q", ground.Format(run.q));
        report.Add("step_bound",
                   std::to_string(BasicStepBound(
                       static_cast<std::size_t>(Cardinality(pruned)),
                       ground.size(), config.alpha, config.epsilon)));
      }
      if (instance->monotone) factor = MonotoneFactor(config.alpha, config.epsilon);
    } else if (options.algorithm == "iterative") {
      const IterativeResult run = IterativeLocalSearch(f, *neighborhood, config);
      result = run.set;
      value = run.value;
      steps = run.trace.total_steps();
      std::ostringstream text;
      for (std::size_t r = 0; r < run.trace.rounds.size(); ++r) {
        const IterativeRound& round = run.trace.rounds[r];
        text << "round " << r + 1 << " E=" << ground.Format(round.ground)
             << " S=" << ground.Format(round.s) << " Q=" << ground.Format(round.q)
             << " f=" << FormatRational(round.value) << "\n";
        if (round.trace) text << FormatTrace(*round.trace);
      }
      trace_text = text.str();
      report.Add("rounds", std::to_string(run.trace.rounds.size()));
      factor = IterativeFactor(config.alpha, config.epsilon);
    } else {
      err << "error: unknown algorithm \"" << options.algorithm << "\"\n";
      return kBadInput;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const std::int64_t calls = f.call_count();

  report.Add("result", ground.Format(result));
  report.Add("value", FormatRational(value));
  report.Add("steps", std::to_string(steps));
  report.Add("oracle_calls", std::to_string(calls));
  if (instance->hardness) {
    const HardnessInstance& h = *instance->hardness;
    report.Add("beta", std::to_string(h.beta()));
    report.Add("sqrt_n", std::to_string(h.sqrt_n()));
    report.Add("f_secret", std::to_string(h.Value(h.secret_mask())));
    report.Add("result_class", ToString(h.Classify(result)));
  }

  int code = kOk;
  if (options.verify) {
    if (ground.size() > 16) {
      err << "error: --verify needs n <= 16\n";
      return kBadInput;
    }
    const Optimum opt = BruteForceOpt(instance->MakeOracle(), instance->family);
    report.Add("brute_force_set", ground.Format(opt.set));
    report.Add("brute_force_value", FormatRational(opt.value));
    if (sgn(opt.value) > 0) {
      report.Add("ratio", FormatRational(value / opt.value));
    }
    if (factor) {
      const bool holds = value >= *factor * opt.value;
      report.Add("guaranteed_ratio", FormatRational(*factor));
      report.Add("guarantee", Status(holds));
      if (!holds) code = kCheckFailed;
    }
  }
  if (global.timing) report.Add("wall_time_ms", Ms(started));
  if (options.trace) {
    std::ofstream trace_file(*options.trace);
    if (!trace_file) {
      err << "error: cannot write " << *options.trace << "\n";
      return kBadInput;
    }
    trace_file << trace_text;
  }
  out << report.Render(global.format);
  return code;
}

int RunVerifyConic(const GlobalOptions& global, const ConicOptions& options,
                   std::ostream& out, std::ostream& err) {
  const Clock::time_point started = Clock::now();
  ConicReport result;
  std::optional<Instance> instance;
  try {
    instance.emplace(LoadInstance(options.instance));
    const NeighborhoodFunction neighborhood =
        options.neighborhood
            ? instance->MakeNeighborhood(ParseNeighborhoodSpec(*options.neighborhood))
            : instance->MakeNeighborhood();
    const Rational alpha = options.alpha ? ParseRational(*options.alpha)
                                         : neighborhood.claimed_alpha();
    ConicCheckOptions check;
    check.samples = options.samples;
    check.exhaustive = options.exhaustive;
    check.seed = global.seed;
    check.threads = global.threads;
    result = EmpiricalConicCheck(neighborhood, alpha, check);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const GroundSet& ground = instance->ground;
  Report report;
  report.Add("instance", options.instance);
  report.Add("alpha", FormatRational(result.alpha));
  report.Add("family_size", std::to_string(result.family_size));
  report.Add("mode", result.exhaustive ? "exhaustive" : "sampled");
  report.Add("pairs", std::to_string(result.pairs.size()));
  report.Add("failures", std::to_string(result.failures()));
  report.Add("status", result.all_passed() ? "pass" : "fail");
  if (global.timing) report.Add("wall_time_ms", Ms(started));
  report.SetColumns({"s", "t", "neighbors", "member", "certificate"});
  for (const ConicPairResult& pair : result.pairs) {
    std::string certificate;
    if (pair.certificate) {
      for (const CertificateTerm& term : pair.certificate->terms) {
        if (!certificate.empty()) certificate += ";";
        certificate += ground.Format(term.set) + "*" + FormatRational(term.lambda);
      }
    }
    report.AddRow({ground.Format(pair.s), ground.Format(pair.t),
                   std::to_string(pair.neighborhood_size),
                   pair.certificate ? "yes" : "no",
                   certificate.empty() ? "-" : certificate});
  }
  out << report.Render(global.format);
  return result.all_passed() ? kOk : kCheckFailed;
}

int RunVerifySubmodular(const GlobalOptions& global, const std::string& path,
                        std::ostream& out, std::ostream& err) {
  std::optional<Instance> instance;
  SubmodularityCheck check;
  try {
    instance.emplace(LoadInstance(path));
    check = CheckSubmodular(instance->MakeOracle());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  Report report;
  report.Add("instance", path);
  report.Add("submodular", check.submodular ? "yes" : "no");
  if (check.violation) {
    const auto [s, t] = *check.violation;
    const FunctionSpec& spec = instance->function;
    report.Add("witness_s", instance->ground.Format(s));
    report.Add("witness_t", instance->ground.Format(t));
    report.Add("f(S)+f(T)", FormatRational(spec.Value(s) + spec.Value(t)));
    report.Add("f(S|T)+f(S&T)",
               FormatRational(spec.Value(s | t) + spec.Value(s & t)));
  }
  out << report.Render(global.format);
  return check.submodular ? kOk : kCheckFailed;
}

namespace {

struct GuaranteeRow {
  std::string check;
  std::string detail;
  bool ok = true;
};

// All applicable checks on one instance.
std::vector<GuaranteeRow> InstanceGuarantees(const Instance& instance,
                                             const Rational& epsilon,
                                             int threads) {
  std::vector<GuaranteeRow> rows;
  const SubmodularOracle f = instance.MakeOracle();
  const NeighborhoodFunction neighborhood = instance.MakeNeighborhood();
  SearchConfig config;
  config.epsilon = epsilon;
  config.alpha = neighborhood.claimed_alpha();
  config.threads = threads;
  const Optimum opt = BruteForceOpt(f, instance.family);
  const GroundSet& ground = instance.ground;

  if (instance.monotone && instance.family.Contains(0)) {
    const MonotoneResult run = MonotoneLocalSearch(f, neighborhood, 0, config);
    const bool ok = (config.alpha + 1 + epsilon) * run.value >= opt.value;
    rows.push_back({"monotone", FormatRational(run.value) + " vs opt " +
                                    FormatRational(opt.value),
                    ok});
  }
  if (instance.family.is_down_closed()) {
    const IterativeResult run = IterativeLocalSearch(f, neighborhood, config);
    const bool ok = run.value >= IterativeFactor(config.alpha, epsilon) * opt.value;
    rows.push_back({"iterative", FormatRational(run.value) + " vs opt " +
                                     FormatRational(opt.value),
                    ok});
    const Mask pruned = run.trace.pruned_ground;
    if (pruned != 0) {
      const BasicResult basic = BasicLocalSearch(f, neighborhood, pruned, config);
      const std::size_t bound = BasicStepBound(
          static_cast<std::size_t>(Cardinality(pruned)), ground.size(),
          config.alpha, epsilon);
      rows.push_back({"basic-steps",
                      std::to_string(basic.trace.steps) + " <= " +
                          std::to_string(bound),
                      basic.trace.steps <= bound});
      rows.push_back({"basic-pair-inequality",
                      "S=" + ground.Format(basic.s) + " Q=" + ground.Format(basic.q),
                      PairInequalityHolds(f, instance.family, basic.s, basic.q,
                                          config.alpha, epsilon)});
    }
  }
  return rows;
}

// Random sweep over the three headline settings at n <= 8.
std::vector<GuaranteeRow> SweepGuarantees(const GuaranteeOptions& options,
                                          const Rational& epsilon,
                                          std::uint64_t seed, int threads) {
  std::vector<GuaranteeRow> rows;
  Rng rng(seed);
  const Rational half = epsilon / 2;
  for (std::size_t trial = 0; trial < options.count; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const std::string tag = "#" + std::to_string(trial) + " n=" + std::to_string(n);
    {
      const FeasibilityFamily family = FeasibilityFamily::MatroidIntersection(
          n, {RandomMatroid(n, rng)});
      const SubmodularOracle f(RandomCoverage(n, n, rng));
      SearchConfig config;
      config.epsilon = epsilon;
      config.threads = threads;
      const MonotoneResult run = MonotoneLocalSearch(
          f, NeighborhoodFunction::Polyhedral(family), 0, config);
      const Rational opt = BruteForceOpt(f, family).value;
      rows.push_back({"monotone-matroid", tag,
                      (2 + epsilon) * run.value >= opt});
    }
    {
      const FeasibilityFamily family = RandomDownClosedFamily(n, rng);
      const SubmodularOracle f(RandomMixture(n, rng));
      SearchConfig config;
      config.epsilon = half;
      config.threads = threads;
      const IterativeResult run = IterativeLocalSearch(
          f, NeighborhoodFunction::Polyhedral(family), config);
      const Rational opt = BruteForceOpt(f, family).value;
      rows.push_back({"iterative-down-closed", tag,
                      (4 + epsilon) * run.value >= opt});
    }
    {
      const FeasibilityFamily family = RandomPartitionIntersection(n, 2, rng);
      const SubmodularOracle f(RandomMixture(n, rng));
      SearchConfig config;
      config.alpha = 1 + Rational(1, options.p);
      config.epsilon = half;
      config.threads = threads;
      const IterativeResult run = IterativeLocalSearch(
          f, NeighborhoodFunction::Swap(family, 2, options.p), config);
      const Rational opt = BruteForceOpt(f, family).value;
      rows.push_back({"iterative-2-intersection", tag,
                      (4 + epsilon) * run.value >= opt});
    }
  }
  return rows;
}

}  // namespace

int RunVerifyGuarantees(const GlobalOptions& global,
                        const GuaranteeOptions& options, std::ostream& out,
                        std::ostream& err) {
  std::vector<GuaranteeRow> rows;
  Rational epsilon;
  try {
    epsilon = ParseRational(options.epsilon);
    if (sgn(epsilon) <= 0) throw std::invalid_argument("epsilon must be positive");
    if (options.p < 1) throw std::invalid_argument("p must be positive");
    if (options.instance) {
      const Instance instance = LoadInstance(*options.instance);
      if (instance.ground.size() > 16) {
        throw std::invalid_argument("guarantee checks need n <= 16");
      }
      rows = InstanceGuarantees(instance, epsilon, global.threads);
    } else {
      rows = SweepGuarantees(options, epsilon, global.seed, global.threads);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  std::size_t failures = 0;
  Report report;
  report.Add("epsilon", FormatRational(epsilon));
  report.SetColumns({"check", "detail", "status"});
  for (const GuaranteeRow& row : rows) {
    failures += row.ok ? 0 : 1;
    report.AddRow({row.check, row.detail, Status(row.ok)});
  }
  report.Add("checks", std::to_string(rows.size()));
  report.Add("failures", std::to_string(failures));
  out << report.Render(global.format);
  return failures == 0 ? kOk : kCheckFailed;
}

int RunLovaszEval(const GlobalOptions& global, const LovaszOptions& options,
                  std::ostream& out, std::ostream& err) {
  Report report;
  try {
    const Instance instance = LoadInstance(options.instance);
    std::vector<Rational> coordinates;
    for (const std::string& part : SplitCommas(options.point)) {
      coordinates.push_back(ParseRational(part));
    }
    if (coordinates.size() != static_cast<std::size_t>(instance.ground.size())) {
      throw std::invalid_argument("the point needs one coordinate per element");
    }
    const FractionalPoint x(coordinates);
    const SubmodularOracle f = instance.MakeOracle();
    const Rational value = LovaszValue(f, x);
    report.Add("instance", options.instance);
    report.Add("lovasz", FormatRational(value));
    report.Add("decimal", FormatDecimal(value));
    if (options.closure) {
      const ConvexClosure closure = ConvexClosureValue(f, x);
      report.Add("convex_closure", FormatRational(closure.value));
      report.Add("closure_decimal", FormatDecimal(closure.value));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  out << report.Render(global.format);
  return kOk;
}

int RunHardness(const GlobalOptions& global, const HardnessOptions& options,
                std::ostream& out, std::ostream& err) {
  HardnessParams params;
  params.sqrt_n = options.sqrt_n;
  params.beta = options.beta;
  params.c = options.c;
  params.d = options.d;
  params.seed = global.seed;
  // Tables default to CSV here.
  const OutputFormat format =
      global.format == OutputFormat::kText ? OutputFormat::kCsv : global.format;
  try {
    if (options.mode == "instance") {
      out << HardnessInstanceJson(HardnessInstance::Generate(params));
      return kOk;
    }
    if (options.mode == "adversary") {
      const AdversaryStrategy strategy = ParseAdversaryStrategy(options.strategy);
      const AdversaryReport result = RunAdversary(
          params, strategy, options.budget, options.trials, global.threads);
      if (format == OutputFormat::kCsv) {
        out << result.ToCsv();
        return kOk;
      }
      Report report;
      report.Add("strategy", options.strategy);
      report.Add("detections", std::to_string(result.detections()));
      report.SetColumns({"trial", "queries_used", "detected_special",
                         "best_value", "ratio_to_opt"});
      for (const AdversaryTrial& t : result.trials) {
        report.AddRow({std::to_string(t.trial), std::to_string(t.queries_used),
                       t.detected_special ? "1" : "0",
                       std::to_string(t.best_value),
                       FormatRational(t.ratio_to_opt)});
      }
      out << report.Render(format);
      return kOk;
    }
    if (options.mode == "detection") {
      // One seeded random weight vector, probability per beta.
      const HardnessInstance base = HardnessInstance::Generate(
          {params.sqrt_n, 1, std::nullopt, params.d, params.seed});
      Rng rng(global.seed);
      std::vector<Rational> w;
      for (int e = 0; e < base.n(); ++e) w.push_back(RandomInteger(rng, 0, 100));
      Report report;
      report.Add("sqrt_n", std::to_string(params.sqrt_n));
      report.Add("trials", std::to_string(options.trials));
      report.SetColumns({"beta", "exact", "monte_carlo"});
      for (int beta = 1; beta <= params.sqrt_n; ++beta) {
        const HardnessInstance instance =
            HardnessInstance::WithSecret(params.sqrt_n, beta, base.secret());
        report.AddRow(
            {std::to_string(beta),
             FormatRational(DetectionProbabilityExact(instance, w)),
             FormatRational(DetectionProbabilityMonteCarlo(
                 instance, w, options.trials, global.seed + beta))});
      }
      out << report.Render(format);
      return kOk;
    }
    err << "error: unknown mode \"" << options.mode << "\"\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

int RunBruteForce(const GlobalOptions& global, const std::string& path,
                  std::ostream& out, std::ostream& err) {
  Report report;
  try {
    const Instance instance = LoadInstance(path);
    const Optimum opt = BruteForceOpt(instance.MakeOracle(), instance.family);
    report.Add("instance", path);
    report.Add("opt_set", instance.ground.Format(opt.set));
    report.Add("opt_value", FormatRational(opt.value));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  out << report.Render(global.format);
  return kOk;
}

}  // namespace csfm::cli

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

#include "csfm/hardness.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace csfm {
namespace {

void CheckSize(const HardnessInstance& instance,
               const std::vector<Rational>& w) {
  if (w.size() != static_cast<std::size_t>(instance.n())) {
    throw std::invalid_argument("weight vector has the wrong length");
  }
}

void CheckNonNegative(const std::vector<Rational>& w) {
  for (const Rational& x : w) {
    if (sgn(x) < 0) throw std::domain_error("negative weight");
  }
}

std::vector<int> SampleSecret(int sqrt_n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, sqrt_n - 1);
  std::vector<int> secret;
  for (int i = 0; i < sqrt_n; ++i) secret.push_back(i * sqrt_n + pick(rng));
  return secret;
}

// All sums w(t_i) + ... over blocks [first, last), one element per block.
std::vector<Rational> TransversalSums(const HardnessInstance& instance,
                                      const std::vector<Rational>& w,
                                      int first, int last) {
  std::vector<Rational> sums{Rational(0)};
  const int m = instance.sqrt_n();
  for (int b = first; b < last; ++b) {
    std::vector<Rational> next;
    next.reserve(sums.size() * static_cast<std::size_t>(m));
    for (const Rational& s : sums) {
      for (int k = 0; k < m; ++k) next.push_back(s + w[b * m + k]);
    }
    sums = std::move(next);
  }
  return sums;
}

}  // namespace

int BetaFromFormula(int n, int c) {
  if (n < 16) throw std::domain_error("the beta formula needs n >= 16");
  if (c < 1) throw std::invalid_argument("c must be positive");
  const double ln = std::log(static_cast<double>(n));
  return c * static_cast<int>(std::ceil(ln / std::log(ln)));
}

std::string ToString(SetClass value) {
  switch (value) {
    case SetClass::kInfeasible:
      return "infeasible";
    case SetClass::kStandard:
      return "standard";
    case SetClass::kSpecial:
      return "special";
  }
  return "unknown";
}

HardnessInstance HardnessInstance::Generate(const HardnessParams& params) {
  if (params.sqrt_n < 2 || params.sqrt_n > kMaxHardnessBlocks) {
    throw std::invalid_argument("sqrt_n must lie in [2, 8]");
  }
  if (params.d < 1) throw std::invalid_argument("d must be positive");
  const int n = params.sqrt_n * params.sqrt_n;
  const int c = params.c.value_or(2 * params.d + 2);
  const int beta = params.beta ? *params.beta : BetaFromFormula(n, c);
  std::mt19937_64 rng(params.seed);
  HardnessInstance instance =
      WithSecret(params.sqrt_n, beta, SampleSecret(params.sqrt_n, rng));
  instance.c_ = c;
  instance.d_ = params.d;
  instance.seed_ = params.seed;
  return instance;
}

HardnessInstance HardnessInstance::WithSecret(int sqrt_n, int beta,
                                              std::vector<int> secret) {
  if (sqrt_n < 2 || sqrt_n > kMaxHardnessBlocks) {
    throw std::invalid_argument("sqrt_n must lie in [2, 8]");
  }
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  if (secret.size() != static_cast<std::size_t>(sqrt_n)) {
    throw std::invalid_argument("secret needs one element per block");
  }
  HardnessInstance instance;
  instance.sqrt_n_ = sqrt_n;
  instance.beta_ = beta;
  for (int i = 0; i < sqrt_n; ++i) {
    if (secret[i] / sqrt_n != i || secret[i] < 0) {
      throw std::invalid_argument("secret element outside its block");
    }
    instance.secret_mask_ |= Singleton(secret[i]);
  }
  instance.secret_ = std::move(secret);
  return instance;
}

Mask HardnessInstance::Block(int i) const {
  return ((Mask{1} << sqrt_n_) - 1) << (i * sqrt_n_);
}

int HardnessInstance::Value(Mask f) const {
  int touched = 0;
  for (int i = 0; i < sqrt_n_; ++i) touched += (f & Block(i)) != 0;
  return touched;
}

SetClass HardnessInstance::Classify(Mask f) const {
  if (!IsSubset(f, FullMask(n()))) return SetClass::kInfeasible;
  if (Value(f) <= beta_) return SetClass::kStandard;
  if (IsSubset(f, secret_mask_)) return SetClass::kSpecial;
  return SetClass::kInfeasible;
}

FunctionSpec HardnessInstance::Objective() const {
  std::vector<std::vector<int>> covers;
  for (int e = 0; e < n(); ++e) covers.push_back({BlockOf(e)});
  return FunctionSpec::Coverage(n(), std::move(covers));
}

FeasibilityFamily HardnessInstance::Family() const {
  HardnessInstance copy = *this;
  return FeasibilityFamily(
      n(), [copy](Mask f) { return copy.Classify(f) != SetClass::kInfeasible; },
      /*down_closed=*/true, FamilyBackend::kHardness,
      "hardness(sqrt_n=" + std::to_string(sqrt_n_) +
          ",beta=" + std::to_string(beta_) + ")");
}

Rational MaxStandardValue(const HardnessInstance& instance,
                          const std::vector<Rational>& w) {
  CheckSize(instance, w);
  CheckNonNegative(w);
  std::vector<Rational> sums;
  for (int i = 0; i < instance.sqrt_n(); ++i) {
    Rational s = 0;
    for (int e : Elements(instance.Block(i))) s += w[e];
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end(), std::greater<>());
  Rational total = 0;
  for (int i = 0; i < std::min(instance.beta(), instance.sqrt_n()); ++i) {
    total += sums[i];
  }
  return total;
}

LinOptAnswer LinOptOracle(const HardnessInstance& instance,
                          const std::vector<Rational>& w, bool clamp) {
  CheckSize(instance, w);
  std::vector<Rational> weights = w;
  for (Rational& x : weights) {
    if (sgn(x) < 0) {
      if (!clamp) throw std::domain_error("negative weight");
      x = 0;
    }
  }
  struct BlockInfo {
    int index;
    Rational sum;
    int positives;
    Mask support;
  };
  std::vector<BlockInfo> blocks;
  for (int i = 0; i < instance.sqrt_n(); ++i) {
    BlockInfo info{i, 0, 0, 0};
    for (int e : Elements(instance.Block(i))) {
      if (sgn(weights[e]) > 0) {
        info.sum += weights[e];
        ++info.positives;
        info.support |= Singleton(e);
      }
    }
    if (info.positives > 0) blocks.push_back(std::move(info));
  }
  // Heavier blocks first; among equal sums, fewer elements, then the
  // earlier block, whose elements come first in the numbering.
  std::sort(blocks.begin(), blocks.end(),
            [](const BlockInfo& a, const BlockInfo& b) {
              if (a.sum != b.sum) return a.sum > b.sum;
              if (a.positives != b.positives) return a.positives < b.positives;
              return a.index < b.index;
            });
  LinOptAnswer answer;
  answer.value = 0;
  const std::size_t take =
      std::min(blocks.size(), static_cast<std::size_t>(instance.beta()));
  for (std::size_t i = 0; i < take; ++i) {
    answer.set |= blocks[i].support;
    answer.value += blocks[i].sum;
  }
  Mask special = 0;
  Rational special_value = 0;
  for (int t : instance.secret()) {
    if (sgn(weights[t]) > 0) {
      special |= Singleton(t);
      special_value += weights[t];
    }
  }
  if (special_value > answer.value) {
    answer.set = special;
    answer.value = special_value;
  }
  answer.set_class = instance.Classify(answer.set);
  return answer;
}

std::vector<Rational> NormalizeWeights(const HardnessInstance& instance,
                                       const std::vector<Rational>& w) {
  CheckSize(instance, w);
  CheckNonNegative(w);
  std::vector<Rational> normalized(w.size(), Rational(0));
  for (int i = 0; i < instance.sqrt_n(); ++i) {
    Rational total = 0;
    for (int e : Elements(instance.Block(i))) total += w[e];
    if (sgn(total) == 0) continue;
    Rational check = 0;
    for (int e : Elements(instance.Block(i))) {
      normalized[e] = w[e] / total;
      check += normalized[e];
    }
    if (check != 1) throw std::logic_error("normalized block does not sum to 1");
  }
  return normalized;
}

Rational DetectionProbabilityExact(const HardnessInstance& instance,
                                   const std::vector<Rational>& w) {
  const Rational threshold = MaxStandardValue(instance, w);
  const int m = instance.sqrt_n();
  const int half = m / 2;
  const std::vector<Rational> left = TransversalSums(instance, w, 0, half);
  std::vector<Rational> right = TransversalSums(instance, w, half, m);
  std::sort(right.begin(), right.end());
  long long hits = 0;
  for (const Rational& a : left) {
    const Rational need = threshold - a;
    hits += right.end() - std::upper_bound(right.begin(), right.end(), need);
  }
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= m;
  return Fraction(static_cast<long>(hits), static_cast<long>(total));
}

Rational DetectionProbabilityMonteCarlo(const HardnessInstance& instance,
                                        const std::vector<Rational>& w,
                                        std::size_t trials,
                                        std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const Rational threshold = MaxStandardValue(instance, w);
  std::mt19937_64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rational value = 0;
    for (int e : SampleSecret(instance.sqrt_n(), rng)) value += w[e];
    if (value > threshold) ++hits;
  }
  return Fraction(static_cast<long>(hits), static_cast<long>(trials));
}

std::string ToString(AdversaryStrategy strategy) {
  switch (strategy) {
    case AdversaryStrategy::kRandomWeights:
      return "random-weights";
    case AdversaryStrategy::kGreedyProbe:
      return "greedy-probe";
    case AdversaryStrategy::kKnownSpecial:
      return "known-special";
  }
  return "unknown";
}

AdversaryStrategy ParseAdversaryStrategy(const std::string& name) {
  for (AdversaryStrategy s :
       {AdversaryStrategy::kRandomWeights, AdversaryStrategy::kGreedyProbe,
        AdversaryStrategy::kKnownSpecial}) {
    if (ToString(s) == name) return s;
  }
  throw std::invalid_argument("unknown strategy: " + name);
}

std::size_t AdversaryReport::detections() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(),
                    [](const AdversaryTrial& t) { return t.detected_special; }));
}

std::string AdversaryReport::ToCsv() const {
  std::ostringstream out;
  out << "trial,queries_used,detected_special,best_value,ratio_to_opt\n";
  for (const AdversaryTrial& t : trials) {
    out << t.trial << "," << t.queries_used << ","
        << (t.detected_special ? 1 : 0) << "," << t.best_value << ","
        << FormatRational(t.ratio_to_opt) << "\n";
  }
  return out.str();
}

namespace {

// The weights of query q (0-based) for one trial.
std::vector<Rational> NextQuery(const HardnessInstance& instance,
                                AdversaryStrategy strategy, std::size_t q,
                                std::mt19937_64& rng) {
  const int n = instance.n();
  const int m = instance.sqrt_n();
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  switch (strategy) {
    case AdversaryStrategy::kRandomWeights: {
      std::uniform_int_distribution<int> pick(0, 100);
      for (Rational& x : w) x = pick(rng);
      break;
    }
    case AdversaryStrategy::kGreedyProbe: {
      // Transversal number q, read as base-m digits, one per block.
      std::size_t code = q;
      for (int b = 0; b < m; ++b) {
        w[b * m + static_cast<int>(code % m)] = 1;
        code /= static_cast<std::size_t>(m);
      }
      break;
    }
    case AdversaryStrategy::kKnownSpecial: {
      // Cheats: n on the first beta + 1 secret elements, 1 elsewhere.
      std::fill(w.begin(), w.end(), Rational(1));
      const int size = std::min(instance.beta() + 1, m);
      for (int i = 0; i < size; ++i) w[instance.secret()[i]] = n;
      break;
    }
  }
  return w;
}

AdversaryTrial RunTrial(const HardnessParams& params,
                        AdversaryStrategy strategy, std::size_t budget,
                        std::size_t index, std::uint64_t trial_seed) {
  HardnessParams local = params;
  local.seed = trial_seed;
  const HardnessInstance instance = HardnessInstance::Generate(local);
  std::mt19937_64 rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);

  AdversaryTrial trial;
  trial.trial = index;
  // Fallback answer: one element from each of the first beta blocks.
  Mask guess = 0;
  for (int i = 0; i < std::min(instance.beta(), instance.sqrt_n()); ++i) {
    guess |= Singleton(i * instance.sqrt_n());
  }
  trial.best_value = instance.Value(guess);

  for (std::size_t q = 0; q < budget; ++q) {
    const LinOptAnswer answer =
        LinOptOracle(instance, NextQuery(instance, strategy, q, rng));
    ++trial.queries_used;
    trial.best_value = std::max(trial.best_value, instance.Value(answer.set));
    if (answer.set_class == SetClass::kSpecial) {
      trial.detected_special = true;
      // A special answer with one element per block is already T.
      if (Cardinality(answer.set) == instance.sqrt_n()) break;
      std::vector<Rational> recover(static_cast<std::size_t>(instance.n()),
                                    Rational(1));
      for (int e : Elements(answer.set)) recover[e] = instance.n();
      const LinOptAnswer full = LinOptOracle(instance, recover);
      ++trial.queries_used;
      trial.best_value = std::max(trial.best_value, instance.Value(full.set));
      break;
    }
  }
  trial.ratio_to_opt = trial.best_value / Rational(instance.sqrt_n());
  return trial;
}

}  // namespace

AdversaryReport RunAdversary(const HardnessParams& params,
                             AdversaryStrategy strategy, std::size_t budget,
                             std::size_t trials, int threads) {
  std::mt19937_64 master(params.seed);
  std::vector<std::uint64_t> seeds(trials);
  for (std::uint64_t& s : seeds) s = master();

  AdversaryReport report;
  report.trials.resize(trials);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t t = begin; t < trials; t += stride) {
      report.trials[t] = RunTrial(params, strategy, budget, t, seeds[t]);
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (std::thread& t : pool) t.join();
  }
  return report;
}

}  // namespace csfm

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

#include "csfm/search.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace csfm {
namespace {

std::vector<Rational> EvaluateAll(const SubmodularOracle& f,
                                  const std::vector<Mask>& sets, int threads) {
  std::vector<Rational> values(sets.size());
  const std::size_t workers = static_cast<std::size_t>(
      std::clamp<int>(threads, 1, static_cast<int>(std::max<std::size_t>(
                                      sets.size(), 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) values[i] = f.Evaluate(sets[i]);
    return values;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < sets.size(); i += workers) {
        values[i] = f.Evaluate(sets[i]);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return values;
}

// Index of the best value, ties to the canonically smallest set.
std::size_t ArgMax(const std::vector<Mask>& sets,
                   const std::vector<Rational>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (values[i] > values[best] ||
        (values[i] == values[best] && CanonicalLess(sets[i], sets[best]))) {
      best = i;
    }
  }
  return best;
}

// Runs one most-improving step from the last visited set and logs it.
void Advance(const SubmodularOracle& f, const NeighborhoodFunction& n,
             std::size_t j, std::size_t i, int threads, SearchTrace& trace) {
  const Mask current = trace.sets_visited.back();
  const StepResult step = MostImprovingStep(f, n, current, threads);
  // The scan re-evaluates S_j; it must agree with the stored value.
  if (step.value - step.delta != trace.values.back()) {
    throw std::logic_error("oracle is not deterministic");
  }
  trace.sets_visited.push_back(step.next);
  trace.values.push_back(step.value);
  trace.deltas.push_back(step.delta);
  trace.scan_sizes.push_back(step.neighborhood_size);
  trace.oracle_calls += static_cast<std::int64_t>(step.neighborhood_size);
  ++trace.steps;
  trace.records.push_back(
      {j, i, step.neighborhood_size, trace.values[j], step.delta});
}

bool CapReached(const SearchTrace& trace, const SearchConfig& config) {
  return config.max_steps_override && trace.steps >= *config.max_steps_override;
}

}  // namespace

void SearchConfig::Validate() const {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
}

StepResult MostImprovingStep(const SubmodularOracle& f,
                             const NeighborhoodFunction& neighborhood, Mask s,
                             int threads) {
  const std::vector<Mask> sets = neighborhood.Neighbors(s);
  const std::vector<Rational> values = EvaluateAll(f, sets, threads);
  const std::size_t self =
      std::find(sets.begin(), sets.end(), s) - sets.begin();
  const std::size_t best = ArgMax(sets, values);
  return {sets[best], values[best], values[best] - values[self], sets.size()};
}

MonotoneResult MonotoneLocalSearch(const SubmodularOracle& f,
                                   const NeighborhoodFunction& neighborhood,
                                   Mask start, const SearchConfig& config) {
  config.Validate();
  if (!f.declared_monotone()) {
    throw std::invalid_argument("monotone search needs a monotone f");
  }
  if (!neighborhood.family().Contains(start)) {
    throw std::domain_error("start set is not feasible");
  }
  const std::size_t ground =
      static_cast<std::size_t>(Cardinality(neighborhood.family().restriction()));
  const Rational ratio =
      (config.alpha + 1 + config.epsilon) / config.epsilon;
  MonotoneResult result;
  result.step_limit = ground * static_cast<std::size_t>(CeilNaturalLog(ratio));

  SearchTrace& trace = result.trace;
  trace.sets_visited.push_back(start);
  std::size_t j = 0;
  while (j < result.step_limit) {
    if (CapReached(trace, config)) {
      trace.step_cap_hit = true;
      break;
    }
    if (j == 0) {
      // Value of S_0 comes from the first scan.
      const StepResult step =
          MostImprovingStep(f, neighborhood, start, config.threads);
      trace.values.push_back(step.value - step.delta);
      trace.sets_visited.push_back(step.next);
      trace.values.push_back(step.value);
      trace.deltas.push_back(step.delta);
      trace.scan_sizes.push_back(step.neighborhood_size);
      trace.oracle_calls += static_cast<std::int64_t>(step.neighborhood_size);
      ++trace.steps;
      trace.records.push_back(
          {0, 0, step.neighborhood_size, trace.values[0], step.delta});
    } else {
      Advance(f, neighborhood, j, 0, config.threads, trace);
    }
    // S_j is a local optimum; further steps cannot raise f.
    if (trace.deltas.back() == 0) break;
    ++j;
  }
  result.set = trace.sets_visited.back();
  result.value = trace.values.empty() ? f.Evaluate(start) : trace.values.back();
  if (trace.values.empty()) {
    trace.values.push_back(result.value);
    trace.scan_sizes.push_back(1);
    ++trace.oracle_calls;
  }
  return result;
}

BasicResult BasicLocalSearch(const SubmodularOracle& f,
                             const NeighborhoodFunction& neighborhood,
                             Mask ground, const SearchConfig& config) {
  config.Validate();
  if (ground == 0) throw std::invalid_argument("empty ground set");
  const NeighborhoodFunction n = neighborhood.Restrict(ground);
  const Rational size(Cardinality(ground));
  const Rational threshold_factor = config.epsilon / (config.alpha * size);
  const std::size_t patience = 2 * static_cast<std::size_t>(Cardinality(ground));

  BasicResult result;
  SearchTrace& trace = result.trace;

  // S_0: the best singleton.
  std::vector<Mask> singletons;
  for (int u : Elements(ground)) singletons.push_back(Singleton(u));
  const std::vector<Rational> singleton_values =
      EvaluateAll(f, singletons, config.threads);
  trace.scan_sizes.push_back(singletons.size());
  trace.oracle_calls += static_cast<std::int64_t>(singletons.size());
  const std::size_t first = ArgMax(singletons, singleton_values);
  trace.sets_visited.push_back(singletons[first]);
  trace.values.push_back(singleton_values[first]);

  // S_1 and delta_0.
  std::size_t i = 0;
  std::size_t j = 0;
  Advance(f, n, j, i, config.threads, trace);

  while (trace.deltas[j] > threshold_factor * trace.values[j]) {
    if (trace.deltas[j] <= trace.deltas[i] / 2) i = j;
    if (j - i >= patience) {
      trace.anchor_index = i;
      result.s = trace.sets_visited[j];
      result.q = trace.sets_visited[i];
      return result;
    }
    if (CapReached(trace, config)) {
      trace.step_cap_hit = true;
      break;
    }
    // The listing advances j and then writes S_{j+1}; read here as taking
    // the step from the new S_j so that delta_j = f(S_{j+1}) - f(S_j).
    ++j;
    Advance(f, n, j, i, config.threads, trace);
  }
  trace.anchor_index = i;
  result.s = trace.sets_visited[j];
  result.q = trace.sets_visited[j];
  return result;
}

std::size_t IterativeTrace::total_steps() const {
  std::size_t total = 0;
  for (const IterativeRound& round : rounds) {
    if (round.trace) total += round.trace->steps;
  }
  return total;
}

IterativeResult IterativeLocalSearch(const SubmodularOracle& f,
                                     const NeighborhoodFunction& neighborhood,
                                     const SearchConfig& config) {
  config.Validate();
  const FeasibilityFamily& family = neighborhood.family();
  if (!family.is_down_closed()) {
    throw std::invalid_argument("iterative search needs a down-closed family");
  }
  IterativeResult result;
  IterativeTrace& trace = result.trace;

  // Pruning scan: f(empty) and every feasible singleton.
  std::vector<Mask> scan{0};
  for (int u : Elements(family.restriction())) {
    if (family.Contains(Singleton(u))) scan.push_back(Singleton(u));
  }
  const std::vector<Rational> scan_values = EvaluateAll(f, scan, config.threads);
  trace.prune_calls = scan.size();
  trace.oracle_calls = static_cast<std::int64_t>(scan.size());
  const Rational empty_value = scan_values[0];
  for (std::size_t k = 1; k < scan.size(); ++k) {
    if (scan_values[k] > empty_value) trace.pruned_ground |= scan[k];
  }

  const int rounds = Floor(config.alpha) + 1;
  Mask ground = trace.pruned_ground;
  for (int r = 0; r < rounds; ++r) {
    IterativeRound round;
    round.ground = ground;
    if (ground == 0) {
      round.value = empty_value;
    } else {
      BasicResult basic = BasicLocalSearch(f, neighborhood, ground, config);
      round.s = basic.s;
      round.q = basic.q;
      round.value = basic.trace.values[std::find(basic.trace.sets_visited.begin(),
                                                 basic.trace.sets_visited.end(),
                                                 basic.s) -
                                       basic.trace.sets_visited.begin()];
      trace.oracle_calls += basic.trace.oracle_calls;
      round.trace = std::move(basic.trace);
    }
    ground &= ~round.q;
    trace.rounds.push_back(std::move(round));
  }
  for (std::size_t r = 1; r < trace.rounds.size(); ++r) {
    if (trace.rounds[r].value > trace.rounds[trace.winner].value) {
      trace.winner = r;
    }
  }
  result.set = trace.rounds[trace.winner].s;
  result.value = trace.rounds[trace.winner].value;
  return result;
}

std::size_t BasicStepBound(std::size_t ground_size, int n,
                           const Rational& alpha, const Rational& epsilon) {
  const Rational argument =
      alpha * Rational(static_cast<long>(ground_size)) * Rational(n) / epsilon;
  const int log_term = argument <= 1 ? 0 : CeilNaturalLog(argument);
  return 2 * ground_size * static_cast<std::size_t>(log_term + 1);
}

std::string FormatTrace(const SearchTrace& trace) {
  std::ostringstream out;
  for (const StepRecord& r : trace.records) {
    out << "j=" << r.j << " i=" << r.i << " |N|=" << r.neighborhood_size
        << " f=" << FormatRational(r.value)
        << " delta=" << FormatRational(r.delta) << "\n";
  }
  return out.str();
}

}  // namespace csfm

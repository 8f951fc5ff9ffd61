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

#include "csfm/neighborhood.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "csfm/adjacency.h"

namespace csfm {

std::string ToString(NeighborhoodKind kind) {
  switch (kind) {
    case NeighborhoodKind::kSwap:
      return "swap";
    case NeighborhoodKind::kPolyhedralExplicit:
      return "polyhedral_explicit";
    case NeighborhoodKind::kPolyhedralMatroid:
      return "polyhedral_matroid";
    case NeighborhoodKind::kCustom:
      return "custom";
  }
  return "unknown";
}

NeighborhoodFunction::NeighborhoodFunction(FeasibilityFamily family,
                                           NeighborhoodKind kind,
                                           Rational claimed_alpha,
                                           Enumerator enumerate,
                                           std::string description)
    : family_(std::move(family)),
      kind_(kind),
      claimed_alpha_(std::move(claimed_alpha)),
      enumerate_(std::move(enumerate)),
      description_(std::move(description)) {
  if (claimed_alpha_ < 1) {
    throw std::domain_error("neighborhood alpha must be at least 1");
  }
  if (!enumerate_) throw std::invalid_argument("neighborhood: no enumerator");
}

std::vector<Mask> SwapNeighborhood(const FeasibilityFamily& family, Mask s,
                                   int k, int p) {
  if (k < 1 || p < 1) throw std::invalid_argument("swap needs k, p >= 1");
  if (!family.Contains(s)) {
    throw std::domain_error("neighborhood queried at an infeasible set");
  }
  const int max_delete = (k - 1) * p + 1;
  std::vector<Mask> additions;
  ForEachSubsetUpTo(family.restriction() & ~s, p,
                    [&](Mask a) { additions.push_back(a); });
  std::vector<Mask> deletions;
  ForEachSubsetUpTo(s, max_delete, [&](Mask d) { deletions.push_back(d); });

  std::vector<Mask> result;
  for (Mask a : additions) {
    for (Mask d : deletions) {
      const Mask t = (s & ~d) | a;
      if (family.Contains(t)) result.push_back(t);
    }
  }
  return result;
}

NeighborhoodFunction NeighborhoodFunction::Swap(FeasibilityFamily family,
                                                int k, int p) {
  if (k < 1 || p < 1) throw std::invalid_argument("swap needs k, p >= 1");
  Rational alpha = Rational(k - 1) + Rational(1, p);
  if (alpha < 1) alpha = 1;
  // The enumerator holds its own copy so that Restrict can rebind it.
  auto enumerate = [family, k, p](Mask s) {
    return SwapNeighborhood(family, s, k, p);
  };
  NeighborhoodFunction result(
      std::move(family), NeighborhoodKind::kSwap, std::move(alpha),
      std::move(enumerate),
      "swap(k=" + std::to_string(k) + ",p=" + std::to_string(p) + ")");
  result.swap_k_ = k;
  result.swap_p_ = p;
  return result;
}

NeighborhoodFunction NeighborhoodFunction::Polyhedral(
    FeasibilityFamily family) {
  if (family.explicit_sets() != nullptr) {
    auto sets = std::make_shared<const std::vector<Mask>>(family.Enumerate());
    if (sets->size() > kMaxAdjacencyFamilySize) {
      throw std::length_error("polyhedral neighborhood needs |F| <= 4096");
    }
    struct Memo {
      std::mutex mutex;
      std::map<Mask, std::vector<Mask>> cache;
    };
    auto memo = std::make_shared<Memo>();
    auto enumerate = [sets, memo](Mask s) {
      {
        std::lock_guard<std::mutex> lock(memo->mutex);
        auto it = memo->cache.find(s);
        if (it != memo->cache.end()) return it->second;
      }
      std::vector<Mask> result{s};
      for (Mask u : *sets) {
        if (u != s && VertexAdjacency(*sets, s, u)) result.push_back(u);
      }
      std::lock_guard<std::mutex> lock(memo->mutex);
      memo->cache.emplace(s, result);
      return result;
    };
    return NeighborhoodFunction(std::move(family),
                                NeighborhoodKind::kPolyhedralExplicit, 1,
                                std::move(enumerate), "polyhedral(explicit)");
  }
  const std::vector<Matroid>* matroids = family.matroids();
  if (matroids != nullptr && matroids->size() == 1) {
    auto enumerate = [family](Mask s) {
      return SwapNeighborhood(family, s, 1, 1);
    };
    NeighborhoodFunction result(std::move(family),
                                NeighborhoodKind::kPolyhedralMatroid, 1,
                                std::move(enumerate), "polyhedral(matroid)");
    result.swap_k_ = 1;
    result.swap_p_ = 1;
    return result;
  }
  throw std::invalid_argument(
      "polyhedral neighborhoods need an explicit family or a single matroid");
}

std::vector<Mask> NeighborhoodFunction::Neighbors(Mask s) const {
  if (!family_.Contains(s)) {
    throw std::domain_error("neighborhood queried at an infeasible set");
  }
  std::vector<Mask> result = enumerate_(s);
  if (std::find(result.begin(), result.end(), s) == result.end()) {
    throw std::logic_error("neighborhood of S does not contain S");
  }
#ifndef NDEBUG
  for (Mask t : result) {
    if (!family_.Contains(t)) {
      throw std::logic_error("neighborhood returned an infeasible set");
    }
  }
#endif
  return result;
}

NeighborhoodFunction NeighborhoodFunction::Restrict(Mask ground) const {
  FeasibilityFamily restricted = family_.Restrict(ground);
  const Mask kept = restricted.restriction();
  Enumerator base = enumerate_;
  auto enumerate = [base, kept](Mask s) {
    std::vector<Mask> all = base(s);
    std::vector<Mask> result;
    for (Mask t : all) {
      if (IsSubset(t, kept)) result.push_back(t);
    }
    return result;
  };
  NeighborhoodFunction result(std::move(restricted), kind_, claimed_alpha_,
                              std::move(enumerate), description_);
  result.swap_k_ = swap_k_;
  result.swap_p_ = swap_p_;
  return result;
}

std::size_t ConicReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(),
                    [](const ConicPairResult& r) { return !r.certificate; }));
}

ConicReport EmpiricalConicCheck(const NeighborhoodFunction& neighborhood,
                                const Rational& alpha,
                                const ConicCheckOptions& options) {
  const FeasibilityFamily& family = neighborhood.family();
  const std::vector<Mask> members = family.Enumerate();
  const int n = family.ground_size();

  ConicReport report;
  report.alpha = alpha;
  report.family_size = members.size();
  report.exhaustive =
      options.exhaustive || (!options.samples && members.size() <= 64);

  std::vector<std::pair<Mask, Mask>> todo;
  if (report.exhaustive) {
    for (Mask s : members) {
      for (Mask t : members) todo.emplace_back(s, t);
    }
  } else {
    const std::size_t samples = options.samples.value_or(500);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const Mask s = members[pick(rng)];
      const Mask t = members[pick(rng)];
      todo.emplace_back(s, t);
    }
  }

  std::map<Mask, std::vector<Mask>> neighbor_lists;
  for (const auto& [s, t] : todo) {
    if (!neighbor_lists.count(s)) {
      neighbor_lists.emplace(s, neighborhood.Neighbors(s));
    }
  }

  report.pairs.resize(todo.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < todo.size(); i += stride) {
      const auto& [s, t] = todo[i];
      const std::vector<Mask>& list = neighbor_lists.at(s);
      ConicPairResult& out = report.pairs[i];
      out.s = s;
      out.t = t;
      out.neighborhood_size = list.size();
      out.certificate = ConeMembership(n, s, t, list, alpha);
    }
  };
  const std::size_t threads =
      static_cast<std::size_t>(std::max(1, options.threads));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (std::thread& th : pool) th.join();
  }
  return report;
}

}  // namespace csfm

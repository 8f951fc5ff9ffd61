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

#include "csfm/oracle.h"

#include <algorithm>
#include <stdexcept>

namespace csfm {
namespace {

void CheckGroundSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [0, 64]");
  }
}

void RequireNonNegative(const Rational& value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string("negative ") + what + " " +
                                FormatRational(value));
  }
}

}  // namespace

std::string ToString(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kCoverage:
      return "coverage";
    case FunctionKind::kDirectedCut:
      return "directed_cut";
    case FunctionKind::kModular:
      return "modular";
    case FunctionKind::kTable:
      return "table";
  }
  return "unknown";
}

FunctionSpec FunctionSpec::Coverage(int n,
                                    std::vector<std::vector<int>> covers,
                                    std::vector<Rational> item_weights) {
  CheckGroundSize(n);
  if (covers.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("coverage: need one cover list per element");
  }
  int universe = 0;
  for (const auto& list : covers) {
    for (int item : list) {
      if (item < 0) throw std::invalid_argument("coverage: negative item id");
      universe = std::max(universe, item + 1);
    }
  }
  if (item_weights.empty()) {
    item_weights.assign(static_cast<std::size_t>(universe), Rational(1));
  }
  if (item_weights.size() < static_cast<std::size_t>(universe)) {
    throw std::invalid_argument("coverage: missing item weights");
  }
  for (const auto& w : item_weights) RequireNonNegative(w, "item weight");
  return FunctionSpec(FunctionKind::kCoverage, n,
                      CoverageParams{std::move(covers), std::move(item_weights)});
}

FunctionSpec FunctionSpec::DirectedCut(int n, std::vector<Arc> arcs) {
  CheckGroundSize(n);
  for (const auto& arc : arcs) {
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      throw std::invalid_argument("directed_cut: arc endpoint out of range");
    }
    RequireNonNegative(arc.weight, "arc weight");
  }
  return FunctionSpec(FunctionKind::kDirectedCut, n,
                      DirectedCutParams{std::move(arcs)});
}

FunctionSpec FunctionSpec::Modular(std::vector<Rational> weights,
                                   Rational offset) {
  const int n = static_cast<int>(weights.size());
  CheckGroundSize(n);
  for (const auto& w : weights) RequireNonNegative(w, "modular weight");
  RequireNonNegative(offset, "modular offset");
  return FunctionSpec(FunctionKind::kModular, n,
                      ModularParams{std::move(weights), std::move(offset)});
}

FunctionSpec FunctionSpec::Table(int n, std::vector<Rational> values) {
  CheckGroundSize(n);
  if (n > 24) throw std::invalid_argument("table: n > 24 is not supported");
  if (values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("table: expected 2^n values");
  }
  for (const auto& v : values) RequireNonNegative(v, "table value");
  return FunctionSpec(FunctionKind::kTable, n, TableParams{std::move(values)});
}

bool FunctionSpec::monotone_by_construction() const {
  return kind_ == FunctionKind::kCoverage || kind_ == FunctionKind::kModular;
}

Rational FunctionSpec::Value(Mask s) const {
  switch (kind_) {
    case FunctionKind::kCoverage: {
      const auto& p = std::get<CoverageParams>(params_);
      std::vector<char> covered(p.item_weights.size(), 0);
      Rational total = 0;
      for (int e : Elements(s)) {
        for (int item : p.covers[static_cast<std::size_t>(e)]) {
          if (!covered[static_cast<std::size_t>(item)]) {
            covered[static_cast<std::size_t>(item)] = 1;
            total += p.item_weights[static_cast<std::size_t>(item)];
          }
        }
      }
      return total;
    }
    case FunctionKind::kDirectedCut: {
      const auto& p = std::get<DirectedCutParams>(params_);
      Rational total = 0;
      for (const auto& arc : p.arcs) {
        if (Contains(s, arc.tail) && !Contains(s, arc.head)) {
          total += arc.weight;
        }
      }
      return total;
    }
    case FunctionKind::kModular: {
      const auto& p = std::get<ModularParams>(params_);
      Rational total = p.offset;
      for (int e : Elements(s)) total += p.weights[static_cast<std::size_t>(e)];
      return total;
    }
    case FunctionKind::kTable:
      return std::get<TableParams>(params_).values[s];
  }
  throw std::logic_error("unknown function kind");
}

std::vector<Rational> FunctionSpec::Materialize() const {
  if (n_ > 20) throw std::length_error("materialize: n > 20");
  std::vector<Rational> table;
  table.reserve(std::size_t{1} << n_);
  for (Mask s = 0; s < (Mask{1} << n_); ++s) table.push_back(Value(s));
  return table;
}

SubmodularOracle::SubmodularOracle(int n, Evaluator evaluator,
                                   bool declared_monotone)
    : n_(n),
      evaluator_(std::move(evaluator)),
      declared_monotone_(declared_monotone) {
  CheckGroundSize(n);
}

SubmodularOracle::SubmodularOracle(FunctionSpec spec)
    : SubmodularOracle(spec, spec.monotone_by_construction()) {}

SubmodularOracle::SubmodularOracle(FunctionSpec spec, bool declared_monotone)
    : n_(spec.ground_size()),
      declared_monotone_(declared_monotone),
      spec_(std::make_shared<const FunctionSpec>(std::move(spec))) {
  evaluator_ = [s = spec_](Mask m) { return s->Value(m); };
}

SubmodularOracle::SubmodularOracle(const SubmodularOracle& other)
    : n_(other.n_),
      evaluator_(other.evaluator_),
      declared_monotone_(other.declared_monotone_),
      spec_(other.spec_),
      call_count_(other.call_count()) {}

SubmodularOracle& SubmodularOracle::operator=(const SubmodularOracle& other) {
  n_ = other.n_;
  evaluator_ = other.evaluator_;
  declared_monotone_ = other.declared_monotone_;
  spec_ = other.spec_;
  call_count_.store(other.call_count());
  return *this;
}

Rational SubmodularOracle::Evaluate(Mask s) const {
  if (!IsSubset(s, FullMask(n_))) {
    throw std::domain_error("evaluate: set is not a subset of the ground set");
  }
  call_count_.fetch_add(1, std::memory_order_relaxed);
  Rational value = evaluator_(s);
  if (value < 0) {
    throw std::domain_error("value oracle returned a negative value " +
                            FormatRational(value));
  }
  return value;
}

}  // namespace csfm

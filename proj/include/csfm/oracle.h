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

#ifndef CSFM_ORACLE_H_
#define CSFM_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "csfm/rational.h"
#include "csfm/subset.h"

namespace csfm {

enum class FunctionKind { kCoverage, kDirectedCut, kModular, kTable };

std::string ToString(FunctionKind kind);

struct CoverageParams {
  // covers[e] lists the universe items covered by ground element e.
  std::vector<std::vector<int>> covers;
  // One non-negative weight per universe item.
  std::vector<Rational> item_weights;
};

struct Arc {
  int tail = 0;
  int head = 0;
  Rational weight;
};

struct DirectedCutParams {
  // Ground elements are the graph's nodes.
  std::vector<Arc> arcs;
};

struct ModularParams {
  std::vector<Rational> weights;
  Rational offset;  // f(empty set)
};

struct TableParams {
  // values[s] = f(s) for every mask s < 2^n.
  std::vector<Rational> values;
};

// A concrete, self-describing set function. All factories validate their
// input and throw std::invalid_argument on bad data; in particular negative
// values are rejected here rather than at evaluation time.
class FunctionSpec {
 public:
  using Params =
      std::variant<CoverageParams, DirectedCutParams, ModularParams,
                   TableParams>;

  // Unit item weights when `item_weights` is empty.
  static FunctionSpec Coverage(int n, std::vector<std::vector<int>> covers,
                               std::vector<Rational> item_weights = {});
  static FunctionSpec DirectedCut(int n, std::vector<Arc> arcs);
  static FunctionSpec Modular(std::vector<Rational> weights,
                              Rational offset = 0);
  static FunctionSpec Table(int n, std::vector<Rational> values);

  FunctionKind kind() const { return kind_; }
  int ground_size() const { return n_; }
  const Params& params() const { return params_; }

  // Coverage and modular functions (with non-negative weights) are monotone.
  bool monotone_by_construction() const;

  Rational Value(Mask s) const;

  // The explicit 2^n table of this function (n <= 20).
  std::vector<Rational> Materialize() const;

 private:
  FunctionSpec(FunctionKind kind, int n, Params params)
      : kind_(kind), n_(n), params_(std::move(params)) {}

  FunctionKind kind_;
  int n_;
  Params params_;
};

// Value oracle for f: 2^E -> Q>=0 with call accounting. Evaluation is pure
// and thread-safe; the call counter is atomic.
class SubmodularOracle {
 public:
  using Evaluator = std::function<Rational(Mask)>;

  SubmodularOracle(int n, Evaluator evaluator, bool declared_monotone);
  explicit SubmodularOracle(FunctionSpec spec);
  SubmodularOracle(FunctionSpec spec, bool declared_monotone);

  SubmodularOracle(const SubmodularOracle& other);
  SubmodularOracle& operator=(const SubmodularOracle& other);

  // Returns f(s) and counts one call. Throws std::domain_error if s is not a
  // subset of the ground set or the value is negative.
  Rational Evaluate(Mask s) const;

  int ground_size() const { return n_; }
  bool declared_monotone() const { return declared_monotone_; }
  std::int64_t call_count() const {
    return call_count_.load(std::memory_order_relaxed);
  }
  void ResetCallCount() { call_count_.store(0); }

  // Underlying spec, when the oracle was built from one.
  const FunctionSpec* spec() const { return spec_.get(); }

 private:
  int n_;
  Evaluator evaluator_;
  bool declared_monotone_;
  std::shared_ptr<const FunctionSpec> spec_;
  mutable std::atomic<std::int64_t> call_count_{0};
};

}  // namespace csfm

#endif  // CSFM_ORACLE_H_

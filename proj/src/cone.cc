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

#include "csfm/cone.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "csfm/lp.h"

namespace csfm {

ShiftedCone::ShiftedCone(int n, Mask apex, std::vector<Mask> neighbors)
    : n_(n), apex_(apex), neighbors_(std::move(neighbors)) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("cone: bad dimension");
  }
  if (std::find(neighbors_.begin(), neighbors_.end(), apex_) ==
      neighbors_.end()) {
    throw std::invalid_argument("cone: the apex set must be a neighbor");
  }
  for (Mask a : neighbors_) {
    if (!IsSubset(a, FullMask(n))) {
      throw std::invalid_argument("cone: neighbor outside ground set");
    }
  }
}

std::vector<int> ShiftedCone::Generator(std::size_t i) const {
  std::vector<int> g(static_cast<std::size_t>(n_), 0);
  for (int e = 0; e < n_; ++e) {
    g[e] = static_cast<int>(csfm::Contains(neighbors_[i], e)) -
           static_cast<int>(csfm::Contains(apex_, e));
  }
  return g;
}

std::optional<std::vector<Rational>> ShiftedCone::Decompose(
    const std::vector<Rational>& direction) const {
  if (direction.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("cone: direction has wrong dimension");
  }
  // One LP column per distinct non-zero generator.
  std::vector<std::size_t> column_owner;
  std::unordered_map<Mask, std::size_t> seen;
  for (std::size_t i = 0; i < neighbors_.size(); ++i) {
    if (neighbors_[i] == apex_) continue;
    if (seen.emplace(neighbors_[i], column_owner.size()).second) {
      column_owner.push_back(i);
    }
  }
  const Mask touched = [&] {
    Mask m = 0;
    for (std::size_t owner : column_owner) m |= neighbors_[owner] ^ apex_;
    return m;
  }();
  std::vector<Rational> mu(neighbors_.size(), Rational(0));
  LinearProgram lp;
  lp.num_variables = static_cast<int>(column_owner.size());
  for (int e = 0; e < n_; ++e) {
    if (!csfm::Contains(touched, e)) {
      if (sgn(direction[e]) != 0) return std::nullopt;
      continue;
    }
    std::vector<Rational> row;
    row.reserve(column_owner.size());
    for (std::size_t owner : column_owner) {
      row.emplace_back(static_cast<int>(csfm::Contains(neighbors_[owner], e)) -
                       static_cast<int>(csfm::Contains(apex_, e)));
    }
    lp.AddConstraint(std::move(row), ConstraintSense::kEqual, direction[e]);
  }
  if (lp.constraints.empty()) return mu;
  const LpResult result = SolveLp(lp);
  if (result.status != LpStatus::kOptimal) return std::nullopt;
  for (std::size_t c = 0; c < column_owner.size(); ++c) {
    mu[column_owner[c]] = result.solution[c];
  }
  return mu;
}

bool ShiftedCone::Contains(const std::vector<Rational>& point) const {
  if (point.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("cone: point has wrong dimension");
  }
  std::vector<Rational> direction(point);
  for (int e = 0; e < n_; ++e) {
    if (csfm::Contains(apex_, e)) direction[e] -= 1;
  }
  return Decompose(direction).has_value();
}

Rational ConeCertificate::TotalWeight() const {
  Rational total = 0;
  for (const auto& term : terms) total += term.lambda;
  return total;
}

bool ConeCertificate::EquationHolds(int n) const {
  for (int e = 0; e < n; ++e) {
    Rational lhs = static_cast<int>(Contains(t, e));
    if (Contains(s & t, e)) lhs += alpha - 1;
    Rational rhs = Contains(s, e) ? alpha : Rational(0);
    for (const auto& term : terms) {
      const int g = static_cast<int>(Contains(term.set, e)) -
                    static_cast<int>(Contains(s, e));
      if (g != 0) rhs += term.lambda * g;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::string ConeCertificate::ToString() const {
  std::string out = "alpha=" + FormatRational(alpha) + " lambda={";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ",";
    out += "#" + std::to_string(terms[i].index) + ":" +
           FormatRational(terms[i].lambda);
  }
  return out + "}";
}

std::optional<ConeCertificate> ConeMembership(int n, Mask s, Mask t,
                                              const std::vector<Mask>& neighbors,
                                              const Rational& alpha) {
  if (alpha < 1) throw std::domain_error("cone membership needs alpha >= 1");
  if (!IsSubset(s | t, FullMask(n))) {
    throw std::invalid_argument("cone membership: sets outside ground set");
  }
  const ShiftedCone cone(n, s, neighbors);
  // chi^T + (alpha-1) chi^{S n T} - alpha chi^S
  std::vector<Rational> direction(static_cast<std::size_t>(n), Rational(0));
  for (int e = 0; e < n; ++e) {
    if (Contains(t, e)) direction[e] += 1;
    if (Contains(s & t, e)) direction[e] += alpha - 1;
    if (Contains(s, e)) direction[e] -= alpha;
  }
  auto lambda = cone.Decompose(direction);
  if (!lambda) return std::nullopt;
  ConeCertificate certificate{s, t, alpha, {}};
  for (std::size_t i = 0; i < lambda->size(); ++i) {
    if (sgn((*lambda)[i]) > 0) {
      certificate.terms.push_back({i, neighbors[i], (*lambda)[i]});
    }
  }
  return certificate;
}

bool VerifyConeInequality(const SubmodularOracle& f,
                          const ConeCertificate& certificate) {
  const int n = f.ground_size();
  if (!certificate.EquationHolds(n)) {
    throw std::invalid_argument("certificate does not satisfy its equation");
  }
  const Rational& alpha = certificate.alpha;
  const Rational fs = f.Evaluate(certificate.s);
  Rational lhs = (alpha + 1) * fs;
  for (const auto& term : certificate.terms) {
    lhs += term.lambda * (f.Evaluate(term.set) - fs);
  }
  const Rational rhs = f.Evaluate(certificate.s | certificate.t) +
                       alpha * f.Evaluate(certificate.s & certificate.t);
  return lhs >= rhs;
}

std::string ToString(StepBranch branch) {
  switch (branch) {
    case StepBranch::kNoGap:
      return "no_gap";
    case StepBranch::kImprovingNeighbor:
      return "improving_neighbor";
    case StepBranch::kNeither:
      return "neither";
  }
  return "unknown";
}

StepBound ImprovingStepBound(const SubmodularOracle& f, Mask s, Mask t,
                             const std::vector<Mask>& neighbors,
                             const Rational& alpha) {
  const int n = f.ground_size();
  if (!ConeMembership(n, s, t, neighbors, alpha)) {
    throw std::invalid_argument(
        "improving step bound: cone membership fails for (S, T)");
  }
  StepBound bound;
  const Rational fs = f.Evaluate(s);
  bound.gap = f.Evaluate(s | t) + alpha * f.Evaluate(s & t) - (alpha + 1) * fs;
  if (sgn(bound.gap) <= 0) {
    bound.branch = StepBranch::kNoGap;
    return bound;
  }
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    Rational gain = f.Evaluate(neighbors[i]) - fs;
    if (!bound.neighbor_index || gain > bound.gain) {
      bound.neighbor_index = i;
      bound.neighbor = neighbors[i];
      bound.gain = std::move(gain);
    }
  }
  bound.required_gain = bound.gap / (alpha * n);
  bound.branch = bound.gain >= bound.required_gain
                     ? StepBranch::kImprovingNeighbor
                     : StepBranch::kNeither;
  return bound;
}

bool CheckConeDownClosure(const ShiftedCone& cone,
                          const std::vector<Rational>& y,
                          const std::vector<Rational>& z) {
  const auto n = static_cast<std::size_t>(cone.dimension());
  if (y.size() != n || z.size() != n) {
    throw std::invalid_argument("down-closure check: wrong dimension");
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (y[e] < 0 || y[e] > z[e]) {
      throw std::invalid_argument("down-closure check: need 0 <= y <= z");
    }
  }
  if (!cone.Contains(z)) {
    throw std::invalid_argument("down-closure check: z is not in the cone");
  }
  return cone.Contains(y);
}

}  // namespace csfm

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

#include "csfm/lp.h"

#include <stdexcept>

namespace csfm {
namespace {

// Dense tableau in canonical form: every row has one basic column with a
// unit entry. The last entry of each row is the right-hand side.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis,
          int num_columns)
      : rows_(std::move(rows)),
        basis_(std::move(basis)),
        num_columns_(num_columns) {}

  // Installs a (maximization) cost vector and prices out the basis.
  void SetCosts(const std::vector<Rational>& costs) {
    costs_ = costs;
    reduced_.assign(static_cast<std::size_t>(num_columns_) + 1, Rational(0));
    for (int j = 0; j < num_columns_; ++j) reduced_[j] = costs_[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = costs_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= num_columns_; ++j) {
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's rule over columns < `column_limit`. Returns false if the
  // objective is unbounded.
  bool Optimize(int column_limit, int& pivots) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < column_limit; ++j) {
        if (sgn(reduced_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[i][num_columns_] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
      ++pivots;
    }
  }

  void Pivot(int row, int column) {
    auto& pivot_row = rows_[row];
    const Rational inverse = 1 / pivot_row[column];
    for (auto& v : pivot_row) {
      if (sgn(v) != 0) v *= inverse;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Eliminate(rows_[i], pivot_row, column);
    }
    if (!reduced_.empty()) Eliminate(reduced_, pivot_row, column);
    basis_[row] = column;
  }

  // Objective value of the current basic solution (maximization sense).
  Rational ObjectiveValue() const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      z += costs_[basis_[i]] * rows_[i][num_columns_];
    }
    return z;
  }

  // Pivots zero-valued basic columns >= first_artificial out of the basis,
  // dropping rows that turn out to be redundant.
  void ExpelArtificials(int first_artificial, int& pivots) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      int column = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          column = j;
          break;
        }
      }
      if (column < 0) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      Pivot(static_cast<int>(i), column);
      ++pivots;
      ++i;
    }
  }

  std::vector<Rational> Solution(int num_variables) const {
    std::vector<Rational> x(static_cast<std::size_t>(num_variables),
                            Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < num_variables) x[basis_[i]] = rows_[i][num_columns_];
    }
    return x;
  }

 private:
  void Eliminate(std::vector<Rational>& target,
                 const std::vector<Rational>& pivot_row, int column) {
    if (sgn(target[column]) == 0) return;
    const Rational factor = target[column];
    for (int j = 0; j <= num_columns_; ++j) {
      if (sgn(pivot_row[j]) != 0) target[j] -= factor * pivot_row[j];
    }
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  int num_columns_;
  std::vector<Rational> costs_;
  std::vector<Rational> reduced_;
};

}  // namespace

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "OPTIMAL";
    case LpStatus::kInfeasible:
      return "INFEASIBLE";
    case LpStatus::kUnbounded:
      return "UNBOUNDED";
  }
  return "UNKNOWN";
}

LpResult SolveLp(const LinearProgram& program) {
  const int n = program.num_variables;
  if (n < 0) throw std::invalid_argument("lp: negative variable count");
  if (!program.objective.empty() &&
      program.objective.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("lp: objective has wrong dimension");
  }
  const std::size_t m = program.constraints.size();

  // Normalize to non-negative right-hand sides.
  struct Row {
    std::vector<Rational> a;
    ConstraintSense sense;
    Rational b;
  };
  std::vector<Row> normalized;
  normalized.reserve(m);
  int num_slack = 0;
  int num_artificial = 0;
  for (const auto& c : program.constraints) {
    if (c.coefficients.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("lp: constraint has wrong dimension");
    }
    Row row{c.coefficients, c.sense, c.rhs};
    if (row.b < 0) {
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
      if (row.sense == ConstraintSense::kLessEqual) {
        row.sense = ConstraintSense::kGreaterEqual;
      } else if (row.sense == ConstraintSense::kGreaterEqual) {
        row.sense = ConstraintSense::kLessEqual;
      }
    }
    if (row.sense != ConstraintSense::kEqual) ++num_slack;
    if (row.sense != ConstraintSense::kLessEqual) ++num_artificial;
    normalized.push_back(std::move(row));
  }

  const int first_slack = n;
  const int first_artificial = n + num_slack;
  const int num_columns = first_artificial + num_artificial;
  std::vector<std::vector<Rational>> rows(
      m, std::vector<Rational>(static_cast<std::size_t>(num_columns) + 1,
                               Rational(0)));
  std::vector<int> basis(m, -1);
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = rows[i];
    for (int j = 0; j < n; ++j) row[j] = normalized[i].a[j];
    row[num_columns] = normalized[i].b;
    switch (normalized[i].sense) {
      case ConstraintSense::kLessEqual:
        row[next_slack] = 1;
        basis[i] = next_slack++;
        break;
      case ConstraintSense::kGreaterEqual:
        row[next_slack++] = -1;
        row[next_artificial] = 1;
        basis[i] = next_artificial++;
        break;
      case ConstraintSense::kEqual:
        row[next_artificial] = 1;
        basis[i] = next_artificial++;
        break;
    }
  }

  LpResult result;
  Tableau tableau(std::move(rows), std::move(basis), num_columns);

  if (num_artificial > 0) {
    std::vector<Rational> phase1(static_cast<std::size_t>(num_columns),
                                 Rational(0));
    for (int j = first_artificial; j < num_columns; ++j) phase1[j] = -1;
    tableau.SetCosts(phase1);
    tableau.Optimize(num_columns, result.pivots);
    if (sgn(tableau.ObjectiveValue()) < 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    tableau.ExpelArtificials(first_artificial, result.pivots);
  }

  std::vector<Rational> costs(static_cast<std::size_t>(num_columns),
                              Rational(0));
  const bool minimize =
      program.direction == OptimizationDirection::kMinimize;
  for (int j = 0; j < n && !program.objective.empty(); ++j) {
    costs[j] = minimize ? Rational(-program.objective[j])
                        : program.objective[j];
  }
  tableau.SetCosts(costs);
  if (!tableau.Optimize(first_artificial, result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.solution = tableau.Solution(n);
  const Rational z = tableau.ObjectiveValue();
  result.objective_value = minimize ? Rational(-z) : z;
  return result;
}

}  // namespace csfm

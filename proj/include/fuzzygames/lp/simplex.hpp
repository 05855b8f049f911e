// Copyright 2026 The fuzzygames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense two-phase tableau simplex with Bland's pivoting rule, weighted-sum
// scalarization of multi-objective models, and an independent feasibility
// checker for candidate assignments.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/lp/model.hpp"

namespace fuzzygames::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
  }
  return "?";
}

struct SimplexOptions {
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  // Entries smaller than this are never chosen as pivots.
  double pivot_tolerance = 1e-11;
  long max_pivots = 1'000'000;
};

struct LpSolution {
  Status status = Status::kInfeasible;
  std::vector<double> values;
  double objective_value = 0.0;
  std::vector<double> per_objective;
  long pivots = 0;

  bool optimal() const { return status == Status::kOptimal; }
};

namespace detail {

// How an original variable is expressed through nonnegative columns.
struct ColumnMap {
  enum class Kind { kShifted, kMirrored, kSplit } kind = Kind::kShifted;
  int column = 0;  // x = lower + c, x = upper - c, or x = c - column(+1)
  double offset = 0.0;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0), b_(rows, 0.0),
        basis_(rows, -1) {}

  double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  double& rhs(std::size_t i) { return b_[i]; }
  double rhs(std::size_t i) const { return b_[i]; }
  int& basic(std::size_t i) { return basis_[i]; }
  int basic(std::size_t i) const { return basis_[i]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) /= p;
    b_[r] /= p;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        double v = at(i, j) - f * at(r, j);
        if (std::fabs(v) < 1e-14) v = 0.0;
        at(i, j) = v;
      }
      at(i, c) = 0.0;
      b_[i] -= f * b_[r];
      if (std::fabs(b_[i]) < 1e-14) b_[i] = 0.0;
    }
    basis_[r] = static_cast<int>(c);
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<int> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Maximizes cost^T x over the tableau's current basis. Columns at or beyond
// `column_limit` never enter. Bland's rule: lowest-index improving column
// enters; ratio-test ties go to the lowest-index basic variable.
inline PhaseResult run_phase(Tableau& t, std::span<const double> cost,
                             std::size_t column_limit,
                             const SimplexOptions& opt, long& pivots) {
  const std::size_t m = t.rows();
  while (true) {
    int entering = -1;
    for (std::size_t j = 0; j < column_limit; ++j) {
      double reduced = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        const double a = t.at(i, j);
        if (a != 0.0) reduced -= cost[static_cast<std::size_t>(t.basic(i))] * a;
      }
      if (reduced > opt.optimality_tolerance) {
        entering = static_cast<int>(j);
        break;
      }
    }
    if (entering < 0) return PhaseResult::kOptimal;

    const auto c = static_cast<std::size_t>(entering);
    int leaving = -1;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double a = t.at(i, c);
      if (a <= opt.pivot_tolerance) continue;
      const double ratio = t.rhs(i) / a;
      if (leaving < 0) {
        leaving = static_cast<int>(i);
        best = ratio;
        continue;
      }
      const double slack = 1e-12 * (1.0 + std::fabs(best));
      if (ratio < best - slack) {
        leaving = static_cast<int>(i);
        best = ratio;
      } else if (ratio <= best + slack &&
                 t.basic(i) < t.basic(static_cast<std::size_t>(leaving))) {
        leaving = static_cast<int>(i);
        best = std::min(best, ratio);
      }
    }
    if (leaving < 0) return PhaseResult::kUnbounded;
    if (++pivots > opt.max_pivots) {
      throw std::runtime_error("simplex: pivot limit exceeded");
    }
    t.pivot(static_cast<std::size_t>(leaving), c);
  }
}

}  // namespace detail

inline LpSolution solve(const LpModel& model, const SimplexOptions& opt = {}) {
  model.validate();
  if (model.objectives().size() != 1) {
    throw ContractError(model.name() +
                        ": solve() takes a single objective; scalarize first");
  }
  using detail::ColumnMap;

  const auto& vars = model.variables();
  const std::size_t n = vars.size();

  // Map each variable onto nonnegative structural columns.
  std::vector<ColumnMap> maps(n);
  int structural = 0;
  struct BoundRow { int column; double limit; };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const Variable& v = vars[j];
    if (v.upper < v.lower) {
      LpSolution infeasible;
      infeasible.status = Status::kInfeasible;
      return infeasible;
    }
    if (std::isfinite(v.lower)) {
      maps[j] = {ColumnMap::Kind::kShifted, structural, v.lower};
      if (std::isfinite(v.upper)) bound_rows.push_back({structural, v.upper - v.lower});
      structural += 1;
    } else if (std::isfinite(v.upper)) {
      maps[j] = {ColumnMap::Kind::kMirrored, structural, v.upper};
      structural += 1;
    } else {
      maps[j] = {ColumnMap::Kind::kSplit, structural, 0.0};
      structural += 2;
    }
  }

  struct Row {
    std::vector<double> coef;
    Relation rel;
    double rhs;
  };
  std::vector<Row> rows;
  rows.reserve(model.constraints().size() + bound_rows.size());
  for (const Constraint& con : model.constraints()) {
    Row r{std::vector<double>(static_cast<std::size_t>(structural), 0.0),
          con.relation, con.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      const double a = con.coefficients[j];
      if (a == 0.0) continue;
      const auto col = static_cast<std::size_t>(maps[j].column);
      switch (maps[j].kind) {
        case ColumnMap::Kind::kShifted:
          r.coef[col] += a;
          r.rhs -= a * maps[j].offset;
          break;
        case ColumnMap::Kind::kMirrored:
          r.coef[col] -= a;
          r.rhs -= a * maps[j].offset;
          break;
        case ColumnMap::Kind::kSplit:
          r.coef[col] += a;
          r.coef[col + 1] -= a;
          break;
      }
    }
    rows.push_back(std::move(r));
  }
  for (const BoundRow& br : bound_rows) {
    Row r{std::vector<double>(static_cast<std::size_t>(structural), 0.0),
          Relation::kLessEqual, br.limit};
    r.coef[static_cast<std::size_t>(br.column)] = 1.0;
    rows.push_back(std::move(r));
  }

  // Nonnegative right-hand sides, then one slack/surplus per inequality and
  // one artificial per >= or = row.
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (Row& r : rows) {
    if (r.rhs < 0.0) {
      for (double& a : r.coef) a = -a;
      r.rhs = -r.rhs;
      if (r.rel == Relation::kLessEqual) {
        r.rel = Relation::kGreaterEqual;
      } else if (r.rel == Relation::kGreaterEqual) {
        r.rel = Relation::kLessEqual;
      }
    }
    if (r.rel != Relation::kEqual) ++slacks;
    if (r.rel != Relation::kLessEqual) ++artificials;
  }

  const auto s0 = static_cast<std::size_t>(structural);
  const std::size_t a0 = s0 + slacks;
  const std::size_t total_cols = a0 + artificials;
  detail::Tableau t(rows.size(), total_cols);
  {
    std::size_t next_slack = s0;
    std::size_t next_art = a0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < s0; ++j) t.at(i, j) = rows[i].coef[j];
      t.rhs(i) = rows[i].rhs;
      switch (rows[i].rel) {
        case Relation::kLessEqual:
          t.at(i, next_slack) = 1.0;
          t.basic(i) = static_cast<int>(next_slack++);
          break;
        case Relation::kGreaterEqual:
          t.at(i, next_slack++) = -1.0;
          t.at(i, next_art) = 1.0;
          t.basic(i) = static_cast<int>(next_art++);
          break;
        case Relation::kEqual:
          t.at(i, next_art) = 1.0;
          t.basic(i) = static_cast<int>(next_art++);
          break;
      }
    }
  }

  LpSolution out;
  long pivots = 0;

  if (artificials > 0) {
    std::vector<double> phase1(total_cols, 0.0);
    for (std::size_t j = a0; j < total_cols; ++j) phase1[j] = -1.0;
    detail::run_phase(t, phase1, total_cols, opt, pivots);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (static_cast<std::size_t>(t.basic(i)) >= a0) infeasibility += t.rhs(i);
    }
    if (infeasibility > opt.feasibility_tolerance) {
      out.status = Status::kInfeasible;
      out.pivots = pivots;
      return out;
    }
    // Drive zero-level artificials out of the basis; rows with no usable
    // pivot are linearly dependent and dropped.
    for (std::size_t i = 0; i < t.rows();) {
      if (static_cast<std::size_t>(t.basic(i)) < a0) {
        ++i;
        continue;
      }
      std::size_t pick = a0;
      for (std::size_t j = 0; j < a0; ++j) {
        if (std::fabs(t.at(i, j)) > opt.pivot_tolerance) {
          pick = j;
          break;
        }
      }
      if (pick < a0) {
        t.pivot(i, pick);
        ++pivots;
        ++i;
      } else {
        t.drop_row(i);
      }
    }
  }

  const Objective& obj = model.objectives().front();
  const double sign = obj.sense == Sense::kMaximize ? 1.0 : -1.0;
  std::vector<double> cost(total_cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = sign * obj.coefficients[j];
    const auto col = static_cast<std::size_t>(maps[j].column);
    switch (maps[j].kind) {
      case ColumnMap::Kind::kShifted: cost[col] += c; break;
      case ColumnMap::Kind::kMirrored: cost[col] -= c; break;
      case ColumnMap::Kind::kSplit:
        cost[col] += c;
        cost[col + 1] -= c;
        break;
    }
  }
  const detail::PhaseResult phase2 = detail::run_phase(t, cost, a0, opt, pivots);
  out.pivots = pivots;
  if (phase2 == detail::PhaseResult::kUnbounded) {
    out.status = Status::kUnbounded;
    return out;
  }

  std::vector<double> column_values(total_cols, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    column_values[static_cast<std::size_t>(t.basic(i))] = t.rhs(i);
  }
  out.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = static_cast<std::size_t>(maps[j].column);
    switch (maps[j].kind) {
      case ColumnMap::Kind::kShifted:
        out.values[j] = maps[j].offset + column_values[col];
        break;
      case ColumnMap::Kind::kMirrored:
        out.values[j] = maps[j].offset - column_values[col];
        break;
      case ColumnMap::Kind::kSplit:
        out.values[j] = column_values[col] - column_values[col + 1];
        break;
    }
  }
  out.status = Status::kOptimal;
  for (const Objective& o : model.objectives()) {
    out.per_objective.push_back(dot(o.coefficients, out.values));
  }
  out.objective_value = out.per_objective.front();
  return out;
}

// Collapses a multi-objective model into one weighted-sum objective. With
// strictly positive weights every optimum of the result is Pareto-optimal
// for the original vector objective.
inline LpModel scalarize(const LpModel& model, std::span<const double> weights) {
  const auto& objectives = model.objectives();
  if (weights.size() != objectives.size()) {
    throw ContractError("scalarize: " + std::to_string(weights.size()) +
                        " weights for " + std::to_string(objectives.size()) +
                        " objectives");
  }
  if (objectives.empty()) throw ContractError("scalarize: model has no objective");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ContractError("scalarize: weights must be positive and finite");
    }
  }
  const Sense sense = objectives.front().sense;
  std::vector<double> combined(model.num_variables(), 0.0);
  for (std::size_t k = 0; k < objectives.size(); ++k) {
    if (objectives[k].sense != sense) {
      throw ContractError("scalarize: objectives have mixed senses");
    }
    for (std::size_t j = 0; j < combined.size(); ++j) {
      combined[j] += weights[k] * objectives[k].coefficients[j];
    }
  }
  LpModel out = model;
  out.set_objectives({{"weighted_sum", std::move(combined), sense}});
  return out;
}

struct Violation {
  std::string what;   // constraint or variable name
  bool is_bound = false;
  double amount = 0.0;  // > 0 means violated by that much; signed for '='
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
};

// Independent of the solver: evaluates every row and bound directly.
inline FeasibilityReport check_feasible(const LpModel& model,
                                        std::span<const double> assignment,
                                        double tolerance = 1e-9) {
  if (assignment.size() != model.num_variables()) {
    throw ContractError("check_feasible: assignment size mismatch");
  }
  FeasibilityReport report;
  for (const Constraint& c : model.constraints()) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
      lhs += c.coefficients[j] * assignment[j];
    }
    double excess = 0.0;
    bool violated = false;
    switch (c.relation) {
      case Relation::kLessEqual:
        excess = lhs - c.rhs;
        violated = excess > tolerance;
        break;
      case Relation::kGreaterEqual:
        excess = c.rhs - lhs;
        violated = excess > tolerance;
        break;
      case Relation::kEqual:
        excess = lhs - c.rhs;
        violated = std::fabs(excess) > tolerance;
        break;
    }
    if (violated || !std::isfinite(lhs)) report.violations.push_back({c.name, false, excess});
  }
  const auto& vars = model.variables();
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const double x = assignment[j];
    if (x < vars[j].lower - tolerance) {
      report.violations.push_back({vars[j].name, true, vars[j].lower - x});
    } else if (x > vars[j].upper + tolerance) {
      report.violations.push_back({vars[j].name, true, x - vars[j].upper});
    }
  }
  return report;
}

}  // namespace fuzzygames::lp

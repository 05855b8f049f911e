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

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzygames/errors.hpp"

namespace fuzzygames::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return "<=";
    case Relation::kEqual: return "=";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;

  bool is_free() const { return lower == -kInfinity && upper == kInfinity; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Constraint {
  std::string name;
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Objective {
  std::string name;
  std::vector<double> coefficients;
  Sense sense = Sense::kMaximize;

  friend bool operator==(const Objective&, const Objective&) = default;
};

// Dense linear program. Variables are declared first; every constraint and
// objective row then carries exactly one coefficient per variable.
class LpModel {
 public:
  explicit LpModel(std::string name = {}) : name_(std::move(name)) {}

  int add_variable(std::string name, double lower = 0.0,
                   double upper = kInfinity) {
    if (!constraints_.empty() || !objectives_.empty()) {
      throw ModelError("LpModel: variables must be added before any row");
    }
    variables_.push_back({std::move(name), lower, upper});
    return static_cast<int>(variables_.size()) - 1;
  }

  int add_free_variable(std::string name) {
    return add_variable(std::move(name), -kInfinity, kInfinity);
  }

  void add_constraint(std::string name, std::vector<double> coefficients,
                      Relation relation, double rhs) {
    check_row_size(coefficients, name);
    constraints_.push_back({std::move(name), std::move(coefficients), relation, rhs});
  }

  void add_objective(std::string name, std::vector<double> coefficients,
                     Sense sense) {
    check_row_size(coefficients, name);
    objectives_.push_back({std::move(name), std::move(coefficients), sense});
  }

  // Zero row sized to the current variable count.
  std::vector<double> row() const {
    return std::vector<double>(variables_.size(), 0.0);
  }

  const std::string& name() const { return name_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Objective>& objectives() const { return objectives_; }
  std::size_t num_variables() const { return variables_.size(); }

  std::optional<int> variable_index(const std::string& name) const {
    for (std::size_t j = 0; j < variables_.size(); ++j) {
      if (variables_[j].name == name) return static_cast<int>(j);
    }
    return std::nullopt;
  }

  void set_objectives(std::vector<Objective> objectives) {
    for (const Objective& o : objectives) check_row_size(o.coefficients, o.name);
    objectives_ = std::move(objectives);
  }

  // Throws ModelError on any broken invariant.
  void validate() const {
    if (objectives_.empty()) throw ModelError(name_ + ": no objective");
    for (const Variable& v : variables_) {
      if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower == kInfinity ||
          v.upper == -kInfinity) {
        throw ModelError(name_ + ": invalid bounds on " + v.name);
      }
    }
    for (const Constraint& c : constraints_) {
      check_row_size(c.coefficients, c.name);
      check_finite(c.coefficients, c.name);
      if (!std::isfinite(c.rhs)) {
        throw ModelError(name_ + ": non-finite right-hand side in " + c.name);
      }
    }
    for (const Objective& o : objectives_) {
      check_row_size(o.coefficients, o.name);
      check_finite(o.coefficients, o.name);
    }
  }

  friend bool operator==(const LpModel&, const LpModel&) = default;

 private:
  void check_row_size(const std::vector<double>& row,
                      const std::string& what) const {
    if (row.size() != variables_.size()) {
      throw ModelError(name_ + ": row '" + what + "' has " +
                       std::to_string(row.size()) + " coefficients, expected " +
                       std::to_string(variables_.size()));
    }
  }

  void check_finite(const std::vector<double>& row,
                    const std::string& what) const {
    for (double a : row) {
      if (!std::isfinite(a)) {
        throw ModelError(name_ + ": non-finite coefficient in " + what);
      }
    }
  }

  std::string name_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Objective> objectives_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace fuzzygames::lp

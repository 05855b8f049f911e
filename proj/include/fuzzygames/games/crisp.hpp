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

// Crisp matrix games, mixed strategies and the classical minimax value, which
// every fuzzy variant is cross-checked against.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/fuzzy_number.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

using Matrix = std::vector<std::vector<double>>;
using FuzzyMatrix = std::vector<std::vector<TriangularFuzzyNumber>>;

// m x n payoff matrix; entry (i, j) is what player I (rows) receives from
// player II (columns).
class CrispGame {
 public:
  CrispGame() = default;

  explicit CrispGame(Matrix payoff) : payoff_(std::move(payoff)) {
    if (payoff_.empty() || payoff_.front().empty()) {
      throw DomainError("crisp game: payoff matrix must be at least 1 x 1");
    }
    const std::size_t n = payoff_.front().size();
    for (const auto& row : payoff_) {
      if (row.size() != n) throw DomainError("crisp game: ragged payoff matrix");
      for (double a : row) {
        if (!std::isfinite(a)) throw DomainError("crisp game: non-finite payoff");
      }
    }
  }

  std::size_t rows() const { return payoff_.size(); }
  std::size_t cols() const { return payoff_.empty() ? 0 : payoff_.front().size(); }
  double at(std::size_t i, std::size_t j) const { return payoff_[i][j]; }
  const Matrix& payoff() const { return payoff_; }

  double min_entry() const {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& row : payoff_) {
      for (double a : row) lo = std::min(lo, a);
    }
    return lo;
  }

  double max_entry() const {
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : payoff_) {
      for (double a : row) hi = std::max(hi, a);
    }
    return hi;
  }

  friend bool operator==(const CrispGame&, const CrispGame&) = default;

 private:
  Matrix payoff_;
};

// Probability vector. Solver dust below zero is clamped away on construction.
class MixedStrategy {
 public:
  static constexpr double kTolerance = 1e-9;

  MixedStrategy() = default;

  explicit MixedStrategy(std::vector<double> probabilities)
      : p_(std::move(probabilities)) {
    if (p_.empty()) throw DomainError("mixed strategy: empty");
    double sum = 0.0;
    for (double& v : p_) {
      if (!std::isfinite(v) || v < -kTolerance) {
        throw DomainError("mixed strategy: negative probability");
      }
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    if (std::fabs(sum - 1.0) > kTolerance * static_cast<double>(p_.size())) {
      throw DomainError("mixed strategy: probabilities do not sum to 1");
    }
  }

  static MixedStrategy pure(std::size_t size, std::size_t index) {
    std::vector<double> p(size, 0.0);
    p.at(index) = 1.0;
    return MixedStrategy(std::move(p));
  }

  const std::vector<double>& probabilities() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  bool empty() const { return p_.empty(); }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<double> p_;
};

// min_j sum_i a_ij x_i: the payoff player I is sure to receive with x.
inline double guaranteed_payoff(const Matrix& a, std::span<const double> x) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < a.front().size(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i][j] * x[i];
    worst = std::min(worst, s);
  }
  return worst;
}

// max_i sum_j a_ij y_j: the most player II can lose with y.
inline double conceded_payoff(const Matrix& a, std::span<const double> y) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& row : a) {
    double s = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * y[j];
    worst = std::max(worst, s);
  }
  return worst;
}

struct CrispValue {
  double value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy column_strategy;
};

inline Matrix parameter_sums(const FuzzyMatrix& a) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& x : a[i]) out[i].push_back(x.parameter_sum());
  }
  return out;
}

inline Matrix defuzzified(const FuzzyMatrix& a) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& x : a[i]) out[i].push_back(defuzzify(x));
  }
  return out;
}

// Minimax value via the shifted-matrix LP pair: with B = A + c > 0,
//   min sum(u) s.t. B^T u >= 1, u >= 0   gives x = u / sum(u),
//   max sum(w) s.t. B w <= 1, w >= 0     gives y = w / sum(w),
// and v(A) = 1 / sum(u) - c.
inline CrispValue crisp_value(const CrispGame& game,
                              const lp::SimplexOptions& options = {}) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  const double shift = 1.0 - game.min_entry();

  lp::LpModel row_lp("crisp_row_player");
  for (std::size_t i = 0; i < m; ++i) row_lp.add_variable("u" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = game.at(i, j) + shift;
    row_lp.add_constraint("col" + std::to_string(j + 1), std::move(r),
                          lp::Relation::kGreaterEqual, 1.0);
  }
  row_lp.add_objective("sum_u", std::vector<double>(m, 1.0), lp::Sense::kMinimize);

  lp::LpModel col_lp("crisp_column_player");
  for (std::size_t j = 0; j < n; ++j) col_lp.add_variable("w" + std::to_string(j + 1));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = game.at(i, j) + shift;
    col_lp.add_constraint("row" + std::to_string(i + 1), std::move(r),
                          lp::Relation::kLessEqual, 1.0);
  }
  col_lp.add_objective("sum_w", std::vector<double>(n, 1.0), lp::Sense::kMaximize);

  const lp::LpSolution rs = lp::solve(row_lp, options);
  const lp::LpSolution cs = lp::solve(col_lp, options);
  if (!rs.optimal() || !cs.optimal() || !(rs.objective_value > 0.0)) {
    throw std::logic_error("crisp_value: shifted game LP not solved to optimality");
  }

  auto normalize = [](std::vector<double> v, double total) {
    for (double& e : v) e /= total;
    return MixedStrategy(std::move(v));
  };
  CrispValue out;
  out.value = 1.0 / rs.objective_value - shift;
  out.row_strategy = normalize(rs.values, rs.objective_value);
  out.column_strategy = normalize(cs.values, cs.objective_value);
  return out;
}

}  // namespace fuzzygames

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

// Matrix games with triangular fuzzy payoffs, solved through the mean
// defuzzifier. Constraints are written in units of three times the mean
// (the plain parameter sums), which keeps integer payoffs exact; the game
// values V and W are variables in mean units.

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/fuzzy_number.hpp"
#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

inline void validate_fuzzy_matrix(const FuzzyMatrix& a) {
  if (a.empty() || a.front().empty()) {
    throw DomainError("fuzzy payoff matrix must be at least 1 x 1");
  }
  for (const auto& row : a) {
    if (row.size() != a.front().size()) throw DomainError("ragged fuzzy payoff matrix");
  }
}

struct FuzzyPayoffSpec {
  FuzzyMatrix payoff;
  TriangularFuzzyNumber p_margin;
  TriangularFuzzyNumber q_margin;

  std::size_t rows() const { return payoff.size(); }
  std::size_t cols() const { return payoff.empty() ? 0 : payoff.front().size(); }
  void validate() const { validate_fuzzy_matrix(payoff); }

  friend bool operator==(const FuzzyPayoffSpec&, const FuzzyPayoffSpec&) = default;
};

// max V s.t. sum_i S(a_ij) x_i >= 3V - (1 - lambda) S(p) for every column j,
// sum(x) = 1, lambda <= 1, x, lambda >= 0, V free; S is the parameter sum.
// Variables: x_1..x_m, lambda, V.
inline lp::LpModel build_fp1(const FuzzyPayoffSpec& spec) {
  spec.validate();
  const std::size_t m = spec.rows();
  const std::size_t n = spec.cols();
  const double margin = spec.p_margin.parameter_sum();
  lp::LpModel model("FP1");
  for (std::size_t i = 0; i < m; ++i) model.add_variable("x" + std::to_string(i + 1));
  const auto lambda = static_cast<std::size_t>(model.add_variable("lambda"));
  const auto value = static_cast<std::size_t>(model.add_free_variable("V"));

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = spec.payoff[i][j].parameter_sum();
    r[value] = -3.0;
    r[lambda] = -margin;
    model.add_constraint("col" + std::to_string(j + 1), std::move(r),
                         lp::Relation::kGreaterEqual, -margin);
  }
  std::vector<double> simplex = model.row();
  for (std::size_t i = 0; i < m; ++i) simplex[i] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  std::vector<double> cap = model.row();
  cap[lambda] = 1.0;
  model.add_constraint("lambda_cap", std::move(cap), lp::Relation::kLessEqual, 1.0);
  std::vector<double> objective = model.row();
  objective[value] = 1.0;
  model.add_objective("V", std::move(objective), lp::Sense::kMaximize);
  return model;
}

// min W s.t. sum_j S(a_ij) y_j <= 3W + (1 - eta) S(q) for every row i,
// sum(y) = 1, eta <= 1, y, eta >= 0, W free. Variables: y_1..y_n, eta, W.
inline lp::LpModel build_fd2(const FuzzyPayoffSpec& spec) {
  spec.validate();
  const std::size_t m = spec.rows();
  const std::size_t n = spec.cols();
  const double margin = spec.q_margin.parameter_sum();
  lp::LpModel model("FD2");
  for (std::size_t j = 0; j < n; ++j) model.add_variable("y" + std::to_string(j + 1));
  const auto eta = static_cast<std::size_t>(model.add_variable("eta"));
  const auto value = static_cast<std::size_t>(model.add_free_variable("W"));

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> r = model.row();
    for (std::size_t j = 0; j < n; ++j) r[j] = spec.payoff[i][j].parameter_sum();
    r[value] = -3.0;
    r[eta] = margin;
    model.add_constraint("row" + std::to_string(i + 1), std::move(r),
                         lp::Relation::kLessEqual, margin);
  }
  std::vector<double> simplex = model.row();
  for (std::size_t j = 0; j < n; ++j) simplex[j] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  std::vector<double> cap = model.row();
  cap[eta] = 1.0;
  model.add_constraint("eta_cap", std::move(cap), lp::Relation::kLessEqual, 1.0);
  std::vector<double> objective = model.row();
  objective[value] = 1.0;
  model.add_objective("W", std::move(objective), lp::Sense::kMinimize);
  return model;
}

inline GameSolution solve_fuzzy_payoffs(const FuzzyPayoffSpec& spec,
                                        const lp::SimplexOptions& options = {}) {
  spec.validate();
  const std::size_t m = spec.rows();
  const std::size_t n = spec.cols();
  const CrispGame summed(parameter_sums(spec.payoff));
  const CrispValue oracle = crisp_value(summed, options);
  const double mean_value = oracle.value / 3.0;

  GameSolution out;
  out.variant = GameVariant::kFuzzyPayoffs;
  out.oracle.value = mean_value;

  const lp::LpSolution fp1 = lp::solve(build_fp1(spec), options);
  out.player1.status = fp1.status;
  out.player1.pivots = fp1.pivots;
  if (fp1.optimal()) {
    out.player1.strategy = MixedStrategy(
        std::vector<double>(fp1.values.begin(), fp1.values.begin() + static_cast<long>(m)));
    out.player1.levels.push_back({"lambda", fp1.values[m]});
    out.player1.value = fp1.values[m + 1];
  }

  const lp::LpSolution fd2 = lp::solve(build_fd2(spec), options);
  out.player2.status = fd2.status;
  out.player2.pivots = fd2.pivots;
  if (fd2.optimal()) {
    out.player2.strategy = MixedStrategy(
        std::vector<double>(fd2.values.begin(), fd2.values.begin() + static_cast<long>(n)));
    out.player2.levels.push_back({"eta", fd2.values[n]});
    out.player2.value = fd2.values[n + 1];
  }

  // V = v(S(A))/3 + F(p) and W = v(S(A))/3 - F(q) whenever the margins are
  // nonnegative: the margin term is largest at lambda = 0 (eta = 0).
  const double expect_v = (oracle.value + std::max(0.0, spec.p_margin.parameter_sum())) / 3.0;
  const double expect_w = (oracle.value - std::max(0.0, spec.q_margin.parameter_sum())) / 3.0;
  constexpr double kAgree = 1e-6;
  bool agrees = out.player1.optimal() && out.player2.optimal();
  if (out.player1.value) agrees &= std::fabs(*out.player1.value - expect_v) <= kAgree * (1.0 + std::fabs(expect_v));
  if (out.player2.value) agrees &= std::fabs(*out.player2.value - expect_w) <= kAgree * (1.0 + std::fabs(expect_w));
  std::ostringstream detail;
  detail.precision(10);
  detail << "V=(v(S)+S(p))/3=" << expect_v << " W=(v(S)-S(q))/3=" << expect_w;
  out.oracle.agrees = agrees;
  out.oracle.detail = detail.str();
  if (m > 1 || n > 1) {
    out.warnings.push_back(
        "strategies are one optimal vertex; other optimal strategies may exist");
  }
  return out;
}

}  // namespace fuzzygames

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

// Matrix games with fuzzy goals. Player I wants a payoff essentially at
// least v0 (tolerance p0), player II wants to concede essentially at most
// w0 (tolerance q0). Each player's satisfaction is maximized by its own LP.

#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

struct FuzzyGoalsSpec {
  CrispGame game;
  double v0 = 0.0;
  double w0 = 0.0;
  double p0 = 1.0;
  double q0 = 1.0;

  void validate() const {
    if (!std::isfinite(v0) || !std::isfinite(w0)) {
      throw DomainError("fuzzy goals: non-finite aspiration level");
    }
    if (!(p0 > 0.0) || !std::isfinite(p0)) throw DomainError("fuzzy goals: p0 must be > 0");
    if (!(q0 > 0.0) || !std::isfinite(q0)) throw DomainError("fuzzy goals: q0 must be > 0");
  }

  friend bool operator==(const FuzzyGoalsSpec&, const FuzzyGoalsSpec&) = default;
};

// max lambda s.t. A_j^T x >= v0 - (1 - lambda) p0 for every column j,
// sum(x) = 1, lambda <= 1, x, lambda >= 0. Variables: x_1..x_m, lambda.
inline lp::LpModel build_flp(const FuzzyGoalsSpec& spec) {
  spec.validate();
  const std::size_t m = spec.game.rows();
  const std::size_t n = spec.game.cols();
  lp::LpModel model("FLP");
  for (std::size_t i = 0; i < m; ++i) model.add_variable("x" + std::to_string(i + 1));
  const int lambda = model.add_variable("lambda");
  const auto l = static_cast<std::size_t>(lambda);

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = spec.game.at(i, j);
    r[l] = -spec.p0;
    model.add_constraint("goal" + std::to_string(j + 1), std::move(r),
                         lp::Relation::kGreaterEqual, spec.v0 - spec.p0);
  }
  std::vector<double> simplex = model.row();
  for (std::size_t i = 0; i < m; ++i) simplex[i] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  std::vector<double> cap = model.row();
  cap[l] = 1.0;
  model.add_constraint("lambda_cap", cap, lp::Relation::kLessEqual, 1.0);
  model.add_objective("lambda", std::move(cap), lp::Sense::kMaximize);
  return model;
}

// max eta s.t. A_i y <= w0 + (1 - eta) q0 for every row i, sum(y) = 1,
// eta <= 1, y, eta >= 0. Variables: y_1..y_n, eta.
inline lp::LpModel build_fld(const FuzzyGoalsSpec& spec) {
  spec.validate();
  const std::size_t m = spec.game.rows();
  const std::size_t n = spec.game.cols();
  lp::LpModel model("FLD");
  for (std::size_t j = 0; j < n; ++j) model.add_variable("y" + std::to_string(j + 1));
  const int eta = model.add_variable("eta");
  const auto e = static_cast<std::size_t>(eta);

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> r = model.row();
    for (std::size_t j = 0; j < n; ++j) r[j] = spec.game.at(i, j);
    r[e] = spec.q0;
    model.add_constraint("goal" + std::to_string(i + 1), std::move(r),
                         lp::Relation::kLessEqual, spec.w0 + spec.q0);
  }
  std::vector<double> simplex = model.row();
  for (std::size_t j = 0; j < n; ++j) simplex[j] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  std::vector<double> cap = model.row();
  cap[e] = 1.0;
  model.add_constraint("eta_cap", cap, lp::Relation::kLessEqual, 1.0);
  model.add_objective("eta", std::move(cap), lp::Sense::kMaximize);
  return model;
}

// Satisfaction levels implied by the crisp value alone. Values below zero
// mean the corresponding program is infeasible.
inline double unclamped_lambda(const FuzzyGoalsSpec& spec, double value) {
  return 1.0 + (value - spec.v0) / spec.p0;
}
inline double unclamped_eta(const FuzzyGoalsSpec& spec, double value) {
  return 1.0 + (spec.w0 - value) / spec.q0;
}

inline GameSolution solve_fuzzy_goals(const FuzzyGoalsSpec& spec,
                                      const lp::SimplexOptions& options = {}) {
  spec.validate();
  const CrispValue oracle = crisp_value(spec.game, options);
  const std::size_t m = spec.game.rows();
  const std::size_t n = spec.game.cols();

  GameSolution out;
  out.variant = GameVariant::kFuzzyGoals;
  out.oracle.value = oracle.value;

  const lp::LpSolution flp = lp::solve(build_flp(spec), options);
  out.player1.status = flp.status;
  out.player1.pivots = flp.pivots;
  if (flp.optimal()) {
    std::vector<double> x(flp.values.begin(), flp.values.begin() + static_cast<long>(m));
    out.player1.strategy = MixedStrategy(std::move(x));
    out.player1.levels.push_back({"lambda", flp.values[m]});
    out.player1.value = guaranteed_payoff(spec.game.payoff(), out.player1.strategy.probabilities());
  } else {
    out.player1.diagnosis = Diagnosis{1, std::string(kAspirationAboveReach),
                                      oracle.value, spec.v0 - spec.p0};
  }

  const lp::LpSolution fld = lp::solve(build_fld(spec), options);
  out.player2.status = fld.status;
  out.player2.pivots = fld.pivots;
  if (fld.optimal()) {
    std::vector<double> y(fld.values.begin(), fld.values.begin() + static_cast<long>(n));
    out.player2.strategy = MixedStrategy(std::move(y));
    out.player2.levels.push_back({"eta", fld.values[n]});
    out.player2.value = conceded_payoff(spec.game.payoff(), out.player2.strategy.probabilities());
  } else {
    out.player2.diagnosis = Diagnosis{2, std::string(kValueAboveAspiration),
                                      oracle.value, spec.w0 + spec.q0};
  }

  // Each program depends on its strategy only through the guaranteed
  // payoff, so its optimum is the clamp of the crisp value's ramp.
  constexpr double kAgree = 1e-6;
  const double raw_lambda = unclamped_lambda(spec, oracle.value);
  const double raw_eta = unclamped_eta(spec, oracle.value);
  std::ostringstream detail;
  bool agrees = true;
  if (out.player1.optimal()) {
    agrees &= std::fabs(*out.player1.level("lambda") - clamp01(raw_lambda)) <= kAgree;
  } else {
    agrees &= raw_lambda < kAgree;
  }
  if (out.player2.optimal()) {
    agrees &= std::fabs(*out.player2.level("eta") - clamp01(raw_eta)) <= kAgree;
  } else {
    agrees &= raw_eta < kAgree;
  }
  detail << "lambda=clamp(1+(v-v0)/p0)=" << clamp01(raw_lambda)
         << " eta=clamp(1+(w0-v)/q0)=" << clamp01(raw_eta);
  out.oracle.agrees = agrees;
  out.oracle.detail = detail.str();
  if (m > 1 || n > 1) {
    out.warnings.push_back(
        "strategies are one optimal vertex; other optimal strategies may exist");
  }
  return out;
}

}  // namespace fuzzygames

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

#include "fuzzygames/games/fuzzy_goals.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuzzygames/errors.hpp"
#include "oracles/matrix_game.hpp"
#include "support/random.hpp"

namespace fuzzygames {
namespace {

FuzzyGoalsSpec ThreeByThree() {
  return {CrispGame(Matrix{{1, 3, 0}, {4, 7, 2}, {3, 5, 6}}), 5.0 / 3.0, 1.5, 2.0, 3.0};
}

const lp::Constraint& Row(const lp::LpModel& m, const std::string& name) {
  for (const auto& c : m.constraints()) {
    if (c.name == name) return c;
  }
  throw std::out_of_range(name);
}

TEST(BuildFlp, FirstGoalRow) {
  const lp::LpModel flp = build_flp(ThreeByThree());
  EXPECT_EQ(flp.num_variables(), 4u);
  EXPECT_EQ(flp.variables().back().name, "lambda");
  // 2 lambda - x1 - 4 x2 - 3 x3 <= 1/3, written as its negation.
  const lp::Constraint& g = Row(flp, "goal1");
  ASSERT_EQ(g.relation, lp::Relation::kGreaterEqual);
  const std::vector<double> want = {1, 4, 3, -2};
  for (std::size_t j = 0; j < want.size(); ++j) EXPECT_DOUBLE_EQ(g.coefficients[j], want[j]);
  EXPECT_NEAR(-g.rhs, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(flp.constraints().size(), 3u + 2u);
}

TEST(BuildFld, FirstGoalRow) {
  const lp::LpModel fld = build_fld(ThreeByThree());
  // 3 eta + y1 + 3 y2 <= 9/2.
  const lp::Constraint& g = Row(fld, "goal1");
  ASSERT_EQ(g.relation, lp::Relation::kLessEqual);
  const std::vector<double> want = {1, 3, 0, 3};
  for (std::size_t j = 0; j < want.size(); ++j) EXPECT_DOUBLE_EQ(g.coefficients[j], want[j]);
  EXPECT_DOUBLE_EQ(g.rhs, 4.5);
}

TEST(SolveFuzzyGoals, ThreeByThreeLevels) {
  const FuzzyGoalsSpec spec = ThreeByThree();
  const GameSolution s = solve_fuzzy_goals(spec);
  ASSERT_TRUE(s.all_optimal());
  EXPECT_NEAR(*s.player1.level("lambda"), 1.0, 1e-9);
  EXPECT_NEAR(*s.player2.level("eta"), 0.3, 1e-9);
  // Independent check of the clamp identity with the analytic value 3.6.
  const double v = oracles::value_2x2(4, 2, 3, 6).value;
  EXPECT_NEAR(*s.player2.level("eta"), 1 + (1.5 - v) / 3, 1e-9);
  EXPECT_TRUE(s.oracle.agrees);
  const auto& a = spec.game.payoff();
  EXPECT_GE(guaranteed_payoff(a, s.player1.strategy.probabilities()), 5.0 / 3.0 - 1e-8);
  EXPECT_LE(conceded_payoff(a, s.player2.strategy.probabilities()), 1.5 + 0.7 * 3 + 1e-8);
}

TEST(SolveFuzzyGoals, PrintedAlternateOptimumIsFeasible) {
  const FuzzyGoalsSpec spec = ThreeByThree();
  const std::vector<double> printed = {0.0271, 0.4233, 0.5496, 1.0};
  EXPECT_TRUE(lp::check_feasible(build_flp(spec), printed, 1e-3).feasible());
}

TEST(SolveFuzzyGoals, OneByOneMeetsAspirationExactly) {
  const GameSolution s = solve_fuzzy_goals({CrispGame(Matrix{{5}}), 5, 5, 1, 1});
  EXPECT_NEAR(*s.player1.level("lambda"), 1.0, 1e-12);
  EXPECT_NEAR(*s.player2.level("eta"), 1.0, 1e-12);
  EXPECT_TRUE(s.warnings.empty());
}

TEST(SolveFuzzyGoals, CrispReductionHoldsExactlyAtTheValue) {
  testing_support::Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = rng.int_matrix(3, 3, -9, 9);
    const double v = oracles::value_by_enumeration(a);
    const double p0 = rng.uniform(0.5, 3);
    const double q0 = rng.uniform(0.5, 3);
    const GameSolution at = solve_fuzzy_goals({CrispGame(a), v, v, p0, q0});
    EXPECT_NEAR(*at.player1.level("lambda"), 1.0, 1e-6) << k;
    EXPECT_NEAR(*at.player2.level("eta"), 1.0, 1e-6) << k;
    const double d = rng.uniform(0.1, 0.4) * (rng.integer(0, 1) ? 1 : -1);
    const GameSolution off = solve_fuzzy_goals({CrispGame(a), v + d, v + d, p0, q0});
    ASSERT_TRUE(off.all_optimal()) << k;
    EXPECT_LT(std::min(*off.player1.level("lambda"), *off.player2.level("eta")), 1.0 - 1e-3) << k;
  }
}

TEST(SolveFuzzyGoals, OracleIdentityOnRandomGames) {
  testing_support::Rng rng(52);
  int infeasible = 0;
  for (int k = 0; k < 20; ++k) {
    const Matrix a = rng.int_matrix(3, 3, -9, 9);
    const double v = oracles::value_by_enumeration(a);
    const FuzzyGoalsSpec spec{CrispGame(a), v + rng.uniform(-3, 3), v + rng.uniform(-3, 3),
                              rng.uniform(0.5, 3), rng.uniform(0.5, 3)};
    const GameSolution s = solve_fuzzy_goals(spec);
    const double raw_lambda = 1 + (v - spec.v0) / spec.p0;
    const double raw_eta = 1 + (spec.w0 - v) / spec.q0;
    EXPECT_EQ(s.player1.optimal(), raw_lambda >= 0) << k;
    EXPECT_EQ(s.player2.optimal(), raw_eta >= 0) << k;
    if (s.player1.optimal()) {
      EXPECT_NEAR(*s.player1.level("lambda"), std::clamp(raw_lambda, 0.0, 1.0), 1e-6);
    }
    if (s.player2.optimal()) {
      EXPECT_NEAR(*s.player2.level("eta"), std::clamp(raw_eta, 0.0, 1.0), 1e-6);
    }
    infeasible += !s.player1.optimal() + !s.player2.optimal();
    EXPECT_TRUE(s.oracle.agrees) << k;
  }
  EXPECT_GT(infeasible, 0);
}

TEST(SolveFuzzyGoals, InfeasibleAspirationIsDiagnosed) {
  const FuzzyGoalsSpec spec{CrispGame(Matrix{{4, 2}, {3, 6}}), 9, 0, 1, 1};
  const GameSolution s = solve_fuzzy_goals(spec);
  EXPECT_EQ(s.player1.status, lp::Status::kInfeasible);
  ASSERT_TRUE(s.player1.diagnosis);
  EXPECT_EQ(s.player1.diagnosis->reason, kAspirationAboveReach);
  EXPECT_NEAR(s.player1.diagnosis->oracle_value, 3.6, 1e-12);
  EXPECT_NEAR(s.player1.diagnosis->bound, 8, 1e-12);
  EXPECT_EQ(s.player2.status, lp::Status::kInfeasible);
  ASSERT_TRUE(s.player2.diagnosis);
  EXPECT_EQ(s.player2.diagnosis->reason, kValueAboveAspiration);
  EXPECT_NEAR(s.player2.diagnosis->bound, 1, 1e-12);
  EXPECT_TRUE(s.oracle.agrees);
}

TEST(SolveFuzzyGoals, StrategiesStayOnTheSimplex) {
  testing_support::Rng rng(53);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = rng.int_matrix(static_cast<std::size_t>(rng.integer(1, 4)),
                                    static_cast<std::size_t>(rng.integer(1, 4)), -9, 9);
    const GameSolution s = solve_fuzzy_goals({CrispGame(a), 0, 0, 20, 20});
    ASSERT_TRUE(s.all_optimal());
    for (const auto* p : {&s.player1, &s.player2}) {
      double sum = 0;
      for (double v : p->strategy.probabilities()) {
        EXPECT_GE(v, 0.0);
        sum += v;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
      const double level = p == &s.player1 ? *p->level("lambda") : *p->level("eta");
      EXPECT_GE(level, 0.0);
      EXPECT_LE(level, 1.0);
    }
  }
}

TEST(FuzzyGoalsSpec, Validation) {
  EXPECT_THROW(build_flp({CrispGame(Matrix{{1}}), 0, 0, 0, 1}), DomainError);
  EXPECT_THROW(build_fld({CrispGame(Matrix{{1}}), 0, 0, 1, -1}), DomainError);
}

}  // namespace
}  // namespace fuzzygames

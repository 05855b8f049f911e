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

// I-fuzzy linear programs under the pessimistic scenario and the matrix game
// with I-fuzzy goals built on them.
//
// Each I-fuzzy constraint contributes an acceptance ramp (membership at least
// alpha) and a rejection ramp (non-membership at most beta); the crisp program
// maximizes alpha - beta subject to alpha >= beta >= 0 and alpha + beta <= 1.
// Rows are emitted in the orientation the crisp programs are usually printed
// in, so acceptance rows are >= and rejection rows are <=.

#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/ifuzzy.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

namespace detail {

inline void require_pessimistic(const std::vector<IFuzzyTolerance>& tolerances,
                                std::size_t expected, const char* what) {
  if (tolerances.size() != expected) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(expected) +
                      " tolerances, got " + std::to_string(tolerances.size()));
  }
  for (const IFuzzyTolerance& t : tolerances) {
    if (t.scenario() != Scenario::kPessimistic || !(0.0 < t.reject() && t.reject() < t.accept())) {
      throw DomainError(std::string(what) + ": tolerances must satisfy 0 < q < p");
    }
  }
}

// Appends alpha + beta <= 1 and alpha - beta >= 0 for level variables at
// indices a, b.
inline void add_level_rows(lp::LpModel& model, std::size_t a, std::size_t b,
                           const std::string& an, const std::string& bn) {
  std::vector<double> sum = model.row();
  sum[a] = 1.0;
  sum[b] = 1.0;
  model.add_constraint(an + "_plus_" + bn, std::move(sum), lp::Relation::kLessEqual, 1.0);
  std::vector<double> order = model.row();
  order[a] = 1.0;
  order[b] = -1.0;
  model.add_constraint(an + "_ge_" + bn, order, lp::Relation::kGreaterEqual, 0.0);
  model.add_objective(an + "_minus_" + bn, std::move(order), lp::Sense::kMaximize);
}

}  // namespace detail

// Primal I-fuzzy LP: find x >= 0 with c^T x (IF)>= z0 and A x (IF)<= b.
// tolerances[0] belongs to the objective statement, tolerances[i] to row i.
// Variables x_1..x_n, alpha, beta.
inline lp::LpModel build_ifpc(const std::vector<double>& c, const std::vector<double>& b,
                              const Matrix& a, double z0,
                              const std::vector<IFuzzyTolerance>& tolerances) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (a.size() != m) throw DomainError("build_ifpc: A must have one row per entry of b");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("build_ifpc: A must have one column per entry of c");
  }
  detail::require_pessimistic(tolerances, m + 1, "build_ifpc");

  lp::LpModel model("IFPC");
  for (std::size_t j = 0; j < n; ++j) model.add_variable("x" + std::to_string(j + 1));
  const auto alpha = static_cast<std::size_t>(model.add_variable("alpha"));
  const auto beta = static_cast<std::size_t>(model.add_variable("beta"));

  const double p0 = tolerances[0].accept();
  const double q0 = tolerances[0].reject();
  // (1 - alpha) p0 + c^T x - z0 >= 0
  std::vector<double> r = model.row();
  for (std::size_t j = 0; j < n; ++j) r[j] = c[j];
  r[alpha] = -p0;
  model.add_constraint("accept0", std::move(r), lp::Relation::kGreaterEqual, z0 - p0);
  // (1 - alpha) p_i - A_i x + b_i >= 0
  for (std::size_t i = 0; i < m; ++i) {
    const double p = tolerances[i + 1].accept();
    r = model.row();
    for (std::size_t j = 0; j < n; ++j) r[j] = -a[i][j];
    r[alpha] = -p;
    model.add_constraint("accept" + std::to_string(i + 1), std::move(r),
                         lp::Relation::kGreaterEqual, -b[i] - p);
  }
  // (1 - beta) q0 - c^T x + (z0 - p0) <= 0
  r = model.row();
  for (std::size_t j = 0; j < n; ++j) r[j] = -c[j];
  r[beta] = -q0;
  model.add_constraint("reject0", std::move(r), lp::Relation::kLessEqual, p0 - z0 - q0);
  // (1 - beta) q_i + A_i x - (b_i + p_i) <= 0
  for (std::size_t i = 0; i < m; ++i) {
    const double p = tolerances[i + 1].accept();
    const double q = tolerances[i + 1].reject();
    r = model.row();
    for (std::size_t j = 0; j < n; ++j) r[j] = a[i][j];
    r[beta] = -q;
    model.add_constraint("reject" + std::to_string(i + 1), std::move(r),
                         lp::Relation::kLessEqual, b[i] + p - q);
  }
  detail::add_level_rows(model, alpha, beta, "alpha", "beta");
  return model;
}

// Dual I-fuzzy LP: find y >= 0 with b^T y (IF)<= w0 and A^T y (IF)>= c.
// tolerances[0] belongs to the objective statement, tolerances[j] to
// column j. Variables y_1..y_m, delta, eta.
inline lp::LpModel build_ifdc(const std::vector<double>& c, const std::vector<double>& b,
                              const Matrix& a, double w0,
                              const std::vector<IFuzzyTolerance>& tolerances) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (a.size() != m) throw DomainError("build_ifdc: A must have one row per entry of b");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("build_ifdc: A must have one column per entry of c");
  }
  detail::require_pessimistic(tolerances, n + 1, "build_ifdc");

  lp::LpModel model("IFDC");
  for (std::size_t i = 0; i < m; ++i) model.add_variable("y" + std::to_string(i + 1));
  const auto delta = static_cast<std::size_t>(model.add_variable("delta"));
  const auto eta = static_cast<std::size_t>(model.add_variable("eta"));

  const double s0 = tolerances[0].accept();
  const double t0 = tolerances[0].reject();
  // (1 - delta) s0 - b^T y + w0 >= 0
  std::vector<double> r = model.row();
  for (std::size_t i = 0; i < m; ++i) r[i] = -b[i];
  r[delta] = -s0;
  model.add_constraint("accept0", std::move(r), lp::Relation::kGreaterEqual, -w0 - s0);
  // (1 - delta) s_j + A_j^T y - c_j >= 0
  for (std::size_t j = 0; j < n; ++j) {
    const double s = tolerances[j + 1].accept();
    r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = a[i][j];
    r[delta] = -s;
    model.add_constraint("accept" + std::to_string(j + 1), std::move(r),
                         lp::Relation::kGreaterEqual, c[j] - s);
  }
  // (1 - eta) t0 + b^T y - (w0 + s0) <= 0
  r = model.row();
  for (std::size_t i = 0; i < m; ++i) r[i] = b[i];
  r[eta] = -t0;
  model.add_constraint("reject0", std::move(r), lp::Relation::kLessEqual, w0 + s0 - t0);
  // (1 - eta) t_j - A_j^T y + (c_j - s_j) <= 0
  for (std::size_t j = 0; j < n; ++j) {
    const double s = tolerances[j + 1].accept();
    const double t = tolerances[j + 1].reject();
    r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = -a[i][j];
    r[eta] = -t;
    model.add_constraint("reject" + std::to_string(j + 1), std::move(r),
                         lp::Relation::kLessEqual, s - c[j] - t);
  }
  detail::add_level_rows(model, delta, eta, "delta", "eta");
  return model;
}

struct IFuzzyGoalsSpec {
  CrispGame game;
  double u0 = 0.0;  // player I aspiration
  double v0 = 0.0;  // player II aspiration
  IFuzzyTolerance player1 = IFuzzyTolerance::pessimistic(1.0, 0.5);  // p0, q0
  IFuzzyTolerance player2 = IFuzzyTolerance::pessimistic(1.0, 0.5);  // s0, t0

  void validate() const {
    if (!std::isfinite(u0) || !std::isfinite(v0)) {
      throw DomainError("I-fuzzy goals: non-finite aspiration level");
    }
    detail::require_pessimistic({player1, player2}, 2, "I-fuzzy goals");
  }

  friend bool operator==(const IFuzzyGoalsSpec& a, const IFuzzyGoalsSpec& b) {
    auto same = [](const IFuzzyTolerance& x, const IFuzzyTolerance& y) {
      return x.accept() == y.accept() && x.reject() == y.reject() && x.scenario() == y.scenario();
    };
    return a.game == b.game && a.u0 == b.u0 && a.v0 == b.v0 && same(a.player1, b.player1) &&
           same(a.player2, b.player2);
  }
};

// max alpha - beta s.t. for every column j
//   (1 - alpha) p0 + A_j^T x - U0 >= 0,
//   (1 - beta) q0 - A_j^T x + (U0 - p0) <= 0,
// sum(x) = 1, x >= 0, alpha + beta <= 1, alpha >= beta >= 0.
// Row order: n acceptance, n rejection, simplex, alpha+beta, alpha>=beta.
inline lp::LpModel build_cfp1(const IFuzzyGoalsSpec& spec) {
  spec.validate();
  const std::size_t m = spec.game.rows();
  const std::size_t n = spec.game.cols();
  const double p0 = spec.player1.accept();
  const double q0 = spec.player1.reject();
  lp::LpModel model("CFP1");
  for (std::size_t i = 0; i < m; ++i) model.add_variable("x" + std::to_string(i + 1));
  const auto alpha = static_cast<std::size_t>(model.add_variable("alpha"));
  const auto beta = static_cast<std::size_t>(model.add_variable("beta"));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = spec.game.at(i, j);
    r[alpha] = -p0;
    model.add_constraint("accept" + std::to_string(j + 1), std::move(r),
                         lp::Relation::kGreaterEqual, spec.u0 - p0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = -spec.game.at(i, j);
    r[beta] = -q0;
    model.add_constraint("reject" + std::to_string(j + 1), std::move(r),
                         lp::Relation::kLessEqual, p0 - spec.u0 - q0);
  }
  std::vector<double> simplex = model.row();
  for (std::size_t i = 0; i < m; ++i) simplex[i] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  detail::add_level_rows(model, alpha, beta, "alpha", "beta");
  return model;
}

// max delta - eta s.t. for every row i
//   (1 - delta) s0 - A_i y + V0 >= 0,
//   (1 - eta) t0 + A_i y - (V0 + s0) <= 0,
// sum(y) = 1, y >= 0, delta + eta <= 1, delta >= eta >= 0.
inline lp::LpModel build_cfp2(const IFuzzyGoalsSpec& spec) {
  spec.validate();
  const std::size_t m = spec.game.rows();
  const std::size_t n = spec.game.cols();
  const double s0 = spec.player2.accept();
  const double t0 = spec.player2.reject();
  lp::LpModel model("CFP2");
  for (std::size_t j = 0; j < n; ++j) model.add_variable("y" + std::to_string(j + 1));
  const auto delta = static_cast<std::size_t>(model.add_variable("delta"));
  const auto eta = static_cast<std::size_t>(model.add_variable("eta"));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> r = model.row();
    for (std::size_t j = 0; j < n; ++j) r[j] = -spec.game.at(i, j);
    r[delta] = -s0;
    model.add_constraint("accept" + std::to_string(i + 1), std::move(r),
                         lp::Relation::kGreaterEqual, -spec.v0 - s0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> r = model.row();
    for (std::size_t j = 0; j < n; ++j) r[j] = spec.game.at(i, j);
    r[eta] = -t0;
    model.add_constraint("reject" + std::to_string(i + 1), std::move(r),
                         lp::Relation::kLessEqual, spec.v0 + s0 - t0);
  }
  std::vector<double> simplex = model.row();
  for (std::size_t j = 0; j < n; ++j) simplex[j] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  detail::add_level_rows(model, delta, eta, "delta", "eta");
  return model;
}

// Best (acceptance, rejection) levels for a guaranteed payoff `margin`
// above the full-rejection point: acceptance min(1, margin/p), rejection
// max(0, 1 - margin/q). Empty when acceptance would fall below rejection.
struct LevelPair {
  double accept;
  double reject;
};
inline std::optional<LevelPair> best_levels(double margin, const IFuzzyTolerance& tol) {
  const double a = std::min(1.0, margin / tol.accept());
  const double r = std::max(0.0, 1.0 - margin / tol.reject());
  if (a < r - 1e-12) return std::nullopt;
  return LevelPair{a, r};
}

inline GameSolution solve_ifuzzy_goals(const IFuzzyGoalsSpec& spec,
                                       const lp::SimplexOptions& options = {}) {
  spec.validate();
  const std::size_t m = spec.game.rows();
  const std::size_t n = spec.game.cols();
  const Matrix& a = spec.game.payoff();
  const CrispValue oracle = crisp_value(spec.game, options);
  constexpr double kLevelTol = 1e-9;

  GameSolution out;
  out.variant = GameVariant::kIFuzzyGoals;
  out.oracle.value = oracle.value;

  const lp::LpSolution s1 = lp::solve(build_cfp1(spec), options);
  out.player1.status = s1.status;
  out.player1.pivots = s1.pivots;
  if (s1.optimal()) {
    const double alpha = s1.values[m];
    const double beta = s1.values[m + 1];
    if (!(alpha >= beta - kLevelTol && beta >= -kLevelTol && alpha + beta <= 1.0 + kLevelTol)) {
      throw std::logic_error("CFP1 optimum violates alpha >= beta >= 0, alpha + beta <= 1");
    }
    PlayerSolution& p = out.player1;
    p.strategy = MixedStrategy(std::vector<double>(s1.values.begin(), s1.values.begin() + static_cast<long>(m)));
    p.levels = {{"alpha", alpha}, {"beta", beta}};
    p.value = guaranteed_payoff(a, p.strategy.probabilities());
    for (std::size_t j = 0; j < n; ++j) {
      double z = 0.0;
      for (std::size_t i = 0; i < m; ++i) z += a[i][j] * p.strategy[i];
      p.constraint_pairs.push_back(pessimistic_pair(z, spec.u0, spec.player1));
    }
    p.decision = ifuzzy_decision({}, p.constraint_pairs);
  } else {
    out.player1.diagnosis = Diagnosis{1, std::string(kAspirationAboveReach), oracle.value,
                                      spec.u0 - spec.player1.accept()};
  }

  const lp::LpSolution s2 = lp::solve(build_cfp2(spec), options);
  out.player2.status = s2.status;
  out.player2.pivots = s2.pivots;
  if (s2.optimal()) {
    const double delta = s2.values[n];
    const double eta = s2.values[n + 1];
    if (!(delta >= eta - kLevelTol && eta >= -kLevelTol && delta + eta <= 1.0 + kLevelTol)) {
      throw std::logic_error("CFP2 optimum violates delta >= eta >= 0, delta + eta <= 1");
    }
    PlayerSolution& p = out.player2;
    p.strategy = MixedStrategy(std::vector<double>(s2.values.begin(), s2.values.begin() + static_cast<long>(n)));
    p.levels = {{"delta", delta}, {"eta", eta}};
    p.value = conceded_payoff(a, p.strategy.probabilities());
    for (std::size_t i = 0; i < m; ++i) {
      double z = 0.0;
      for (std::size_t j = 0; j < n; ++j) z += a[i][j] * p.strategy[j];
      p.constraint_pairs.push_back(lesseq_reflection(z, spec.v0, spec.player2));
    }
    p.decision = ifuzzy_decision({}, p.constraint_pairs);
  } else {
    out.player2.diagnosis = Diagnosis{2, std::string(kValueAboveAspiration), oracle.value,
                                      spec.v0 + spec.player2.accept()};
  }

  // Both programs see their strategy only through the guaranteed payoff,
  // so the optimal levels follow from the crisp value.
  const auto expect1 = best_levels(oracle.value - spec.u0 + spec.player1.accept(), spec.player1);
  const auto expect2 = best_levels(spec.v0 + spec.player2.accept() - oracle.value, spec.player2);
  constexpr double kAgree = 1e-6;
  bool agrees = true;
  if (out.player1.optimal() && expect1) {
    agrees &= std::fabs(*out.player1.level("alpha") - expect1->accept) <= kAgree &&
              std::fabs(*out.player1.level("beta") - expect1->reject) <= kAgree;
  } else {
    agrees &= out.player1.optimal() == expect1.has_value();
  }
  if (out.player2.optimal() && expect2) {
    agrees &= std::fabs(*out.player2.level("delta") - expect2->accept) <= kAgree &&
              std::fabs(*out.player2.level("eta") - expect2->reject) <= kAgree;
  } else {
    agrees &= out.player2.optimal() == expect2.has_value();
  }
  out.oracle.agrees = agrees;
  std::ostringstream detail;
  detail << "levels from crisp value:";
  if (expect1) detail << " alpha=" << expect1->accept << " beta=" << expect1->reject;
  else detail << " player1 infeasible";
  if (expect2) detail << " delta=" << expect2->accept << " eta=" << expect2->reject;
  else detail << " player2 infeasible";
  out.oracle.detail = detail.str();
  if (m > 1 || n > 1) {
    out.warnings.push_back(
        "strategies are one optimal vertex; other optimal strategies may exist");
  }
  return out;
}

}  // namespace fuzzygames

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

// Pareto-optimal security strategies for fuzzy-payoff games.
//
// A strategy's security level is read through the ranking function: for each
// cut level and each cut endpoint, the worst case over opponent columns.
// Maximizing every such entry at once is a multi-objective LP with one value
// variable per (level, endpoint) slot; at alpha = 1 both endpoints coincide
// for triangular payoffs and those two slots share one variable. The
// multi-objective program is solved by positive weighted sums, and the
// result is checked for non-dominance against a sample of the simplex.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/fuzzy_number.hpp"
#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/games/fuzzy_payoffs.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

struct PossSpec {
  FuzzyMatrix payoff;
  CutSet cuts{{1.0}};
  std::optional<std::vector<double>> weights;

  std::size_t rows() const { return payoff.size(); }
  std::size_t cols() const { return payoff.empty() ? 0 : payoff.front().size(); }
  void validate() const { validate_fuzzy_matrix(payoff); }

  friend bool operator==(const PossSpec&, const PossSpec&) = default;
};

// Endpoint matrix for one cut: entry (i, j) is the lower (endpoint 0) or
// upper (endpoint 1) end of the alpha-cut of a_ij.
inline Matrix cut_matrix(const FuzzyMatrix& a, double alpha, int endpoint) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& x : a[i]) {
      const Interval cut = alpha_cut(x, alpha);
      out[i].push_back(endpoint == 0 ? cut.lo : cut.hi);
    }
  }
  return out;
}

struct MlpModel {
  lp::LpModel model;
  // slot_objective[i][e]: objective (and value variable) index serving cut
  // level i, endpoint e.
  std::vector<std::array<int, 2>> slot_objective;
  std::size_t num_objectives = 0;
  std::size_t strategy_size = 0;
};

// Variables x_1..x_m then one free value variable per distinct slot, named
// v<level><endpoint> with 1-based indices. One maximize objective per value
// variable; constraints x^T A_col >= v for every slot and column.
inline MlpModel build_mlp(const PossSpec& spec) {
  spec.validate();
  const std::size_t m = spec.rows();
  const std::size_t n = spec.cols();
  const std::size_t r = spec.cuts.size();

  std::vector<std::array<Matrix, 2>> mats(r);
  MlpModel out;
  out.strategy_size = m;
  out.slot_objective.assign(r, {-1, -1});
  std::vector<std::pair<std::size_t, int>> slots;
  for (std::size_t i = 0; i < r; ++i) {
    for (int e = 0; e < 2; ++e) {
      mats[i][static_cast<std::size_t>(e)] = cut_matrix(spec.payoff, spec.cuts[i], e);
    }
    out.slot_objective[i][0] = static_cast<int>(slots.size());
    slots.emplace_back(i, 0);
    if (mats[i][1] == mats[i][0]) {
      out.slot_objective[i][1] = out.slot_objective[i][0];
    } else {
      out.slot_objective[i][1] = static_cast<int>(slots.size());
      slots.emplace_back(i, 1);
    }
  }
  out.num_objectives = slots.size();

  lp::LpModel& model = out.model;
  model = lp::LpModel("MLP");
  for (std::size_t i = 0; i < m; ++i) model.add_variable("x" + std::to_string(i + 1));
  std::vector<std::string> names;
  for (const auto& [level, endpoint] : slots) {
    names.push_back("v" + std::to_string(level + 1) + std::to_string(endpoint + 1));
    model.add_free_variable(names.back());
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const Matrix& a = mats[slots[k].first][static_cast<std::size_t>(slots[k].second)];
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> row = model.row();
      for (std::size_t i = 0; i < m; ++i) row[i] = a[i][j];
      row[m + k] = -1.0;
      model.add_constraint(names[k] + "_col" + std::to_string(j + 1), std::move(row),
                           lp::Relation::kGreaterEqual, 0.0);
    }
  }
  std::vector<double> simplex = model.row();
  for (std::size_t i = 0; i < m; ++i) simplex[i] = 1.0;
  model.add_constraint("simplex", std::move(simplex), lp::Relation::kEqual, 1.0);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    std::vector<double> obj = model.row();
    obj[m + k] = 1.0;
    model.add_objective(names[k], std::move(obj), lp::Sense::kMaximize);
  }
  return out;
}

// Accepts one weight per distinct objective, or one per (level, endpoint)
// slot; in the latter case weights of merged slots are summed. Missing
// weights default to 1 per distinct objective.
inline std::vector<double> objective_weights(const MlpModel& mlp,
                                             const std::optional<std::vector<double>>& weights) {
  if (!weights) return std::vector<double>(mlp.num_objectives, 1.0);
  const std::vector<double>& w = *weights;
  for (double v : w) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("POSS weights must be positive");
  }
  if (w.size() == mlp.num_objectives) return w;
  if (w.size() == 2 * mlp.slot_objective.size()) {
    std::vector<double> merged(mlp.num_objectives, 0.0);
    for (std::size_t i = 0; i < mlp.slot_objective.size(); ++i) {
      for (std::size_t e = 0; e < 2; ++e) {
        merged[static_cast<std::size_t>(mlp.slot_objective[i][e])] += w[2 * i + e];
      }
    }
    return merged;
  }
  throw DomainError("POSS expects " + std::to_string(mlp.num_objectives) + " or " +
                    std::to_string(2 * mlp.slot_objective.size()) + " weights, got " +
                    std::to_string(w.size()));
}

// Player I's security level of x: per cut level, [min_j x^T A^lo_j,
// min_j x^T A^hi_j].
inline RankingMatrix security_level(const FuzzyMatrix& a, const CutSet& cuts,
                                    std::span<const double> x) {
  RankingMatrix out;
  out.reserve(cuts.size());
  const std::size_t n = a.front().size();
  for (double alpha : cuts.levels()) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      double slo = 0.0;
      double shi = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Interval cut = alpha_cut(a[i][j], alpha);
        slo += cut.lo * x[i];
        shi += cut.hi * x[i];
      }
      lo = std::min(lo, slo);
      hi = std::min(hi, shi);
    }
    out.push_back({lo, hi});
  }
  return out;
}

// True when `candidate` is at least `incumbent` in every entry and strictly
// better in one, beyond `tolerance`.
inline bool dominates(const RankingMatrix& candidate, const RankingMatrix& incumbent,
                      double tolerance) {
  bool strict = false;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const std::array<double, 2> c{candidate[i].lo, candidate[i].hi};
    const std::array<double, 2> s{incumbent[i].lo, incumbent[i].hi};
    for (std::size_t e = 0; e < 2; ++e) {
      if (c[e] < s[e] - tolerance) return false;
      if (c[e] > s[e] + tolerance) strict = true;
    }
  }
  return strict;
}

struct DominanceCheckOptions {
  int grid_steps = 200;          // per coordinate, exhaustive when m <= 3
  std::size_t max_grid_size = 3;
  int random_samples = 10'000;   // used above max_grid_size
  std::uint64_t seed = 0x5eed;
};

// Searches the simplex for a strategy whose security level dominates
// `security`. Returns the first one found.
inline std::optional<std::vector<double>> find_dominating_strategy(
    const FuzzyMatrix& a, const CutSet& cuts, const RankingMatrix& security,
    const DominanceCheckOptions& options = {}) {
  const std::size_t m = a.size();
  double scale = 1.0;
  for (const Interval& iv : security) scale = std::max({scale, std::fabs(iv.lo), std::fabs(iv.hi)});
  const double tol = 1e-9 * scale;
  auto test = [&](const std::vector<double>& x) {
    return dominates(security_level(a, cuts, x), security, tol);
  };

  if (m <= options.max_grid_size) {
    const int k = options.grid_steps;
    const double step = 1.0 / k;
    std::vector<double> x(m, 0.0);
    if (m == 1) {
      x[0] = 1.0;
      if (test(x)) return x;
      return std::nullopt;
    }
    if (m == 2) {
      for (int i = 0; i <= k; ++i) {
        x = {i * step, (k - i) * step};
        if (test(x)) return x;
      }
      return std::nullopt;
    }
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; i + j <= k; ++j) {
        x = {i * step, j * step, (k - i - j) * step};
        if (test(x)) return x;
      }
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(options.seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(x.begin(), x.end(), 0.0);
    x[i] = 1.0;
    if (test(x)) return x;
  }
  for (int s = 0; s < options.random_samples; ++s) {
    double total = 0.0;
    for (double& v : x) total += (v = expo(rng));
    for (double& v : x) v /= total;
    if (test(x)) return x;
  }
  return std::nullopt;
}

struct PossResult {
  MixedStrategy strategy;
  RankingMatrix security;
  std::optional<TriangularFuzzyNumber> security_tfn;
  std::vector<double> weights;  // per distinct objective
  lp::LpSolution lp;
};

namespace detail {

// Security matrices describe a triangular number when the cuts are {0, 1}
// (lower/upper from alpha = 0, center from alpha = 1) or just {1}.
inline std::optional<TriangularFuzzyNumber> security_as_tfn(const CutSet& cuts,
                                                            const RankingMatrix& s) {
  if (cuts.levels() == std::vector<double>{0.0, 1.0}) {
    const double center = s[1].lo;
    return TriangularFuzzyNumber(std::min(s[0].lo, center), center, std::max(s[0].hi, center));
  }
  if (cuts.levels() == std::vector<double>{1.0}) {
    return TriangularFuzzyNumber::crisp(s[0].lo);
  }
  return std::nullopt;
}

}  // namespace detail

inline PossResult solve_poss(const PossSpec& spec,
                             const DominanceCheckOptions& dominance = {},
                             const lp::SimplexOptions& options = {}) {
  const MlpModel mlp = build_mlp(spec);
  PossResult out;
  out.weights = objective_weights(mlp, spec.weights);
  out.lp = lp::solve(lp::scalarize(mlp.model, out.weights), options);
  if (!out.lp.optimal()) {
    throw std::logic_error("POSS: scalarized MLP not optimal (" +
                           std::string(lp::to_string(out.lp.status)) + ")");
  }
  out.strategy = MixedStrategy(std::vector<double>(
      out.lp.values.begin(), out.lp.values.begin() + static_cast<long>(mlp.strategy_size)));
  out.security = security_level(spec.payoff, spec.cuts, out.strategy.probabilities());
  out.security_tfn = detail::security_as_tfn(spec.cuts, out.security);
  if (auto better = find_dominating_strategy(spec.payoff, spec.cuts, out.security, dominance)) {
    throw std::logic_error("POSS: scalarized optimum is dominated");
  }
  return out;
}

// Player II's side: negate and transpose the payoff so player II becomes a
// maximizer, solve, and map the security level back to player II's losses
// (per cut level, [max_i A^lo_i y, max_i A^hi_i y]).
inline PossResult solve_poss_player2(const PossSpec& spec,
                                     const DominanceCheckOptions& dominance = {},
                                     const lp::SimplexOptions& options = {}) {
  spec.validate();
  PossSpec mirrored;
  mirrored.cuts = spec.cuts;
  mirrored.weights = spec.weights;
  mirrored.payoff.assign(spec.cols(), {});
  for (std::size_t j = 0; j < spec.cols(); ++j) {
    for (std::size_t i = 0; i < spec.rows(); ++i) mirrored.payoff[j].push_back(-spec.payoff[i][j]);
  }
  PossResult out = solve_poss(mirrored, dominance, options);
  for (Interval& iv : out.security) iv = {-iv.hi, -iv.lo};
  if (out.security_tfn) out.security_tfn = -*out.security_tfn;
  return out;
}

// Player II's security level of y computed directly on the original payoff.
inline RankingMatrix security_level_player2(const FuzzyMatrix& a, const CutSet& cuts,
                                            std::span<const double> y) {
  RankingMatrix out;
  for (double alpha : cuts.levels()) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : a) {
      double slo = 0.0;
      double shi = 0.0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const Interval cut = alpha_cut(row[j], alpha);
        slo += cut.lo * y[j];
        shi += cut.hi * y[j];
      }
      lo = std::max(lo, slo);
      hi = std::max(hi, shi);
    }
    out.push_back({lo, hi});
  }
  return out;
}

inline GameSolution solve_poss_game(const PossSpec& spec,
                                    const DominanceCheckOptions& dominance = {},
                                    const lp::SimplexOptions& options = {}) {
  const PossResult p1 = solve_poss(spec, dominance, options);
  const PossResult p2 = solve_poss_player2(spec, dominance, options);

  auto fill = [](PlayerSolution& ps, const PossResult& r) {
    ps.status = r.lp.status;
    ps.pivots = r.lp.pivots;
    ps.strategy = r.strategy;
    ps.security = r.security;
    ps.fuzzy_value = r.security_tfn;
  };
  GameSolution out;
  out.variant = GameVariant::kPoss;
  fill(out.player1, p1);
  fill(out.player2, p2);

  // At alpha = 1 the security levels bracket the crisp value of the
  // center matrix: player I cannot guarantee more, player II cannot hold
  // player I to less.
  Matrix centers(spec.rows());
  for (std::size_t i = 0; i < spec.rows(); ++i) {
    for (const auto& x : spec.payoff[i]) centers[i].push_back(x.center());
  }
  const double v = crisp_value(CrispGame(centers), options).value;
  const double tol = 1e-8 * (1.0 + std::fabs(v));
  out.oracle.value = v;
  out.oracle.agrees = p1.security.back().lo <= v + tol && p2.security.back().hi >= v - tol;
  out.oracle.detail = "alpha=1 security levels bracket the crisp value of the center matrix; "
                      "no sampled strategy dominates either player's security level";
  if (p1.security.back().lo < v - tol || p2.security.back().hi > v + tol) {
    out.warnings.push_back(
        "alpha=1 security level differs from the crisp center value (trade-off across cut levels)");
  }
  return out;
}

}  // namespace fuzzygames

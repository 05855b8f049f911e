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

#include <cstdint>
#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/games/fuzzy_goals.hpp"
#include "fuzzygames/games/fuzzy_payoffs.hpp"
#include "fuzzygames/games/ifuzzy_goals.hpp"
#include "fuzzygames/games/poss.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

// Alternatives are ordered like GameVariant.
using GameSpec = std::variant<FuzzyGoalsSpec, FuzzyPayoffSpec, PossSpec, IFuzzyGoalsSpec>;

struct SolveOptions {
  std::optional<std::vector<double>> weights;  // overrides PossSpec::weights
  std::uint64_t seed = 0x5eed;
  lp::SimplexOptions simplex;
};

inline GameSolution solve_game(const GameSpec& spec, const SolveOptions& options = {}) {
  return std::visit(
      [&](const auto& s) -> GameSolution {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FuzzyGoalsSpec>) {
          return solve_fuzzy_goals(s, options.simplex);
        } else if constexpr (std::is_same_v<T, FuzzyPayoffSpec>) {
          return solve_fuzzy_payoffs(s, options.simplex);
        } else if constexpr (std::is_same_v<T, PossSpec>) {
          PossSpec copy = s;
          if (options.weights) copy.weights = options.weights;
          DominanceCheckOptions dominance;
          dominance.seed = options.seed;
          return solve_poss_game(copy, dominance, options.simplex);
        } else {
          return solve_ifuzzy_goals(s, options.simplex);
        }
      },
      spec);
}

// The matrix whose crisp value backs the oracle: the payoff itself for
// crisp variants, the defuzzified payoff (fuzzy-payoffs) or the center
// matrix (poss) otherwise.
inline CrispGame oracle_game(const GameSpec& spec) {
  return std::visit(
      [](const auto& s) -> CrispGame {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FuzzyGoalsSpec> || std::is_same_v<T, IFuzzyGoalsSpec>) {
          return s.game;
        } else if constexpr (std::is_same_v<T, FuzzyPayoffSpec>) {
          return CrispGame(defuzzified(s.payoff));
        } else {
          Matrix centers(s.payoff.size());
          for (std::size_t i = 0; i < s.payoff.size(); ++i) {
            for (const auto& x : s.payoff[i]) centers[i].push_back(x.center());
          }
          return CrispGame(std::move(centers));
        }
      },
      spec);
}

// A player's LP together with the variable assignment a reported solution
// stands for, so the solution can be re-checked against the constraints.
struct PlayerProgram {
  lp::LpModel model;
  std::vector<double> assignment;
};

namespace detail {

inline PossSpec mirrored_poss(const PossSpec& s) {
  PossSpec out;
  out.cuts = s.cuts;
  out.payoff.assign(s.cols(), {});
  for (std::size_t j = 0; j < s.cols(); ++j) {
    for (std::size_t i = 0; i < s.rows(); ++i) out.payoff[j].push_back(-s.payoff[i][j]);
  }
  return out;
}

}  // namespace detail

inline PlayerProgram player_program(const GameSpec& spec, int player, const PlayerSolution& sol) {
  PlayerProgram out;
  std::vector<double>& x = out.assignment;
  x = sol.strategy.probabilities();
  auto level = [&](const char* name) { return sol.level(name).value_or(0.0); };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FuzzyGoalsSpec>) {
          out.model = player == 1 ? build_flp(s) : build_fld(s);
          x.push_back(level(player == 1 ? "lambda" : "eta"));
        } else if constexpr (std::is_same_v<T, FuzzyPayoffSpec>) {
          out.model = player == 1 ? build_fp1(s) : build_fd2(s);
          x.push_back(level(player == 1 ? "lambda" : "eta"));
          x.push_back(sol.value.value_or(0.0));
        } else if constexpr (std::is_same_v<T, PossSpec>) {
          const MlpModel mlp = build_mlp(player == 1 ? s : detail::mirrored_poss(s));
          out.model = mlp.model;
          std::vector<double> v(mlp.num_objectives, 0.0);
          for (std::size_t i = 0; i < mlp.slot_objective.size() && i < sol.security.size(); ++i) {
            for (std::size_t e = 0; e < 2; ++e) {
              const Interval& iv = sol.security[i];
              const double entry = player == 1 ? (e == 0 ? iv.lo : iv.hi) : (e == 0 ? -iv.hi : -iv.lo);
              v[static_cast<std::size_t>(mlp.slot_objective[i][e])] = entry;
            }
          }
          x.insert(x.end(), v.begin(), v.end());
        } else {
          out.model = player == 1 ? build_cfp1(s) : build_cfp2(s);
          x.push_back(level(player == 1 ? "alpha" : "delta"));
          x.push_back(level(player == 1 ? "beta" : "eta"));
        }
      },
      spec);
  return out;
}

}  // namespace fuzzygames

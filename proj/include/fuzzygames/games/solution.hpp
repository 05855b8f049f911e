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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzygames/fuzzy_number.hpp"
#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/ifuzzy.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames {

enum class GameVariant { kFuzzyGoals, kFuzzyPayoffs, kPoss, kIFuzzyGoals };

inline const char* to_string(GameVariant v) {
  switch (v) {
    case GameVariant::kFuzzyGoals: return "fuzzy-goals";
    case GameVariant::kFuzzyPayoffs: return "fuzzy-payoffs";
    case GameVariant::kPoss: return "poss";
    case GameVariant::kIFuzzyGoals: return "ifuzzy-goals";
  }
  return "?";
}

// Reason strings used in diagnostics and machine-readable reports.
inline constexpr std::string_view kAspirationAboveReach =
    "aspiration_exceeds_value_plus_tolerance";
inline constexpr std::string_view kValueAboveAspiration =
    "value_exceeds_aspiration_plus_tolerance";

struct Level {
  std::string name;
  double value = 0.0;
};

// Why a player's program has no solution, expressed against the crisp value.
struct Diagnosis {
  int player = 1;
  std::string reason;
  double oracle_value = 0.0;
  // The payoff the oracle value would have to reach (player I) or stay
  // under (player II) for the program to be feasible.
  double bound = 0.0;
};

struct PlayerSolution {
  lp::Status status = lp::Status::kInfeasible;
  MixedStrategy strategy;
  std::vector<Level> levels;
  std::optional<double> value;
  std::optional<TriangularFuzzyNumber> fuzzy_value;
  RankingMatrix security;
  std::vector<IFuzzyPair> constraint_pairs;
  std::optional<IFuzzyPair> decision;
  long pivots = 0;
  std::optional<Diagnosis> diagnosis;

  bool optimal() const { return status == lp::Status::kOptimal; }

  std::optional<double> level(std::string_view name) const {
    for (const Level& l : levels) {
      if (l.name == name) return l.value;
    }
    return std::nullopt;
  }
};

struct OracleCheck {
  double value = 0.0;
  bool agrees = true;
  std::string detail;
};

struct GameSolution {
  GameVariant variant = GameVariant::kFuzzyGoals;
  PlayerSolution player1;
  PlayerSolution player2;
  OracleCheck oracle;
  std::vector<std::string> warnings;

  bool all_optimal() const { return player1.optimal() && player2.optimal(); }

  lp::Status overall_status() const {
    if (!player1.optimal()) return player1.status;
    return player2.status;
  }
};

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace fuzzygames

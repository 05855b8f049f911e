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

#include "fuzzygames/io/game_file.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support/random.hpp"

namespace fuzzygames::io {
namespace {

std::string Slurp(const std::string& name) {
  std::ifstream in(std::string(FUZZYGAMES_GAMES_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> GameNames() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(FUZZYGAMES_GAMES_DIR)) {
    if (e.path().extension() == ".game") out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Line, column and message of the ParseError raised by `text`.
struct Failure {
  int line = 0;
  int column = 0;
  std::string what;
};
Failure FailureOf(const std::string& text) {
  try {
    parse_game_file(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.what()};
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return {};
}

const char* kGoals =
    "variant fuzzy-goals\n"
    "rows 2\n"
    "cols 2\n"
    "payoff\n"
    "4 2\n"
    "3 6\n"
    "v0 3\n"
    "w0 4\n"
    "p0 1\n"
    "q0 1\n";

TEST(ParseGameFile, FuzzyGoalsExample) {
  const GameFile f = parse_game_file(Slurp("goals3x3.game"));
  ASSERT_EQ(f.variant(), GameVariant::kFuzzyGoals);
  const auto& s = std::get<FuzzyGoalsSpec>(f.spec);
  EXPECT_EQ(s.game.payoff(), (Matrix{{1, 3, 0}, {4, 7, 2}, {3, 5, 6}}));
  EXPECT_EQ(s.v0, 5.0 / 3.0);
  EXPECT_EQ(s.w0, 1.5);
  EXPECT_EQ(s.p0, 2.0);
  EXPECT_EQ(s.q0, 3.0);
}

TEST(ParseGameFile, FuzzyPayoffExample) {
  const GameFile f = parse_game_file(Slurp("payoffs2x2.game"));
  const auto& s = std::get<FuzzyPayoffSpec>(f.spec);
  EXPECT_EQ(s.payoff[0][0], TriangularFuzzyNumber(175, 180, 190));
  EXPECT_EQ(s.payoff[1][0], TriangularFuzzyNumber(80, 90, 100));
  EXPECT_EQ(s.q_margin, TriangularFuzzyNumber(0.14, 0.15, 0.17));
}

TEST(ParseGameFile, PossAndIFuzzyExamples) {
  const GameFile pf = parse_game_file(Slurp("poss2x2.game"));
  const auto& poss = std::get<PossSpec>(pf.spec);
  EXPECT_EQ(poss.cuts.levels(), (std::vector<double>{0.0, 1.0}));
  EXPECT_FALSE(poss.weights);
  const GameFile inf = parse_game_file(Slurp("ifuzzy.game"));
  const auto& ifz = std::get<IFuzzyGoalsSpec>(inf.spec);
  EXPECT_EQ(ifz.u0, 4.0);
  EXPECT_EQ(ifz.player1.reject(), 0.5);
  EXPECT_EQ(ifz.player2.accept(), 1.0);
}

TEST(ParseGameFile, CommentsBlankLinesAndCrlf) {
  std::string text = "# leading comment\n\n" + std::string(kGoals) + "\n# trailing\n";
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  EXPECT_EQ(parse_game_file(text), parse_game_file(kGoals));
  EXPECT_EQ(parse_game_file(crlf), parse_game_file(kGoals));
}

TEST(ParseGameFile, KeyOrderIsFree) {
  const std::string moved =
      "q0 1\np0 1\nw0 4\nv0 3\nrows 2\ncols 2\npayoff\n4 2\n3 6\nvariant fuzzy-goals\n";
  EXPECT_EQ(parse_game_file(moved), parse_game_file(kGoals));
}

TEST(ParseGameFile, ErrorsCarryPositions) {
  {
    const Failure f = FailureOf(
        "variant poss\nrows 1\ncols 2\npayoff\n(1, 2, 3) (5, 4, 6)\ncuts 1\n");
    EXPECT_EQ(f.line, 5);
    EXPECT_EQ(f.column, 11);
    EXPECT_NE(f.what.find("lower > center"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf(
        "variant fuzzy-goals\nrows 2\ncols 2\npayoff\n4 2 1\n3 6\nv0 3\nw0 4\np0 1\nq0 1\n");
    EXPECT_EQ(f.line, 5);
    EXPECT_EQ(f.column, 5);
    EXPECT_NE(f.what.find("expected 2 entries, found 3"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf("variant fuzzy-goals\nrows 2\ncols 2\npayoff\n4 2\n3 6\nv0 3\nw0 4\np0 1\n");
    EXPECT_EQ(f.line, 9);
    EXPECT_NE(f.what.find("missing key 'q0'"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf(std::string(kGoals) + "  p0 2\n");
    EXPECT_EQ(f.line, 11);
    EXPECT_EQ(f.column, 3);
    EXPECT_NE(f.what.find("duplicate key 'p0' (first on line 9)"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf(std::string(kGoals) + "colour 2\n");
    EXPECT_EQ(f.line, 11);
    EXPECT_NE(f.what.find("unknown key 'colour'"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf(std::string(kGoals) + "cuts 1\n");
    EXPECT_NE(f.what.find("not used by variant fuzzy-goals"), std::string::npos) << f.what;
  }
  {
    std::string text = kGoals;
    text.replace(text.find("fuzzy-goals"), 11, "fuzzy-games");
    const Failure f = FailureOf(text);
    EXPECT_EQ(f.line, 1);
    EXPECT_EQ(f.column, 9);
    EXPECT_NE(f.what.find("unknown variant"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf("variant fuzzy-goals\npayoff\n4 2\nrows 2\ncols 2\n");
    EXPECT_NE(f.what.find("payoff block before rows/cols"), std::string::npos) << f.what;
  }
  {
    const Failure f = FailureOf("variant fuzzy-goals\nrows 3\ncols 2\npayoff\n4 2\n3 6\n");
    EXPECT_NE(f.what.find("payoff block ends after"), std::string::npos) << f.what;
  }
  {
    std::string text = kGoals;
    text.replace(text.find("3 6"), 3, "3 (5, 6, 7)");
    const Failure f = FailureOf(text);
    EXPECT_EQ(f.line, 6);
    EXPECT_EQ(f.column, 3);
    EXPECT_NE(f.what.find("fuzzy entry in a crisp payoff matrix"), std::string::npos) << f.what;
  }
}

TEST(ParseGameFile, IFuzzyToleranceOrder) {
  std::string text = Slurp("ifuzzy.game");
  text.replace(text.find("q0 1/2"), 6, "q0 1");
  const Failure f = FailureOf(text);
  EXPECT_NE(f.what.find("requires 0 < q0 < p0"), std::string::npos) << f.what;
}

TEST(ParseGameFile, NumbersAndDimensions) {
  std::string text = kGoals;
  text.replace(text.find("v0 3"), 4, "v0 abc");
  EXPECT_NE(FailureOf(text).what.find("invalid number 'abc'"), std::string::npos);
  text = kGoals;
  text.replace(text.find("rows 2"), 6, "rows 1.5");
  EXPECT_NE(FailureOf(text).what.find("dimension must be an integer"), std::string::npos);
  text = kGoals;
  text.replace(text.find("p0 1"), 4, "p0 0");
  EXPECT_NE(FailureOf(text).what.find("p0 must be > 0"), std::string::npos);
  EXPECT_NE(FailureOf("").what.find("missing key"), std::string::npos);
}

TEST(ParseGameFile, PossWeights) {
  std::string text = Slurp("poss2x2.game");
  text += "weights 1 2 3\n";
  const GameFile f = parse_game_file(text);
  const auto& poss = std::get<PossSpec>(f.spec);
  EXPECT_EQ(*poss.weights, (std::vector<double>{1, 2, 3}));
  std::string bad = Slurp("poss2x2.game") + "weights 1 -2 3\n";
  EXPECT_NE(FailureOf(bad).what.find("weights must be > 0"), std::string::npos);
}

TEST(RenderGameFile, SampleGamesRoundTrip) {
  const auto names = GameNames();
  ASSERT_GE(names.size(), 6u);
  for (const std::string& name : names) {
    const GameFile f = parse_game_file(Slurp(name));
    const std::string text = render_game_file(f);
    EXPECT_EQ(parse_game_file(text), f) << name << "\n" << text;
    EXPECT_EQ(render_game_file(parse_game_file(text)), text) << name;
  }
}

TEST(RenderGameFile, RandomSpecsRoundTrip) {
  testing_support::Rng rng(91);
  for (int k = 0; k < 200; ++k) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 5));
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    GameFile f;
    switch (k % 4) {
      case 0: {
        Matrix a(m, std::vector<double>(n));
        for (auto& row : a) for (double& v : row) v = rng.uniform(-100, 100);
        f.spec = FuzzyGoalsSpec{CrispGame(a), rng.uniform(-5, 5), rng.uniform(-5, 5),
                                rng.uniform(0.1, 5), rng.uniform(0.1, 5)};
        break;
      }
      case 1: {
        FuzzyPayoffSpec s{FuzzyMatrix(m), rng.tfn(0, 1), rng.tfn(0, 1)};
        for (auto& row : s.payoff) for (std::size_t j = 0; j < n; ++j) row.push_back(rng.tfn(-50, 50));
        f.spec = s;
        break;
      }
      case 2: {
        PossSpec s;
        s.payoff.assign(m, {});
        for (auto& row : s.payoff) for (std::size_t j = 0; j < n; ++j) row.push_back(rng.tfn(-50, 50));
        s.cuts = CutSet({0.0, rng.uniform(0.01, 0.99), 1.0});
        if (k % 8 == 2) s.weights = std::vector<double>{1.0, 2.5};
        f.spec = s;
        break;
      }
      default: {
        Matrix a(m, std::vector<double>(n));
        for (auto& row : a) for (double& v : row) v = rng.integer(-9, 9);
        const double p = rng.uniform(0.5, 3);
        const double s = rng.uniform(0.5, 3);
        f.spec = IFuzzyGoalsSpec{CrispGame(a), rng.uniform(-5, 5), rng.uniform(-5, 5),
                                 IFuzzyTolerance::pessimistic(p, p * rng.uniform(0.1, 0.9)),
                                 IFuzzyTolerance::pessimistic(s, s * rng.uniform(0.1, 0.9))};
      }
    }
    const std::string text = render_game_file(f);
    EXPECT_EQ(parse_game_file(text), f) << text;
  }
}

TEST(ParseGameFile, MutationsOnlyRaiseParseError) {
  testing_support::Rng rng(92);
  const auto names = GameNames();
  std::vector<std::string> seeds;
  for (const auto& name : names) seeds.push_back(Slurp(name));
  const std::string alphabet = "0123456789 .-+/,()#\n\rabcdefxyz_eE\t";
  int parsed = 0;
  for (int k = 0; k < 10'000; ++k) {
    std::string text = seeds[static_cast<std::size_t>(k) % seeds.size()];
    const int edits = rng.integer(1, 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const auto pos = static_cast<std::size_t>(rng.integer(0, static_cast<int>(text.size()) - 1));
      const char c = alphabet[static_cast<std::size_t>(rng.integer(0, static_cast<int>(alphabet.size()) - 1))];
      switch (rng.integer(0, 3)) {
        case 0: text[pos] = c; break;
        case 1: text.insert(pos, 1, c); break;
        case 2: text.erase(pos, 1); break;
        default: text.erase(pos, static_cast<std::size_t>(rng.integer(1, 20))); break;
      }
    }
    try {
      parse_game_file(text);
      ++parsed;
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1);
      EXPECT_GE(e.column(), 1);
    } catch (const std::exception& e) {
      ADD_FAILURE() << "non-parse exception '" << e.what() << "' for:\n" << text;
    }
  }
  EXPECT_GT(parsed, 0);
}

}  // namespace
}  // namespace fuzzygames::io

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

#include "fuzzygames/io/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace fuzzygames::io {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Game(const std::string& name) { return std::string(FUZZYGAMES_GAMES_DIR) + "/" + name; }

std::string TempFile(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("fuzzygame_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, SolveFuzzyGoals) {
  const Outcome o = Invoke({"solve", Game("goals3x3.game")});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(Contains(o.out, "lambda = 1.0000\n")) << o.out;
  EXPECT_TRUE(Contains(o.out, "eta = 0.3000\n")) << o.out;
  EXPECT_TRUE(o.err.empty());
}

TEST(Cli, SolveInfeasibleExitsOne) {
  const Outcome o = Invoke({"solve", Game("infeasible.game")});
  EXPECT_EQ(o.code, kExitNoSolution);
  EXPECT_TRUE(Contains(o.out, "status=infeasible player=1 reason=")) << o.out;
}

TEST(Cli, Oracle) {
  Outcome o = Invoke({"oracle", Game("crisp2x2.game")});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(Contains(o.out, "value = 3.6000\n")) << o.out;
  EXPECT_TRUE(Contains(o.out, "row_strategy = (0.6000, 0.4000)\n")) << o.out;
  o = Invoke({"--format", "machine", "--precision", "2", "oracle", Game("poss2x2.game")});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(Contains(o.out, "value=161.05\n")) << o.out;
  EXPECT_TRUE(Contains(o.out, "matrix=centers\n")) << o.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"frobnicate"},
                                             {"solve"},
                                             {"--bogus", "solve", Game("goals3x3.game")},
                                             {"--precision", "13", "solve", Game("goals3x3.game")},
                                             {"--format", "xml", "solve", Game("goals3x3.game")},
                                             {"check", Game("goals3x3.game")}}) {
    const Outcome o = Invoke(args);
    EXPECT_EQ(o.code, kExitInputError) << args.size();
    EXPECT_TRUE(Contains(o.err, "fuzzygame:")) << o.err;
    EXPECT_TRUE(Contains(o.err, "Usage:")) << o.err;
    EXPECT_TRUE(o.out.empty());
  }
}

TEST(Cli, Help) {
  const Outcome o = Invoke({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(Contains(o.out, "oracle")) << o.out;
}

TEST(Cli, BadInputFiles) {
  Outcome o = Invoke({"solve", Game("no_such.game")});
  EXPECT_EQ(o.code, kExitInputError);
  EXPECT_TRUE(Contains(o.err, "cannot read")) << o.err;
  const std::string bad = TempFile("bad.game", "variant fuzzy-goals\nrows 2\ncols 2\npayoff\n1 2\n3\n");
  o = Invoke({"solve", bad});
  EXPECT_EQ(o.code, kExitInputError);
  EXPECT_TRUE(Contains(o.err, bad + ": line 6, column 2: expected 2 entries, found 1")) << o.err;
}

TEST(Cli, FormatAndPrecision) {
  Outcome o = Invoke({"--format", "machine", "--precision", "6", "solve", Game("payoffs2x2.game")});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(Contains(o.out, "player1.value=160.906592\n")) << o.out;
  o = Invoke({"solve", Game("payoffs2x2.game"), "--precision", "2"});
  EXPECT_TRUE(Contains(o.out, "V = 160.91\n")) << o.out;
}

TEST(Cli, Weights) {
  Outcome o = Invoke({"--weights", "1,4,1", "solve", Game("poss2x2.game")});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(Contains(o.out, "weights = [1, 4, 1]")) << o.out;
  o = Invoke({"--weights", "1,2", "solve", Game("poss2x2.game")});
  EXPECT_EQ(o.code, kExitInputError);
  EXPECT_TRUE(Contains(o.err, "POSS expects 3 or 4 weights, got 2")) << o.err;
  o = Invoke({"--weights", "1,x", "solve", Game("poss2x2.game")});
  EXPECT_EQ(o.code, kExitInputError);
  o = Invoke({"--weights", "1,1", "solve", Game("goals3x3.game")});
  EXPECT_EQ(o.code, kExitInputError);
  EXPECT_TRUE(Contains(o.err, "only to poss")) << o.err;
}

TEST(Cli, SeedDoesNotChangeTheReport) {
  const Outcome a = Invoke({"--seed", "1", "solve", Game("poss2x2.game")});
  const Outcome b = Invoke({"--seed", "2", "solve", Game("poss2x2.game")});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CheckRoundTrip) {
  for (const char* name : {"goals3x3.game", "payoffs2x2.game", "poss2x2.game", "ifuzzy.game",
                           "infeasible.game"}) {
    for (const char* format : {"text", "machine"}) {
      const Outcome solved = Invoke({"--format", format, "solve", Game(name)});
      const std::string report = TempFile(std::string(name) + "." + format, solved.out);
      const Outcome o = Invoke({"check", Game(name), report});
      EXPECT_EQ(o.code, kExitOk) << name << " " << format << "\n" << o.out;
      EXPECT_EQ(o.out, "report ok\n");
    }
  }
}

TEST(Cli, CheckRejectsTamperedReport) {
  std::string text = Invoke({"solve", Game("goals3x3.game")}).out;
  text.replace(text.find("eta = 0.3000"), 12, "eta = 0.4000");
  const Outcome o = Invoke({"check", Game("goals3x3.game"), TempFile("tampered", text)});
  EXPECT_EQ(o.code, kExitNoSolution);
  EXPECT_TRUE(Contains(o.out, "problem: player2.eta: 0.4000, expected 0.3000\n")) << o.out;
  EXPECT_TRUE(Contains(o.out, "report rejected\n"));
}

}  // namespace
}  // namespace fuzzygames::io

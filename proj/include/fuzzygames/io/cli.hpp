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

// The fuzzygame command line:
//
//   fuzzygame solve <file>            solve the game, print a report
//   fuzzygame oracle <file>           crisp value of the underlying matrix
//   fuzzygame check <file> <report>   re-verify a report
//
// Exit codes: 0 success, 1 infeasible/unbounded (solve) or rejected report
// (check), 2 input error.

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzygames/errors.hpp"
#include "fuzzygames/games/game.hpp"
#include "fuzzygames/io/game_file.hpp"
#include "fuzzygames/io/report.hpp"

namespace fuzzygames::io {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 1;
inline constexpr int kExitInputError = 2;

namespace detail {

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve zero-sum matrix games with fuzzy goals, fuzzy payoffs or I-fuzzy goals.",
               "fuzzygame"};
  app.require_subcommand(1);

  std::string weights_text;
  int precision = 4;
  std::string format = "text";
  std::uint64_t seed = SolveOptions{}.seed;
  app.add_option("--weights", weights_text, "POSS objective weights, comma separated");
  app.add_option("--precision", precision, "decimals in reports")
      ->check(CLI::Range(0, kMaxPrecision));
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", seed, "seed for the sampled non-dominance check");

  std::string game_path;
  std::string report_path;
  CLI::App* solve = app.add_subcommand("solve", "solve a game file and print a report");
  solve->add_option("file", game_path, "game file")->required();
  CLI::App* oracle = app.add_subcommand("oracle", "print the crisp value of the game's matrix");
  oracle->add_option("file", game_path, "game file")->required();
  CLI::App* check = app.add_subcommand("check", "re-verify a report against a game file");
  check->add_option("file", game_path, "game file")->required();
  check->add_option("report", report_path, "report file")->required();
  for (CLI::App* sub : {solve, oracle, check}) sub->fallthrough();

  std::vector<std::string> argv_storage = {"fuzzygame"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "fuzzygame: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  const auto text = detail::read_file(game_path);
  if (!text) {
    err << "fuzzygame: cannot read '" << game_path << "'\n";
    return kExitInputError;
  }
  GameFile file;
  try {
    file = parse_game_file(*text);
  } catch (const ParseError& e) {
    err << game_path << ": " << e.what() << "\n";
    return kExitInputError;
  }

  SolveOptions options;
  options.seed = seed;
  if (!weights_text.empty()) {
    const auto w = detail::number_list(weights_text);
    if (!w) {
      err << "fuzzygame: --weights expects comma-separated numbers\n";
      return kExitInputError;
    }
    auto* poss = std::get_if<PossSpec>(&file.spec);
    if (!poss) {
      err << "fuzzygame: --weights applies only to poss games\n";
      return kExitInputError;
    }
    poss->weights = *w;
  }
  RenderOptions render;
  render.precision = precision;
  render.format = format == "machine" ? ReportFormat::kMachine : ReportFormat::kText;
  const bool machine = render.format == ReportFormat::kMachine;

  try {
    if (*oracle) {
      const CrispValue v = crisp_value(oracle_game(file.spec), options.simplex);
      const std::string sep = machine ? "=" : " = ";
      auto list = [&](const MixedStrategy& s) {
        const std::string joined = detail::join(round_strategy(s.probabilities(), precision), machine ? "," : ", ");
        return machine ? joined : "(" + joined + ")";
      };
      out << "value" << sep << fixed(v.value, precision) << "\n";
      out << "row_strategy" << sep << list(v.row_strategy) << "\n";
      out << "column_strategy" << sep << list(v.column_strategy) << "\n";
      if (file.variant() == GameVariant::kFuzzyPayoffs) out << "matrix" << sep << "defuzzified\n";
      if (file.variant() == GameVariant::kPoss) out << "matrix" << sep << "centers\n";
      return kExitOk;
    }
    if (*solve) {
      const GameSolution solution = solve_game(file.spec, options);
      out << render_report(file, solution, render);
      return solution.all_optimal() ? kExitOk : kExitNoSolution;
    }
    const auto report = detail::read_file(report_path);
    if (!report) {
      err << "fuzzygame: cannot read '" << report_path << "'\n";
      return kExitInputError;
    }
    const CheckResult result = check_report(file, *report, options);
    for (const std::string& p : result.problems) out << "problem: " << p << "\n";
    out << (result.ok() ? "report ok\n" : "report rejected\n");
    return result.ok() ? kExitOk : kExitNoSolution;
  } catch (const ContractError& e) {
    err << "fuzzygame: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "fuzzygame: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ModelError& e) {
    err << "fuzzygame: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace fuzzygames::io

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

// Solution reports, in two renderings of the same ordered entry list:
//
//   text     [section] headers and "key = value" lines
//   machine  "section.key=value", one per line, comma-separated lists
//
// Both can be read back with parse_report and re-verified with
// check_report.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzygames/games/game.hpp"
#include "fuzzygames/io/game_file.hpp"
#include "fuzzygames/io/numbers.hpp"
#include "fuzzygames/lp/simplex.hpp"

namespace fuzzygames::io {

enum class ReportFormat { kText, kMachine };

struct RenderOptions {
  int precision = 4;
  ReportFormat format = ReportFormat::kText;
};

inline constexpr int kMaxPrecision = 12;

// Rounds a probability vector to `precision` decimals so the printed
// components add up to exactly one (largest remainder method).
inline std::vector<std::string> round_strategy(const std::vector<double>& p, int precision) {
  const auto units = static_cast<std::int64_t>(std::llround(std::pow(10.0, precision)));
  std::vector<std::int64_t> k(p.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double scaled = std::max(0.0, p[i]) * static_cast<double>(units);
    k[i] = static_cast<std::int64_t>(std::floor(scaled));
    total += k[i];
    remainders.push_back({scaled - static_cast<double>(k[i]), i});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; total < units && r < remainders.size(); ++r, ++total) {
    ++k[remainders[r].second];
  }
  for (std::size_t r = remainders.size(); total > units && r-- > 0;) {
    if (k[remainders[r].second] > 0) {
      --k[remainders[r].second];
      --total;
    }
  }
  std::vector<std::string> out;
  for (std::int64_t v : k) {
    std::string s = std::to_string(v / units);
    if (precision > 0) {
      std::string frac = std::to_string(v % units);
      s += "." + std::string(static_cast<std::size_t>(precision) - frac.size(), '0') + frac;
    }
    out.push_back(s);
  }
  return out;
}

struct ReportEntry {
  std::string section;  // empty for top-level keys
  std::string key;
  std::string label;  // key as shown in text form
  std::vector<std::string> parts;
  char open = 0;  // '(' or '[' wraps the parts in text form
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

inline std::string text_value(const ReportEntry& e) {
  if (!e.open) return join(e.parts, " ");
  const char close = e.open == '(' ? ')' : ']';
  return std::string(1, e.open) + join(e.parts, ", ") + close;
}

inline std::string machine_key(const ReportEntry& e) {
  return e.section.empty() ? e.key : e.section + "." + e.key;
}

}  // namespace detail

// Builds the ordered entries of a report. Each reported strategy is checked
// against its player's LP before it is listed; a failure shows up as
// "verified = no" plus a warning.
inline std::vector<ReportEntry> report_entries(const GameFile& file, const GameSolution& sol,
                                               const RenderOptions& options = {}) {
  const int p = std::clamp(options.precision, 0, kMaxPrecision);
  std::vector<ReportEntry> out;
  std::vector<std::string> warnings = sol.warnings;
  std::string section;

  auto add = [&](std::string key, std::vector<std::string> parts, char open = 0, std::string label = {}) {
    if (label.empty()) label = key;
    out.push_back({section, std::move(key), std::move(label), std::move(parts), open});
  };
  auto num = [&](const std::string& key, double v) {
    const std::string shown = fixed(v, p);
    if (std::fabs(*parse_number(shown) - v) > 0.5e-6) {
      warnings.push_back((section.empty() ? "" : section + ".") + key + " = " + fixed(v, 6) +
                         " is shown rounded to " + shown);
    }
    return shown;
  };

  add("variant", {to_string(sol.variant)});
  add("status", {sol.all_optimal() ? "optimal" : lp::to_string(sol.overall_status())});
  add("precision", {std::to_string(p)});

  section = "input";
  const auto [m, n] = dimensions(file);
  add("rows", {std::to_string(m)});
  add("cols", {std::to_string(n)});
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        auto tfn = [](const TriangularFuzzyNumber& x) {
          return std::vector<std::string>{exact(x.lower()), exact(x.center()), exact(x.upper())};
        };
        auto list = [](const std::vector<double>& v) {
          std::vector<std::string> parts;
          for (double x : v) parts.push_back(exact(x));
          return parts;
        };
        if constexpr (std::is_same_v<T, FuzzyGoalsSpec>) {
          add("v0", {exact(s.v0)});
          add("w0", {exact(s.w0)});
          add("p0", {exact(s.p0)});
          add("q0", {exact(s.q0)});
        } else if constexpr (std::is_same_v<T, FuzzyPayoffSpec>) {
          add("p_margin", tfn(s.p_margin), '(');
          add("q_margin", tfn(s.q_margin), '(');
        } else if constexpr (std::is_same_v<T, PossSpec>) {
          add("cuts", list(s.cuts.levels()), '[');
          if (s.weights) add("weights", list(*s.weights), '[');
        } else {
          add("U0", {exact(s.u0)});
          add("V0", {exact(s.v0)});
          add("p0", {exact(s.player1.accept())});
          add("q0", {exact(s.player1.reject())});
          add("s0", {exact(s.player2.accept())});
          add("t0", {exact(s.player2.reject())});
        }
      },
      file.spec);

  std::vector<std::string> diagnostics;
  for (int player : {1, 2}) {
    const PlayerSolution& ps = player == 1 ? sol.player1 : sol.player2;
    section = "player" + std::to_string(player);
    add("status", {lp::to_string(ps.status)});
    if (ps.optimal()) {
      add("strategy", round_strategy(ps.strategy.probabilities(), p), '(');
      for (const Level& l : ps.levels) add(l.name, {num(l.name, l.value)});
      if (ps.value) {
        const bool payoffs = sol.variant == GameVariant::kFuzzyPayoffs;
        const std::string label = payoffs ? (player == 1 ? "V" : "W") : "value";
        add("value", {num(label, *ps.value)}, 0, label);
      }
      for (std::size_t k = 0; k < ps.security.size(); ++k) {
        const std::string key = "security." + std::to_string(k + 1);
        add(key, {fixed(ps.security[k].lo, p), fixed(ps.security[k].hi, p)}, '[');
      }
      if (ps.fuzzy_value) {
        const TriangularFuzzyNumber& v = *ps.fuzzy_value;
        add("fuzzy_value", {fixed(v.lower(), p), fixed(v.center(), p), fixed(v.upper(), p)}, '(');
        add("spreads", {fixed(v.center(), p), fixed(v.left_spread(), p), fixed(v.right_spread(), p)}, '(');
      }
      for (std::size_t k = 0; k < ps.constraint_pairs.size(); ++k) {
        const IFuzzyPair& q = ps.constraint_pairs[k];
        add("pair." + std::to_string(k + 1), {fixed(q.membership(), p), fixed(q.non_membership(), p)}, '(');
      }
      if (ps.decision) {
        add("decision", {fixed(ps.decision->membership(), p), fixed(ps.decision->non_membership(), p)}, '(');
        add("score", {fixed(score(*ps.decision), p)});
      }
      const PlayerProgram program = player_program(file.spec, player, ps);
      const bool verified = lp::check_feasible(program.model, program.assignment, 1e-7).feasible();
      if (!verified) warnings.push_back(section + " strategy failed re-verification against its LP");
      add("verified", {verified ? "yes" : "no"});
    }
    add("pivots", {std::to_string(ps.pivots)});
    if (ps.diagnosis) {
      add("reason", {ps.diagnosis->reason});
      add("oracle_value", {fixed(ps.diagnosis->oracle_value, p)});
      add("bound", {fixed(ps.diagnosis->bound, p)});
    }
    if (!ps.optimal()) {
      std::string line = std::string("status=") + lp::to_string(ps.status) + " player=" + std::to_string(player);
      if (ps.diagnosis) line += " reason=" + ps.diagnosis->reason;
      diagnostics.push_back(line);
    }
  }

  section = "oracle";
  add("value", {num("value", sol.oracle.value)});
  add("agrees", {sol.oracle.agrees ? "yes" : "no"});
  if (!sol.oracle.detail.empty()) add("detail", {sol.oracle.detail});

  section = "warnings";
  for (std::size_t k = 0; k < warnings.size(); ++k) add(std::to_string(k + 1), {warnings[k]});
  section = "diagnostics";
  for (std::size_t k = 0; k < diagnostics.size(); ++k) add(std::to_string(k + 1), {diagnostics[k]});
  return out;
}

inline std::string render_report(const GameFile& file, const GameSolution& sol,
                                  const RenderOptions& options = {}) {
  const std::vector<ReportEntry> entries = report_entries(file, sol, options);
  std::string out;
  if (options.format == ReportFormat::kMachine) {
    for (const ReportEntry& e : entries) out += detail::machine_key(e) + "=" + detail::join(e.parts, ",") + "\n";
    return out;
  }
  std::string section;
  for (const ReportEntry& e : entries) {
    if (e.section != section) {
      section = e.section;
      out += "\n[" + section + "]\n";
    }
    if (section == "diagnostics") {
      out += e.parts.front() + "\n";
    } else {
      out += e.label + " = " + detail::text_value(e) + "\n";
    }
  }
  return out;
}

// Flattened "section.key" -> machine-form value, from either rendering.
using ParsedReport = std::map<std::string, std::string, std::less<>>;

inline ParsedReport parse_report(std::string_view text) {
  ParsedReport out;
  std::string section;
  int diagnostic = 0;
  for (const detail::Line& line : detail::split_lines(text)) {
    std::string_view s = line.text;
    const std::size_t a = detail::skip_space(s, 0);
    if (a == s.size()) continue;
    std::size_t b = s.size();
    while (b > a && detail::is_space(s[b - 1])) --b;
    s = s.substr(a, b - a);
    if (s.front() == '[' && s.back() == ']') {
      section = std::string(s.substr(1, s.size() - 2));
      continue;
    }
    if (section == "diagnostics") {
      out["diagnostics." + std::to_string(++diagnostic)] = std::string(s);
      continue;
    }
    // Machine keys never contain spaces, but machine values may contain " = ".
    if (section.empty()) {
      const std::size_t eq = s.find('=');
      if (eq == std::string_view::npos) throw ParseError(line.number, 1, "expected key=value");
      if (eq == 0 || s[eq - 1] != ' ') {
        out[std::string(s.substr(0, eq))] = std::string(s.substr(eq + 1));
        continue;
      }
    }
    const std::size_t spaced = s.find(" = ");
    if (spaced == std::string_view::npos) throw ParseError(line.number, 1, "expected 'key = value'");
    std::string key(s.substr(0, spaced));
    std::string value(s.substr(spaced + 3));
    if ((key == "V" || key == "W") && section.rfind("player", 0) == 0) key = "value";
    if (!value.empty() && (value.front() == '(' || value.front() == '[') &&
        (value.back() == ')' || value.back() == ']')) {
      value = value.substr(1, value.size() - 2);
      std::string compact;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i] == ' ' && i > 0 && value[i - 1] == ',') continue;
        compact += value[i];
      }
      value = compact;
    }
    out[section.empty() ? key : section + "." + key] = value;
  }
  return out;
}

struct CheckResult {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

namespace detail {

inline std::optional<std::vector<double>> number_list(std::string_view s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    const auto v = parse_number(s.substr(start, comma - start));
    if (!v) return std::nullopt;
    out.push_back(*v);
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

// Re-solves the game and checks a report against it: statuses must match,
// reported strategies must be probability vectors satisfying their LP
// constraints (within what rounding to the report's precision can explain),
// and reported levels and values must match the re-solved ones.
inline CheckResult check_report(const GameFile& file, std::string_view report_text,
                                const SolveOptions& options = {}) {
  CheckResult result;
  auto problem = [&](std::string s) { result.problems.push_back(std::move(s)); };
  ParsedReport report;
  try {
    report = parse_report(report_text);
  } catch (const ParseError& e) {
    problem(std::string("report: ") + e.what());
    return result;
  }
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = report.find(key);
    if (it == report.end()) return std::nullopt;
    return it->second;
  };
  auto get_number = [&](const std::string& key) -> std::optional<double> {
    const auto v = get(key);
    return v ? parse_number(*v) : std::nullopt;
  };

  int precision = 4;
  if (const auto v = get_number("precision"); v && *v >= 0 && *v <= kMaxPrecision) {
    precision = static_cast<int>(*v);
  }
  const double unit = std::pow(10.0, -precision);
  auto close = [&](double a, double b) { return std::fabs(a - b) <= unit + 1e-9 * std::max(1.0, std::fabs(b)); };

  if (const auto v = get("variant"); !v || *v != to_string(file.variant())) {
    problem("variant: report says '" + v.value_or("") + "', game file is " + to_string(file.variant()));
    return result;
  }

  GameFile effective = file;
  SolveOptions opts = options;
  if (auto* poss = std::get_if<PossSpec>(&effective.spec)) {
    if (const auto w = get("input.weights")) {
      const auto list = detail::number_list(*w);
      if (!list) {
        problem("input.weights: not a number list");
        return result;
      }
      opts.weights = *list;
    }
    if (opts.weights) poss->weights = opts.weights;
  }

  GameSolution expected;
  try {
    expected = solve_game(effective.spec, opts);
  } catch (const std::exception& e) {
    problem(std::string("re-solve failed: ") + e.what());
    return result;
  }

  const std::string overall = expected.all_optimal() ? "optimal" : lp::to_string(expected.overall_status());
  if (get("status") != overall) problem("status: report says '" + get("status").value_or("") + "', expected " + overall);

  const auto [m, n] = dimensions(effective);
  for (int player : {1, 2}) {
    const PlayerSolution& want = player == 1 ? expected.player1 : expected.player2;
    const std::string prefix = "player" + std::to_string(player) + ".";
    const auto status = get(prefix + "status");
    if (status != lp::to_string(want.status)) {
      problem(prefix + "status: report says '" + status.value_or("") + "', expected " +
              lp::to_string(want.status));
      continue;
    }
    if (!want.optimal()) continue;

    const auto strategy = get(prefix + "strategy") ? detail::number_list(*get(prefix + "strategy")) : std::nullopt;
    const std::size_t size = player == 1 ? m : n;
    if (!strategy || strategy->size() != size) {
      problem(prefix + "strategy: missing or not " + std::to_string(size) + " numbers");
      continue;
    }
    double sum = 0.0;
    bool nonnegative = true;
    for (double v : *strategy) {
      sum += v;
      nonnegative = nonnegative && v >= -1e-12;
    }
    if (!nonnegative || std::fabs(sum - 1.0) > unit * static_cast<double>(size) + 1e-9) {
      problem(prefix + "strategy: not a probability vector");
      continue;
    }

    PlayerSolution reported;
    reported.status = want.status;
    std::vector<double> normalized = *strategy;
    for (double& v : normalized) v = std::max(0.0, v) / sum;
    reported.strategy = MixedStrategy(normalized);
    for (const Level& l : want.levels) {
      const auto v = get_number(prefix + l.name);
      if (!v) {
        problem(prefix + l.name + ": missing");
        continue;
      }
      reported.levels.push_back({l.name, *v});
      if (!close(*v, l.value)) problem(prefix + l.name + ": " + fixed(*v, precision) + ", expected " + fixed(l.value, precision));
    }
    if (want.value) {
      const auto v = get_number(prefix + "value");
      if (!v) {
        problem(prefix + "value: missing");
      } else {
        reported.value = *v;
        if (!close(*v, *want.value)) {
          problem(prefix + "value: " + fixed(*v, precision) + ", expected " + fixed(*want.value, precision));
        }
      }
    }
    for (std::size_t k = 0; k < want.security.size(); ++k) {
      const std::string key = prefix + "security." + std::to_string(k + 1);
      const auto iv = get(key) ? detail::number_list(*get(key)) : std::nullopt;
      if (!iv || iv->size() != 2) {
        problem(key + ": missing or malformed");
        continue;
      }
      reported.security.push_back({(*iv)[0], (*iv)[1]});
      if (!close((*iv)[0], want.security[k].lo) || !close((*iv)[1], want.security[k].hi)) {
        problem(key + ": does not match the re-solved security level");
      }
    }

    // Rounding each assignment entry by half a unit moves a row by at most
    // half a unit times the row's absolute coefficient sum.
    const PlayerProgram program = player_program(effective.spec, player, reported);
    double widest = 1.0;
    for (const lp::Constraint& c : program.model.constraints()) {
      double s = 0.0;
      for (double a : c.coefficients) s += std::fabs(a);
      widest = std::max(widest, s);
    }
    const lp::FeasibilityReport feas = lp::check_feasible(program.model, program.assignment, unit * widest + 1e-9);
    for (const lp::Violation& v : feas.violations) {
      problem(prefix + "strategy violates " + v.what + " by " + fixed(v.amount, 9));
    }
  }

  if (const auto v = get_number("oracle.value"); !v || !close(*v, expected.oracle.value)) {
    problem("oracle.value: expected " + fixed(expected.oracle.value, precision));
  }
  return result;
}

}  // namespace fuzzygames::io

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

// Plain-text game description files.
//
//   # comment
//   variant fuzzy-payoffs        # fuzzy-goals | fuzzy-payoffs | poss | ifuzzy-goals
//   rows 2
//   cols 2
//   payoff                       # followed by `rows` lines of `cols` entries
//   (175, 180, 190) (150, 156, 158)
//   (80, 90, 100)   (175, 180, 190)
//   p_margin (0.08, 0.10, 0.11)
//   q_margin (0.14, 0.15, 0.17)
//
// Numbers are decimal or fractions ("5/3"). Crisp variants take plain
// numbers; fuzzy variants take parenthesized triples (a plain number c is
// read as (c, c, c)). Parameters per variant:
//   fuzzy-goals    v0 w0 p0 q0
//   fuzzy-payoffs  p_margin q_margin
//   poss           cuts [weights]
//   ifuzzy-goals   U0 V0 p0 q0 s0 t0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzygames/errors.hpp"
#include "fuzzygames/games/game.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/io/numbers.hpp"

namespace fuzzygames::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct GameFile {
  GameSpec spec;

  GameVariant variant() const { return static_cast<GameVariant>(spec.index()); }

  friend bool operator==(const GameFile&, const GameFile&) = default;
};

inline constexpr std::size_t kMaxDimension = 1000;

namespace detail {

struct Line {
  int number = 0;
  std::string_view text;  // comment stripped, CR stripped
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    const auto hash = l.find('#');
    if (hash != std::string_view::npos) l = l.substr(0, hash);
    lines.push_back({++number, l});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r'; }

inline std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

inline bool blank(std::string_view s) { return skip_space(s, 0) == s.size(); }

struct Cell {
  bool fuzzy = false;
  double v[3] = {0.0, 0.0, 0.0};
  int column = 1;
};

inline double number_at(std::string_view token, int line, int column) {
  const auto v = parse_number(token);
  if (!v) throw ParseError(line, column, "invalid number '" + std::string(token) + "'");
  return *v;
}

// Parses one "(a, b, c)" starting at s[i] == '('; advances i past ')'.
inline Cell parse_triple(std::string_view s, std::size_t& i, int line) {
  Cell cell;
  cell.fuzzy = true;
  cell.column = static_cast<int>(i) + 1;
  const std::size_t close = s.find(')', i);
  if (close == std::string_view::npos) throw ParseError(line, cell.column, "unterminated '('");
  std::string_view inner = s.substr(i + 1, close - i - 1);
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = k < 2 ? inner.find(',', pos) : inner.size();
    if (comma == std::string_view::npos) {
      throw ParseError(line, cell.column, "fuzzy triple needs three comma-separated numbers");
    }
    std::size_t a = skip_space(inner, pos);
    std::size_t b = comma;
    while (b > a && is_space(inner[b - 1])) --b;
    const int col = static_cast<int>(i + 1 + a) + 1;
    cell.v[k] = number_at(inner.substr(a, b - a), line, col);
    pos = comma + 1;
  }
  i = close + 1;
  return cell;
}

inline std::vector<Cell> parse_cells(std::string_view s, int line, std::size_t start = 0) {
  std::vector<Cell> cells;
  std::size_t i = skip_space(s, start);
  while (i < s.size()) {
    if (s[i] == '(') {
      cells.push_back(parse_triple(s, i, line));
    } else {
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j]) && s[j] != '(') ++j;
      Cell c;
      c.column = static_cast<int>(i) + 1;
      const double v = number_at(s.substr(i, j - i), line, c.column);
      c.v[0] = c.v[1] = c.v[2] = v;
      cells.push_back(c);
      i = j;
    }
    i = skip_space(s, i);
  }
  return cells;
}

struct Entry {
  int line = 0;
  int key_column = 1;
  int value_column = 1;
  std::string_view value;
};

inline TriangularFuzzyNumber to_tfn(const Cell& c, int line) {
  try {
    return TriangularFuzzyNumber(c.v[0], c.v[1], c.v[2]);
  } catch (const DomainError& e) {
    std::string what = e.what();
    const auto colon = what.find(": ");
    throw ParseError(line, c.column, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

}  // namespace detail

inline std::optional<GameVariant> variant_from_string(std::string_view s) {
  for (GameVariant v : {GameVariant::kFuzzyGoals, GameVariant::kFuzzyPayoffs, GameVariant::kPoss,
                        GameVariant::kIFuzzyGoals}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

inline GameFile parse_game_file(std::string_view text) {
  using detail::Cell;
  using detail::Entry;
  const std::vector<detail::Line> lines = detail::split_lines(text);

  std::map<std::string, Entry, std::less<>> entries;
  std::vector<std::vector<Cell>> cells;
  int payoff_line = 0;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;

  auto dimension = [](const Entry& e) {
    const auto v = parse_number(e.value);
    if (!v || *v != std::floor(*v) || *v < 1 || *v > static_cast<double>(kMaxDimension)) {
      throw ParseError(e.line, e.value_column,
                       "dimension must be an integer in [1, " + std::to_string(kMaxDimension) + "]");
    }
    return static_cast<std::size_t>(*v);
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const detail::Line& line = lines[li];
    const std::string_view s = line.text;
    std::size_t k0 = detail::skip_space(s, 0);
    if (k0 == s.size()) continue;
    std::size_t k1 = k0;
    while (k1 < s.size() && !detail::is_space(s[k1])) ++k1;
    const std::string key(s.substr(k0, k1 - k0));
    const std::size_t v0 = detail::skip_space(s, k1);
    std::size_t v1 = s.size();
    while (v1 > v0 && detail::is_space(s[v1 - 1])) --v1;
    Entry e{line.number, static_cast<int>(k0) + 1, static_cast<int>(v0) + 1, s.substr(v0, v1 - v0)};

    static const std::set<std::string, std::less<>> kKnown = {
        "variant", "rows", "cols", "payoff", "v0", "w0", "p0", "q0", "p_margin",
        "q_margin", "cuts", "weights", "U0", "V0", "s0", "t0"};
    if (!kKnown.contains(key)) throw ParseError(e.line, e.key_column, "unknown key '" + key + "'");
    if (entries.contains(key)) {
      throw ParseError(e.line, e.key_column,
                       "duplicate key '" + key + "' (first on line " +
                           std::to_string(entries.at(key).line) + ")");
    }
    entries.emplace(key, e);

    if (key == "rows") rows = dimension(e);
    if (key == "cols") cols = dimension(e);
    if (key == "payoff") {
      if (!e.value.empty()) throw ParseError(e.line, e.value_column, "payoff takes no value; rows follow");
      if (!rows || !cols) throw ParseError(e.line, e.key_column, "payoff block before rows/cols");
      payoff_line = e.line;
      while (cells.size() < *rows) {
        if (++li >= lines.size()) {
          throw ParseError(line.number, 1, "payoff block ends after " + std::to_string(cells.size()) +
                                               " of " + std::to_string(*rows) + " rows");
        }
        const detail::Line& row_line = lines[li];
        if (detail::blank(row_line.text)) continue;
        std::vector<Cell> row = detail::parse_cells(row_line.text, row_line.number);
        if (row.size() != *cols) {
          const int col = row.size() > *cols ? row[*cols].column : static_cast<int>(row_line.text.size()) + 1;
          throw ParseError(row_line.number, col,
                           "expected " + std::to_string(*cols) + " entries, found " + std::to_string(row.size()));
        }
        cells.push_back(std::move(row));
      }
    }
  }

  int eof_line = 1;
  for (const detail::Line& l : lines) {
    if (!detail::blank(l.text)) eof_line = l.number;
  }
  auto need = [&](const char* key) -> const Entry& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ParseError(eof_line, 1, std::string("missing key '") + key + "'");
    return it->second;
  };
  auto scalar = [&](const char* key) {
    const Entry& e = need(key);
    if (e.value.empty()) throw ParseError(e.line, e.value_column, std::string(key) + " needs a value");
    return detail::number_at(e.value, e.line, e.value_column);
  };
  auto positive = [&](const char* key) {
    const double v = scalar(key);
    if (!(v > 0.0)) throw ParseError(need(key).line, need(key).value_column, std::string(key) + " must be > 0");
    return v;
  };
  auto triple = [&](const char* key) {
    const Entry& e = need(key);
    std::vector<Cell> c = detail::parse_cells(e.value, e.line);
    for (Cell& cell : c) cell.column += e.value_column - 1;
    if (c.size() != 1 || !c[0].fuzzy) {
      throw ParseError(e.line, e.value_column, std::string(key) + " must be a triple (l, c, u)");
    }
    return detail::to_tfn(c[0], e.line);
  };
  auto list = [&](const Entry& e) {
    std::vector<double> out;
    std::string normalized(e.value);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    for (const Cell& c : detail::parse_cells(normalized, e.line)) {
      if (c.fuzzy) throw ParseError(e.line, e.value_column + c.column - 1, "expected a plain number");
      out.push_back(c.v[0]);
    }
    if (out.empty()) throw ParseError(e.line, e.value_column, "expected at least one number");
    return out;
  };

  const Entry& ve = need("variant");
  const auto variant = variant_from_string(ve.value);
  if (!variant) throw ParseError(ve.line, ve.value_column, "unknown variant '" + std::string(ve.value) + "'");
  need("rows");
  need("cols");
  if (!payoff_line) need("payoff");

  std::set<std::string, std::less<>> allowed = {"variant", "rows", "cols", "payoff"};
  switch (*variant) {
    case GameVariant::kFuzzyGoals: allowed.insert({"v0", "w0", "p0", "q0"}); break;
    case GameVariant::kFuzzyPayoffs: allowed.insert({"p_margin", "q_margin"}); break;
    case GameVariant::kPoss: allowed.insert({"cuts", "weights"}); break;
    case GameVariant::kIFuzzyGoals: allowed.insert({"U0", "V0", "p0", "q0", "s0", "t0"}); break;
  }
  for (const auto& [key, e] : entries) {
    if (!allowed.contains(key)) {
      throw ParseError(e.line, e.key_column,
                       "key '" + key + "' is not used by variant " + to_string(*variant));
    }
  }

  const bool crisp = *variant == GameVariant::kFuzzyGoals || *variant == GameVariant::kIFuzzyGoals;
  Matrix crisp_payoff;
  FuzzyMatrix fuzzy_payoff;
  {
    // Row lines follow the payoff line; recover each row's line number.
    std::size_t r = 0;
    for (const detail::Line& l : lines) {
      if (l.number <= payoff_line || detail::blank(l.text)) continue;
      if (r == cells.size()) break;
      const auto& row = cells[r++];
      if (crisp) {
        std::vector<double> out;
        for (const Cell& c : row) {
          if (c.fuzzy) throw ParseError(l.number, c.column, "fuzzy entry in a crisp payoff matrix");
          out.push_back(c.v[0]);
        }
        crisp_payoff.push_back(std::move(out));
      } else {
        std::vector<TriangularFuzzyNumber> out;
        for (const Cell& c : row) out.push_back(detail::to_tfn(c, l.number));
        fuzzy_payoff.push_back(std::move(out));
      }
    }
  }

  GameFile file;
  switch (*variant) {
    case GameVariant::kFuzzyGoals: {
      FuzzyGoalsSpec s;
      s.game = CrispGame(std::move(crisp_payoff));
      s.v0 = scalar("v0");
      s.w0 = scalar("w0");
      s.p0 = positive("p0");
      s.q0 = positive("q0");
      file.spec = std::move(s);
      break;
    }
    case GameVariant::kFuzzyPayoffs: {
      FuzzyPayoffSpec s;
      s.payoff = std::move(fuzzy_payoff);
      s.p_margin = triple("p_margin");
      s.q_margin = triple("q_margin");
      file.spec = std::move(s);
      break;
    }
    case GameVariant::kPoss: {
      PossSpec s;
      s.payoff = std::move(fuzzy_payoff);
      const Entry& ce = need("cuts");
      try {
        s.cuts = CutSet(list(ce));
      } catch (const DomainError& e) {
        throw ParseError(ce.line, ce.value_column, e.what());
      }
      if (const auto it = entries.find("weights"); it != entries.end()) {
        s.weights = list(it->second);
        for (double w : *s.weights) {
          if (!(w > 0.0)) throw ParseError(it->second.line, it->second.value_column, "weights must be > 0");
        }
      }
      file.spec = std::move(s);
      break;
    }
    case GameVariant::kIFuzzyGoals: {
      const double u0 = scalar("U0");
      const double v0 = scalar("V0");
      const double p0 = positive("p0");
      const double q0 = positive("q0");
      const double s0 = positive("s0");
      const double t0 = positive("t0");
      if (!(q0 < p0)) throw ParseError(need("q0").line, need("q0").value_column, "requires 0 < q0 < p0");
      if (!(t0 < s0)) throw ParseError(need("t0").line, need("t0").value_column, "requires 0 < t0 < s0");
      file.spec = IFuzzyGoalsSpec{CrispGame(std::move(crisp_payoff)), u0, v0,
                                  IFuzzyTolerance::pessimistic(p0, q0),
                                  IFuzzyTolerance::pessimistic(s0, t0)};
      break;
    }
  }
  return file;
}

inline std::pair<std::size_t, std::size_t> dimensions(const GameFile& file) {
  return std::visit(
      [](const auto& s) -> std::pair<std::size_t, std::size_t> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FuzzyGoalsSpec> || std::is_same_v<T, IFuzzyGoalsSpec>) {
          return {s.game.rows(), s.game.cols()};
        } else {
          return {s.rows(), s.cols()};
        }
      },
      file.spec);
}

inline std::string render_triple(const TriangularFuzzyNumber& x) {
  return "(" + exact(x.lower()) + ", " + exact(x.center()) + ", " + exact(x.upper()) + ")";
}

// Canonical text form; parse_game_file(render_game_file(f)) == f.
inline std::string render_game_file(const GameFile& file) {
  const auto [m, n] = dimensions(file);
  std::string out = "variant " + std::string(to_string(file.variant())) + "\n";
  out += "rows " + std::to_string(m) + "\ncols " + std::to_string(n) + "\npayoff\n";
  auto crisp_rows = [&](const CrispGame& g) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) out += (j ? " " : "") + exact(g.at(i, j));
      out += "\n";
    }
  };
  auto fuzzy_rows = [&](const FuzzyMatrix& a) {
    for (const auto& row : a) {
      for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + render_triple(row[j]);
      out += "\n";
    }
  };
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + exact(v[i]);
    return s;
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FuzzyGoalsSpec>) {
          crisp_rows(s.game);
          out += "v0 " + exact(s.v0) + "\nw0 " + exact(s.w0) + "\np0 " + exact(s.p0) + "\nq0 " +
                 exact(s.q0) + "\n";
        } else if constexpr (std::is_same_v<T, FuzzyPayoffSpec>) {
          fuzzy_rows(s.payoff);
          out += "p_margin " + render_triple(s.p_margin) + "\nq_margin " + render_triple(s.q_margin) + "\n";
        } else if constexpr (std::is_same_v<T, PossSpec>) {
          fuzzy_rows(s.payoff);
          out += "cuts " + list(s.cuts.levels()) + "\n";
          if (s.weights) out += "weights " + list(*s.weights) + "\n";
        } else {
          crisp_rows(s.game);
          out += "U0 " + exact(s.u0) + "\nV0 " + exact(s.v0) + "\np0 " + exact(s.player1.accept()) +
                 "\nq0 " + exact(s.player1.reject()) + "\ns0 " + exact(s.player2.accept()) + "\nt0 " +
                 exact(s.player2.reject()) + "\n";
        }
      },
      file.spec);
  return out;
}

}  // namespace fuzzygames::io

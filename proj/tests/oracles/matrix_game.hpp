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

// Matrix-game values computed without the simplex solver.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "fuzzygames/lp/model.hpp"
#include "oracles/vertex_enumeration.hpp"

namespace oracles {

struct Analytic2x2 {
  double value = 0.0;
  double x1 = 0.0;  // row player's weight on row 1
  double y1 = 0.0;  // column player's weight on column 1
};

// [[a, b], [c, d]]: pure saddle point if one exists, otherwise the
// equalizing mixed strategies v = (ad - bc) / (a + d - b - c).
inline Analytic2x2 value_2x2(double a, double b, double c, double d) {
  const double maximin = std::max(std::min(a, b), std::min(c, d));
  const double minimax = std::min(std::max(a, c), std::max(b, d));
  if (maximin == minimax) {
    Analytic2x2 out;
    out.value = maximin;
    out.x1 = std::min(a, b) == maximin ? 1.0 : 0.0;
    out.y1 = std::max(a, c) == minimax ? 1.0 : 0.0;
    return out;
  }
  const double den = a + d - b - c;
  return {(a * d - b * c) / den, (d - c) / den, (d - b) / den};
}

// max v s.t. x^T A_j >= v for all j, sum x = 1, x >= 0, solved by vertex
// enumeration on the shifted game (so v >= 0 is a valid bound).
inline double value_by_enumeration(const std::vector<std::vector<double>>& a) {
  using namespace fuzzygames::lp;
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : a) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double shift = 1.0 - lo;
  LpModel model("game");
  for (std::size_t i = 0; i < m; ++i) model.add_variable("x");
  const int v = model.add_variable("v", 0.0, hi + shift);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r = model.row();
    for (std::size_t i = 0; i < m; ++i) r[i] = a[i][j] + shift;
    r[static_cast<std::size_t>(v)] = -1.0;
    model.add_constraint("col", std::move(r), Relation::kGreaterEqual, 0.0);
  }
  std::vector<double> s = model.row();
  for (std::size_t i = 0; i < m; ++i) s[i] = 1.0;
  model.add_constraint("simplex", std::move(s), Relation::kEqual, 1.0);
  std::vector<double> obj = model.row();
  obj[static_cast<std::size_t>(v)] = 1.0;
  model.add_objective("v", std::move(obj), Sense::kMaximize);
  return enumerate_vertices(model).objective - shift;
}

}  // namespace oracles

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

// Small random LPs for cross-checking the simplex against vertex
// enumeration. Every variable has a finite lower bound and a final row
// caps the sum, so the feasible region is bounded.

#pragma once

#include <string>
#include <vector>

#include "fuzzygames/lp/model.hpp"
#include "support/random.hpp"

namespace testing_support {

inline fuzzygames::lp::LpModel random_lp(Rng& rng) {
  using fuzzygames::lp::Relation;
  constexpr auto kLe = Relation::kLessEqual;
  constexpr auto kGe = Relation::kGreaterEqual;
  constexpr auto kEq = Relation::kEqual;
  const int n = rng.integer(1, 6);
  const int rows = rng.integer(0, 7);
  fuzzygames::lp::LpModel m("random");
  for (int j = 0; j < n; ++j) {
    const double lower = rng.integer(0, 3) == 0 ? -rng.integer(1, 3) : 0.0;
    const double upper = rng.integer(0, 3) == 0 ? rng.integer(1, 6) : fuzzygames::lp::kInfinity;
    m.add_variable("x" + std::to_string(j), lower, upper);
  }
  for (int r = 0; r < rows; ++r) {
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& v : a) v = rng.integer(-5, 5);
    const int kind = rng.integer(0, 4);
    // Zero right-hand sides make many instances degenerate.
    const double rhs = rng.integer(0, 2) == 0 ? 0.0 : rng.integer(-3, 15);
    m.add_constraint("r" + std::to_string(r), std::move(a), kind < 3 ? kLe : (kind == 3 ? kGe : kEq), rhs);
  }
  std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  m.add_constraint("bound", ones, kLe, rng.integer(1, 20));
  std::vector<double> c(static_cast<std::size_t>(n));
  for (double& v : c) v = rng.integer(-5, 5);
  m.add_objective("obj", std::move(c), rng.integer(0, 1) ? fuzzygames::lp::Sense::kMaximize : fuzzygames::lp::Sense::kMinimize);
  return m;
}

}  // namespace testing_support

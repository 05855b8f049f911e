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

// Brute-force search for the best acceptance/rejection levels of player I
// in a 2-row game with I-fuzzy goals: a grid over the strategy simplex S^2
// times a grid over (alpha, beta), testing every ramp constraint directly.

#pragma once

#include <cstddef>
#include <vector>

namespace oracles {

struct GridOptimum {
  double objective = -2.0;  // best alpha - beta; -2 when nothing is feasible
  double x1 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

inline GridOptimum ifuzzy_goal_grid(const std::vector<std::vector<double>>& a, double u0,
                                    double p0, double q0, int strategy_steps = 1000,
                                    int level_steps = 100) {
  const std::size_t n = a.front().size();
  const double tol = 1e-12;
  GridOptimum best;
  std::vector<double> payoff(n);
  for (int s = 0; s <= strategy_steps; ++s) {
    const double x1 = static_cast<double>(s) / strategy_steps;
    for (std::size_t j = 0; j < n; ++j) payoff[j] = a[0][j] * x1 + a[1][j] * (1.0 - x1);
    for (int ia = 0; ia <= level_steps; ++ia) {
      const double alpha = static_cast<double>(ia) / level_steps;
      for (int ib = 0; ib <= ia && ia + ib <= level_steps; ++ib) {
        const double beta = static_cast<double>(ib) / level_steps;
        if (alpha - beta <= best.objective) continue;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = (1.0 - alpha) * p0 + payoff[j] - u0 >= -tol &&
               (1.0 - beta) * q0 - payoff[j] + u0 - p0 <= tol;
        }
        if (ok) best = {alpha - beta, x1, alpha, beta};
      }
    }
  }
  return best;
}

}  // namespace oracles

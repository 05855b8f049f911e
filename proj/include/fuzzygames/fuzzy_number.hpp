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

// Triangular fuzzy numbers, alpha-cuts, the mean defuzzifier, cut-set ranking
// matrices and the piecewise-linear goal/constraint membership ramps.

#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzygames/errors.hpp"

namespace fuzzygames {

class TriangularFuzzyNumber {
 public:
  constexpr TriangularFuzzyNumber() = default;

  TriangularFuzzyNumber(double lower, double center, double upper)
      : lower_(lower), center_(center), upper_(upper) {
    if (!std::isfinite(lower) || !std::isfinite(center) ||
        !std::isfinite(upper)) {
      throw DomainError("triangular fuzzy number: non-finite parameter");
    }
    if (lower > center) {
      throw DomainError("triangular fuzzy number: lower > center");
    }
    if (center > upper) {
      throw DomainError("triangular fuzzy number: center > upper");
    }
  }

  static TriangularFuzzyNumber crisp(double value) {
    return {value, value, value};
  }

  double lower() const { return lower_; }
  double center() const { return center_; }
  double upper() const { return upper_; }

  bool is_crisp() const { return lower_ == center_ && center_ == upper_; }

  // Sum of the three parameters, i.e. three times the defuzzified value.
  // Kept separate so integer payoffs stay exact.
  double parameter_sum() const { return lower_ + center_ + upper_; }

  double left_spread() const { return center_ - lower_; }
  double right_spread() const { return upper_ - center_; }

  TriangularFuzzyNumber operator-() const { return {-upper_, -center_, -lower_}; }

  friend TriangularFuzzyNumber operator+(const TriangularFuzzyNumber& a,
                                         const TriangularFuzzyNumber& b) {
    return {a.lower_ + b.lower_, a.center_ + b.center_, a.upper_ + b.upper_};
  }

  // Nonnegative scaling only; a negative factor would swap the endpoints.
  friend TriangularFuzzyNumber scale(const TriangularFuzzyNumber& a, double c) {
    if (!(c >= 0.0)) throw DomainError("triangular fuzzy number: negative scale");
    return {c * a.lower_, c * a.center_, c * a.upper_};
  }

  friend bool operator==(const TriangularFuzzyNumber&,
                         const TriangularFuzzyNumber&) = default;

 private:
  double lower_ = 0.0;
  double center_ = 0.0;
  double upper_ = 0.0;
};

inline std::string to_string(const TriangularFuzzyNumber& x) {
  std::ostringstream out;
  out << '(' << x.lower() << ", " << x.center() << ", " << x.upper() << ')';
  return out.str();
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Strictly increasing alpha levels in [0, 1] ending at 1.
class CutSet {
 public:
  explicit CutSet(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw DomainError("cut set: no levels");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const double a = levels_[i];
      if (!(a >= 0.0 && a <= 1.0)) {
        throw DomainError("cut set: level outside [0, 1]");
      }
      if (i > 0 && !(levels_[i - 1] < a)) {
        throw DomainError("cut set: levels must be strictly increasing");
      }
    }
    if (levels_.back() != 1.0) throw DomainError("cut set: last level must be 1");
  }

  const std::vector<double>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }

  friend bool operator==(const CutSet&, const CutSet&) = default;

 private:
  std::vector<double> levels_;
};

// r x 2 matrix of alpha-cut endpoints; row i holds [lower, upper] at level i.
using RankingMatrix = std::vector<Interval>;

// std::lerp is exact at both ends and monotone in alpha, so cuts nest in
// floating point as well and alpha = 1 lands on the center exactly.
inline Interval alpha_cut(const TriangularFuzzyNumber& x, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha_cut: alpha outside [0, 1]");
  }
  return {std::lerp(x.lower(), x.center(), alpha),
          std::lerp(x.upper(), x.center(), alpha)};
}

inline double defuzzify(const TriangularFuzzyNumber& x) {
  return x.parameter_sum() / 3.0;
}

inline RankingMatrix ranking_matrix(const TriangularFuzzyNumber& x,
                                    const CutSet& cuts) {
  RankingMatrix rows;
  rows.reserve(cuts.size());
  for (double alpha : cuts.levels()) rows.push_back(alpha_cut(x, alpha));
  return rows;
}

// Componentwise order on ranking matrices over a shared cut set.
inline bool standard_order_leq(const TriangularFuzzyNumber& a,
                               const TriangularFuzzyNumber& b,
                               const CutSet& cuts) {
  const RankingMatrix fa = ranking_matrix(a, cuts);
  const RankingMatrix fb = ranking_matrix(b, cuts);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].lo > fb[i].lo || fa[i].hi > fb[i].hi) return false;
  }
  return true;
}

// Satisfaction of "z is essentially >= v0" with linear tolerance p0:
// 1 above v0, 0 at or below v0 - p0, linear in between. Continuous at both
// breakpoints.
inline double goal_membership(double z, double v0, double p0) {
  if (!(p0 > 0.0)) throw DomainError("goal_membership: tolerance must be > 0");
  if (z >= v0) return 1.0;
  if (z <= v0 - p0) return 0.0;
  const double mu = 1.0 - (v0 - z) / p0;
  return mu < 0.0 ? 0.0 : (mu > 1.0 ? 1.0 : mu);
}

// Satisfaction of "z is essentially <= w0" with linear tolerance q0.
inline double constraint_membership(double z, double w0, double q0) {
  if (!(q0 > 0.0)) {
    throw DomainError("constraint_membership: tolerance must be > 0");
  }
  if (z <= w0) return 1.0;
  if (z >= w0 + q0) return 0.0;
  const double mu = 1.0 - (z - w0) / q0;
  return mu < 0.0 ? 0.0 : (mu > 1.0 ? 1.0 : mu);
}

}  // namespace fuzzygames

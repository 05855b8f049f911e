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

// Intuitionistic ("I-fuzzy") statements: membership / non-membership pairs
// for "x is essentially >= a" under the pessimistic and optimistic
// encodings, plus the set operations and the decision operator built on them.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "fuzzygames/errors.hpp"

namespace fuzzygames {

class IFuzzyPair {
 public:
  // Values within this distance of the feasible region are snapped onto it.
  static constexpr double kDust = 1e-12;

  constexpr IFuzzyPair() = default;

  IFuzzyPair(double membership, double non_membership)
      : membership_(snap(membership)), non_membership_(snap(non_membership)) {
    const double excess = membership_ + non_membership_ - 1.0;
    if (excess > kDust || !std::isfinite(excess)) {
      throw DomainError("I-fuzzy pair: membership + non-membership > 1");
    }
    if (excess > 0.0) non_membership_ = 1.0 - membership_;
  }

  double membership() const { return membership_; }
  double non_membership() const { return non_membership_; }
  // Degree of hesitation, 1 - mu - nu.
  double hesitation() const { return 1.0 - membership_ - non_membership_; }

  friend bool operator==(const IFuzzyPair&, const IFuzzyPair&) = default;

 private:
  static double snap(double v) {
    if (!std::isfinite(v) || v < -kDust || v > 1.0 + kDust) {
      throw DomainError("I-fuzzy pair: degree outside [0, 1]");
    }
    return std::clamp(v, 0.0, 1.0);
  }

  double membership_ = 0.0;
  double non_membership_ = 1.0;
};

enum class Scenario { kPessimistic, kOptimistic };

// Acceptance tolerance p and rejection tolerance q of an I-fuzzy statement.
class IFuzzyTolerance {
 public:
  IFuzzyTolerance(double accept, double reject, Scenario scenario)
      : accept_(accept), reject_(reject), scenario_(scenario) {
    if (!std::isfinite(accept) || !std::isfinite(reject)) {
      throw DomainError("I-fuzzy tolerance: non-finite value");
    }
    if (scenario == Scenario::kPessimistic) {
      if (!(0.0 < reject && reject < accept)) {
        throw DomainError("pessimistic tolerance requires 0 < q < p");
      }
    } else if (!(accept > 0.0 && reject > 0.0)) {
      throw DomainError("optimistic tolerance requires p > 0 and q > 0");
    }
  }

  static IFuzzyTolerance pessimistic(double accept, double reject) {
    return {accept, reject, Scenario::kPessimistic};
  }
  static IFuzzyTolerance optimistic(double accept, double reject) {
    return {accept, reject, Scenario::kOptimistic};
  }

  // Pessimistic shape with q = p. Membership and non-membership then sum to
  // one everywhere and the statement reduces to an ordinary fuzzy set.
  static IFuzzyTolerance degenerate(double accept) {
    IFuzzyTolerance t = pessimistic(2.0 * accept, accept);
    t.reject_ = t.accept_ = accept;
    return t;
  }

  double accept() const { return accept_; }
  double reject() const { return reject_; }
  Scenario scenario() const { return scenario_; }

 private:
  double accept_;
  double reject_;
  Scenario scenario_;
};

namespace detail {

// 1 at or above `full`, 0 at or below `none`, linear in between.
inline double rising_ramp(double x, double none, double full) {
  if (x >= full) return 1.0;
  if (x <= none) return 0.0;
  return std::clamp((x - none) / (full - none), 0.0, 1.0);
}

}  // namespace detail

// "x (IF) >= a" when the decision maker withholds full acceptance even after
// rejection has vanished: nu reaches 0 at a - p + q, mu reaches 1 only at a.
inline IFuzzyPair pessimistic_pair(double x, double a,
                                   const IFuzzyTolerance& tol) {
  if (tol.scenario() != Scenario::kPessimistic) {
    throw DomainError("pessimistic_pair: optimistic tolerance given");
  }
  const double p = tol.accept();
  const double q = tol.reject();
  const double mu = detail::rising_ramp(x, a - p, a);
  const double nu = 1.0 - detail::rising_ramp(x, a - p, a - p + q);
  return {mu, nu};
}

// "x (IF) >= a" when the decision maker never rejects outright while
// acceptance is zero: mu reaches 0 at a - p, nu reaches 1 only at a - p - q.
inline IFuzzyPair optimistic_pair(double x, double a,
                                  const IFuzzyTolerance& tol) {
  if (tol.scenario() != Scenario::kOptimistic) {
    throw DomainError("optimistic_pair: pessimistic tolerance given");
  }
  const double p = tol.accept();
  const double q = tol.reject();
  const double mu = detail::rising_ramp(x, a - p, a);
  const double nu = 1.0 - detail::rising_ramp(x, a - p - q, a);
  return {mu, nu};
}

inline IFuzzyPair greater_eq_pair(double x, double a,
                                  const IFuzzyTolerance& tol) {
  return tol.scenario() == Scenario::kPessimistic ? pessimistic_pair(x, a, tol)
                                                  : optimistic_pair(x, a, tol);
}

// "x (IF) <= a", evaluated as "-x (IF) >= -a".
inline IFuzzyPair lesseq_reflection(double x, double a,
                                    const IFuzzyTolerance& tol) {
  return greater_eq_pair(-x, -a, tol);
}

inline double score(const IFuzzyPair& pair) {
  return pair.membership() - pair.non_membership();
}

inline IFuzzyPair ifuzzy_union(const IFuzzyPair& a, const IFuzzyPair& b) {
  return {std::max(a.membership(), b.membership()),
          std::min(a.non_membership(), b.non_membership())};
}

inline IFuzzyPair ifuzzy_intersection(const IFuzzyPair& a,
                                      const IFuzzyPair& b) {
  return {std::min(a.membership(), b.membership()),
          std::max(a.non_membership(), b.non_membership())};
}

// Intersection of every goal and every constraint.
inline IFuzzyPair ifuzzy_decision(std::span<const IFuzzyPair> goals,
                                  std::span<const IFuzzyPair> constraints) {
  if (goals.empty() && constraints.empty()) {
    throw DomainError("ifuzzy_decision: no goals or constraints");
  }
  IFuzzyPair result(1.0, 0.0);
  for (const IFuzzyPair& g : goals) result = ifuzzy_intersection(result, g);
  for (const IFuzzyPair& c : constraints) result = ifuzzy_intersection(result, c);
  return result;
}

}  // namespace fuzzygames

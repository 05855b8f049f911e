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

#pragma once

#include <stdexcept>
#include <string>

namespace fuzzygames {

// Argument outside the mathematical domain of an operation (alpha outside
// [0, 1], nonpositive tolerance, inverted triangular triple, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed linear program: ragged rows, non-finite numbers, no objective.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an operation's precondition in a way that is not a data
// problem, e.g. handing a multi-objective model to the single-objective solver.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fuzzygames

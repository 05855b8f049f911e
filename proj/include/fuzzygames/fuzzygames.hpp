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

#include "fuzzygames/errors.hpp"
#include "fuzzygames/fuzzy_number.hpp"
#include "fuzzygames/games/crisp.hpp"
#include "fuzzygames/games/fuzzy_goals.hpp"
#include "fuzzygames/games/fuzzy_payoffs.hpp"
#include "fuzzygames/games/game.hpp"
#include "fuzzygames/games/ifuzzy_goals.hpp"
#include "fuzzygames/games/poss.hpp"
#include "fuzzygames/games/solution.hpp"
#include "fuzzygames/ifuzzy.hpp"
#include "fuzzygames/io/game_file.hpp"
#include "fuzzygames/io/numbers.hpp"
#include "fuzzygames/io/report.hpp"
#include "fuzzygames/lp/model.hpp"
#include "fuzzygames/lp/simplex.hpp"

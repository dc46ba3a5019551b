// Copyright 2026 The Islands Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finding every world consistent with a puzzle.
//
// CheckWorld is the reference: it replays the transcript against one world,
// threading each speaker's utterance counter. BruteForceWorlds filters the
// full cartesian space through it and is only usable on tiny puzzles.
//
// SolveAll is the production path. Each person's type and each fluent value
// is a variable; the transcript and axioms are compiled into constraints
// that are evaluated three-valued on partial assignments, so a branch dies
// as soon as one constraint is definitely violated. Values that fail a
// constraint on their own are removed up front, which is where question
// rounds cut every type domain down. The search tree is split into disjoint
// subtrees that run under OpenMP; results are merged in canonical order, so
// output does not depend on the thread count.
#ifndef ISLANDS_SOLVER_H_
#define ISLANDS_SOLVER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "islands/extraction.h"
#include "islands/formula.h"
#include "islands/puzzle.h"

namespace islands {

struct CheckResult {
  bool consistent = true;
  // First violation, in transcript order (axioms first).
  int axiom = -1;
  int round = -1;
  std::string person;
  std::string message;
};

// Throws SemanticError if the world does not fit the puzzle's declarations.
CheckResult CheckWorld(const PuzzleSpec& puzzle, const World& world);

// Every world in canonical order, filtered by CheckWorld. Serial.
std::vector<World> BruteForceWorlds(const PuzzleSpec& puzzle);

// Number of worlds in the full space, saturating at UINT64_MAX.
uint64_t WorldSpaceSize(const PuzzleSpec& puzzle);

// Canonical order: types of persons 0..n-1 (label order of the epoch type),
// then fluent values fluent-major, person-minor, in domain order.
bool CanonicalLess(const World& a, const World& b);

enum class SolveStatus { kUnique, kNone, kMultiple };
std::string_view SolveStatusName(SolveStatus s);

struct SolveOptions {
  uint64_t max_nodes = 100'000'000;
  double max_seconds = 120.0;
  // 0 uses the OpenMP default; 1 runs the serial search.
  int threads = 0;
};

struct SolveStats {
  uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kNone;
  std::vector<World> worlds;
  std::vector<ReportTriple> reports;  // filled when unique
  SolveStats stats;
};

// Throws BudgetExceeded when a limit is hit.
SolveResult SolveAll(const PuzzleSpec& puzzle, const SolveOptions& options = {});

std::vector<ReportTriple> Reports(const PuzzleSpec& puzzle, const World& world);

struct ExplainLine {
  int round = 0;
  Round::Kind kind = Round::Kind::kStatements;
  std::string person;
  std::string type_label;  // phases at the time of speaking, as a label
  Phases phases{};
  std::string utterance;   // what was said, `me` bound
  std::string decoded;     // the fact it guarantees
};

// Throws std::invalid_argument if the world is inconsistent.
std::vector<ExplainLine> ExplainSolution(const PuzzleSpec& puzzle,
                                         const World& world);

std::string FormatExplainLine(const ExplainLine& line);

}  // namespace islands

#endif  // ISLANDS_SOLVER_H_

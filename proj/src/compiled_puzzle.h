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

#ifndef ISLANDS_SRC_COMPILED_PUZZLE_H_
#define ISLANDS_SRC_COMPILED_PUZZLE_H_

#include <cstdint>
#include <vector>

#include "islands/formula.h"
#include "islands/puzzle.h"

namespace islands::internal {

// One utterance of the transcript with its speaker's counter resolved.
struct CompiledUtterance {
  int round = 0;
  int speaker = 0;
  uint64_t count = 0;  // utterances the speaker made before this one
  bool is_belief = false;
  bool is_question = false;
  // Questions: whether the recorded answer is yes. Statements: always true.
  bool required = true;
  Formula body;
};

struct CompiledPuzzle {
  std::vector<Formula> axioms;
  std::vector<CompiledUtterance> utterances;  // transcript order
};

CompiledPuzzle CompilePuzzle(const PuzzleSpec& puzzle);

}  // namespace islands::internal

#endif  // ISLANDS_SRC_COMPILED_PUZZLE_H_

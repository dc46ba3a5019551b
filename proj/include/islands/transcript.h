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

// Replays a puzzle's rounds against a hidden world.
#ifndef ISLANDS_TRANSCRIPT_H_
#define ISLANDS_TRANSCRIPT_H_

#include <optional>
#include <string>
#include <vector>

#include "islands/formula.h"
#include "islands/puzzle.h"
#include "islands/semantics.h"

namespace islands {

struct SimulatedUtterance {
  int round = 0;
  Round::Kind kind = Round::Kind::kStatements;
  std::string person;
  std::string statement;  // `me` bound to the speaker
  Answer answer = Answer::kNo;       // question rounds
  bool consistent = false;           // statement rounds
  std::optional<Answer> recorded;    // the answer in the puzzle file, if any
};

// What each person would say, round by round, in file order. Only the
// puzzle's rounds and vocabulary are used; recorded answers are carried
// along for comparison and do not influence the result.
std::vector<SimulatedUtterance> SimulateTranscript(const PuzzleSpec& puzzle,
                                                   const World& world);

std::string RenderTranscriptText(const PuzzleSpec& puzzle,
                                 const std::vector<SimulatedUtterance>& lines);
std::string RenderTranscriptJson(const std::string& digest,
                                 const std::vector<SimulatedUtterance>& lines);

}  // namespace islands

#endif  // ISLANDS_TRANSCRIPT_H_

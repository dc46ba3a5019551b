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

// Puzzle and world files.
//
// Line oriented, UTF-8, '#' starts a comment. A puzzle file:
//
//   persons: Ann, Beth
//   fluent lover : bool
//   fluent guilt : { accomplice, guilty, innocent }
//   axiom exists x . guilt(x, guilty)
//   labels before round 1
//
//   round statements:
//     Ann: lover(me)
//     Beth: believes(not lover(Ann))
//   round question "are you a patient?" to all: patient(me)
//     answers: Ann=yes Beth=no
//
//   extraction:
//     sanity: partial, delusional, sane
//     truthfulness: alternator, liar, truthteller
//     fluent guilt: accomplice, guilty, innocent
//     order: alphabetical
//
// Answers may also follow the question on the same line. `labels before
// round N` makes type labels in world files and reports describe each
// person's phases just before round N instead of at the epoch.
//
// A world file assigns every person a type label and every fluent a value:
//
//   world:
//     Ann: PsAt lover=true guilt=guilty
//     Beth: DL lover=true guilt=accomplice
#ifndef ISLANDS_PUZZLE_H_
#define ISLANDS_PUZZLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islands/agent.h"
#include "islands/extraction.h"
#include "islands/formula.h"
#include "islands/statement.h"

namespace islands {

struct Utterance {
  int speaker = -1;
  Statement statement;
  std::optional<Answer> answer;  // question rounds: the recorded answer
};

struct Round {
  enum class Kind { kStatements, kQuestion };

  Kind kind = Kind::kStatements;
  std::string label;
  Statement question;  // kQuestion: the template, `me` = the addressee
  // One entry per speaker / addressee, in file order. For question rounds
  // each entry's statement is the question template.
  std::vector<Utterance> utterances;
  int line = 0;
};

struct PuzzleSpec {
  Vocabulary vocabulary;
  std::vector<Statement> axioms;
  std::vector<Round> rounds;
  std::optional<ExtractionConfig> extraction;
  int label_round = 0;

  const std::vector<std::string>& persons() const { return vocabulary.persons; }

  // How many times each person speaks before round `round`.
  std::vector<uint64_t> UtterancesBefore(int round) const;

  // Converts between epoch types and the file's label convention.
  ExtendedType ToEpoch(int person, ExtendedType label) const;
  ExtendedType ToLabel(int person, ExtendedType epoch) const;

  // The guilt component of report triples, or -1.
  int GuiltFluent() const;
};

// Throws ParseError / SemanticError with the offending line.
PuzzleSpec ParsePuzzle(std::string_view text);

// Parses the `world:` section of `text` against `puzzle`. Type labels follow
// the puzzle's label convention.
World ParseWorld(std::string_view text, const PuzzleSpec& puzzle);

// The inverse of ParseWorld.
std::string RenderWorld(const PuzzleSpec& puzzle, const World& world);

std::string ReadFile(const std::string& path);

}  // namespace islands

#endif  // ISLANDS_PUZZLE_H_

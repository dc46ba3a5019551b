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

// Human and machine renderings of solver output.
//
// The structured document (JSON) has these fields, in this order:
//
//   puzzle_digest  "sha256:<hex>" of the puzzle file bytes
//   status         "unique" | "none" | "multiple"
//   world_count    number
//   worlds         [{ "persons": [{ "name", "type", "sanity",
//                                   "truthfulness", "fluents": {..} }] }]
//   reports        [{ "name", "sanity", "truthfulness", "guilt" }]  (unique)
//   statistics     { "nodes" }
//   explanation    [{ "round", "person", "type", "sane", "truthful",
//                     "utterance", "decoded" }]                 (--explain)
//   extraction     { "rows": [{ "name", "digits", "value", "letter" }],
//                    "word" }                                  (--extract)
//
// Type labels follow the puzzle's label convention. Wall time is left out
// so that identical inputs give byte-identical documents.
#ifndef ISLANDS_REPORT_H_
#define ISLANDS_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islands/extraction.h"
#include "islands/puzzle.h"
#include "islands/solver.h"

namespace islands {

std::string Sha256Hex(std::string_view bytes);

struct SolveReport {
  std::string digest;
  const PuzzleSpec* puzzle = nullptr;
  const SolveResult* result = nullptr;
  std::optional<std::vector<ExplainLine>> explanation;
  std::optional<std::vector<ExtractionRow>> extraction;
};

std::string RenderSolveText(const SolveReport& report);
std::string RenderSolveJson(const SolveReport& report);

}  // namespace islands

#endif  // ISLANDS_REPORT_H_

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

// Ternary letter extraction: each person's report becomes three base-3
// digits (one per category, first category most significant), the number
// becomes a letter with A = 1, and the letters are read in person order.
#ifndef ISLANDS_EXTRACTION_H_
#define ISLANDS_EXTRACTION_H_

#include <string>
#include <vector>

#include "islands/agent.h"

namespace islands {

struct SolveResult;

// What the detective writes down for each person.
struct ReportTriple {
  std::string person;
  SanityClass sanity = SanityClass::kSane;
  TruthClass truth = TruthClass::kTruthteller;
  std::string guilt;  // empty if the puzzle has no guilt fluent
};

struct ExtractionCategory {
  enum class Source { kSanity, kTruthfulness, kFluent };

  Source source = Source::kSanity;
  std::string fluent;               // kFluent only
  std::vector<std::string> values;  // digit = position in this list
};

enum class PersonOrder { kAlphabetical, kDeclaration };

struct ExtractionConfig {
  static constexpr int kDigits = 3;

  std::vector<ExtractionCategory> categories;
  PersonOrder order = PersonOrder::kAlphabetical;

  // partial/delusional/sane, alternator/liar/truthteller,
  // accomplice/guilty/innocent from fluent `guilt`; alphabetical order.
  static ExtractionConfig Default();

  // Throws ExtractionError unless there are exactly three categories of
  // exactly three distinct values each.
  void Validate() const;

  // Name of the fluent feeding the guilt slot, or empty.
  std::string GuiltFluent() const;
};

struct EncodedPerson {
  std::string digits;  // e.g. "001"
  int value = 0;
};

// Throws ExtractionError if a triple component is not listed in its
// category.
EncodedPerson EncodePerson(const ReportTriple& triple,
                           const ExtractionConfig& config);

// 1 -> 'A' ... 26 -> 'Z'. Throws ExtractionError naming `person` otherwise.
char ValueToLetter(int value, const std::string& person = "");

struct ExtractionRow {
  std::string person;
  EncodedPerson encoded;
  char letter = '?';
};

// Rows in the config's person order.
std::vector<ExtractionRow> ExtractRows(const std::vector<ReportTriple>& reports,
                                       const ExtractionConfig& config);

std::string ExtractWord(const std::vector<ReportTriple>& reports,
                        const ExtractionConfig& config);

// Refuses (ExtractionError) unless the result is unique.
std::string ExtractWord(const SolveResult& result,
                        const ExtractionConfig& config);

}  // namespace islands

#endif  // ISLANDS_EXTRACTION_H_

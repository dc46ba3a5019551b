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

// Published question tables, transcribed for comparison.
#ifndef ISLANDS_TESTS_EXPECTED_TABLES_H_
#define ISLANDS_TESTS_EXPECTED_TABLES_H_

#include <array>
#include <string_view>
#include <utility>

namespace islands::testing {

// Answers of all 16 types to [Q, Q, B, B] at offset 0. Columns in canonical
// type order; rows are the four questions.
inline constexpr std::array<std::string_view, 4> kTable2Rows = {
    "NYNYNYNYNYNYYNYN",
    "NYYNNYYNYNNYNYYN",
    "NYNYYNYNYNYNYNYN",
    "NYYNYNNYYNNYYNNY",
};

// [Q, Q, B] classes at offset 1, labels at the first question.
inline constexpr std::array<std::pair<std::string_view, std::array<std::string_view, 2>>, 8>
    kTable3 = {{
        {"NNN", {"ST", "PsAl"}},
        {"YYY", {"SL", "PsAt"}},
        {"NYN", {"SAt", "PsL"}},
        {"YNY", {"SAl", "PsT"}},
        {"YYN", {"DL", "PiAl"}},
        {"NNY", {"DT", "PiAt"}},
        {"YNN", {"DAl", "PiL"}},
        {"NYY", {"DAt", "PiT"}},
    }};

// The classic four-row [Q, B] table as usually printed, rows ST, SL, DT, DL.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
    kPrintedTable1 = {{{"ST", "NN"}, {"SL", "YN"}, {"DT", "NY"}, {"DL", "YY"}}};

// What the assertion rules give for the same rows.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
    kEngineTable1 = {{{"ST", "NN"}, {"SL", "YY"}, {"DT", "NY"}, {"DL", "YN"}}};

// Report triples (sanity, truthfulness, guilt), digits, value and letter per
// resident, alphabetical.
struct ExtractionRowWant {
  std::string_view name;
  std::string_view label;  // phases before the first question
  std::string_view sanity;
  std::string_view truth;
  std::string_view guilt;
  std::string_view digits;
  int value;
  char letter;
};
inline constexpr std::array<ExtractionRowWant, 9> kTable4 = {{
    {"Ann", "PsAt", "partial", "alternator", "guilty", "001", 1, 'A'},
    {"Beth", "DL", "delusional", "liar", "accomplice", "110", 12, 'L'},
    {"Cedric", "SAt", "sane", "alternator", "innocent", "202", 20, 'T'},
    {"David", "PiL", "partial", "liar", "innocent", "012", 5, 'E'},
    {"Eve", "SAl", "sane", "alternator", "accomplice", "200", 18, 'R'},
    {"Fiona", "DL", "delusional", "liar", "innocent", "112", 14, 'N'},
    {"Grace", "PiAl", "partial", "alternator", "guilty", "001", 1, 'A'},
    {"Holly", "SAt", "sane", "alternator", "innocent", "202", 20, 'T'},
    {"Ian", "PiL", "partial", "liar", "innocent", "012", 5, 'E'},
}};

}  // namespace islands::testing

#endif  // ISLANDS_TESTS_EXPECTED_TABLES_H_

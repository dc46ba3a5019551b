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

#include "islands/extraction.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "expected_tables.h"
#include "islands/errors.h"
#include "islands/solver.h"
#include "test_util.h"

namespace islands {
namespace {

std::vector<ReportTriple> AllTriples() {
  std::vector<ReportTriple> out;
  for (auto s : {SanityClass::kSane, SanityClass::kDelusional, SanityClass::kPartial}) {
    for (auto t : {TruthClass::kTruthteller, TruthClass::kLiar, TruthClass::kAlternator}) {
      for (const char* g : {"accomplice", "guilty", "innocent"}) {
        out.push_back({"P", s, t, g});
      }
    }
  }
  return out;
}

TEST(EncodeTest, InjectiveOverAll27Triples) {
  const ExtractionConfig c = ExtractionConfig::Default();
  std::set<int> values;
  std::set<std::string> digits;
  for (const auto& t : AllTriples()) {
    const EncodedPerson e = EncodePerson(t, c);
    EXPECT_GE(e.value, 0);
    EXPECT_LE(e.value, 26);
    values.insert(e.value);
    digits.insert(e.digits);
    EXPECT_EQ(std::stoi(e.digits, nullptr, 3), e.value);
  }
  EXPECT_EQ(values.size(), 27u);
  EXPECT_EQ(digits.size(), 27u);
}

TEST(EncodeTest, PermutingACategoryPermutesItsDigit) {
  ExtractionConfig c = ExtractionConfig::Default();
  ExtractionConfig swapped = c;
  std::swap(swapped.categories[1].values[0], swapped.categories[1].values[2]);
  for (const auto& t : AllTriples()) {
    std::string a = EncodePerson(t, c).digits;
    const std::string b = EncodePerson(t, swapped).digits;
    a[1] = a[1] == '0' ? '2' : a[1] == '2' ? '0' : '1';
    EXPECT_EQ(a, b);
  }
}

TEST(LetterTest, Range) {
  EXPECT_EQ(ValueToLetter(1), 'A');
  EXPECT_EQ(ValueToLetter(26), 'Z');
  EXPECT_THROW(ValueToLetter(0, "Zed"), ExtractionError);
  EXPECT_THROW(ValueToLetter(27), ExtractionError);
  try {
    ValueToLetter(0, "Zed");
  } catch (const ExtractionError& e) {
    EXPECT_NE(std::string(e.what()).find("Zed"), std::string::npos);
  }
}

TEST(ExtractTest, Table4Rows) {
  const PuzzleSpec spec = testing::LoadFixture();
  const SolveResult r = SolveAll(spec);
  const auto rows = ExtractRows(r.reports, *spec.extraction);
  ASSERT_EQ(rows.size(), 9u);
  for (size_t i = 0; i < 9; ++i) {
    const auto& want = testing::kTable4[i];
    EXPECT_EQ(rows[i].person, want.name);
    EXPECT_EQ(rows[i].encoded.digits, want.digits);
    EXPECT_EQ(rows[i].encoded.value, want.value);
    EXPECT_EQ(rows[i].letter, want.letter);
  }
  EXPECT_EQ(ExtractWord(r, *spec.extraction), "ALTERNATE");
  EXPECT_EQ(ExtractWord(r, ExtractionConfig::Default()), "ALTERNATE");
}

TEST(ExtractTest, AlphabeticalOrderIgnoresInputOrder) {
  const PuzzleSpec spec = testing::LoadFixture();
  std::vector<ReportTriple> reports = SolveAll(spec).reports;
  std::reverse(reports.begin(), reports.end());
  EXPECT_EQ(ExtractWord(reports, ExtractionConfig::Default()), "ALTERNATE");
  ExtractionConfig declared = ExtractionConfig::Default();
  declared.order = PersonOrder::kDeclaration;
  EXPECT_EQ(ExtractWord(reports, declared), "ETANRETLA");
}

TEST(ExtractTest, Errors) {
  // Partial alternator accomplice encodes as 000, which has no letter.
  ReportTriple t{"Zed", SanityClass::kPartial, TruthClass::kAlternator, "accomplice"};
  EXPECT_THROW(ExtractWord({t}, ExtractionConfig::Default()), ExtractionError);
  ReportTriple unknown{"Q", SanityClass::kSane, TruthClass::kLiar, "bystander"};
  EXPECT_THROW(ExtractWord({unknown}, ExtractionConfig::Default()), ExtractionError);

  ExtractionConfig two = ExtractionConfig::Default();
  two.categories.pop_back();
  EXPECT_THROW(two.Validate(), ExtractionError);
  ExtractionConfig dup = ExtractionConfig::Default();
  dup.categories[0].values[1] = dup.categories[0].values[0];
  EXPECT_THROW(dup.Validate(), ExtractionError);

  SolveResult many;
  many.status = SolveStatus::kMultiple;
  EXPECT_THROW(ExtractWord(many, ExtractionConfig::Default()), ExtractionError);
}

}  // namespace
}  // namespace islands

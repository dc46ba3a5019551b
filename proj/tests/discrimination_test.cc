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

#include "islands/discrimination.h"

#include <gtest/gtest.h>

#include <set>

#include "expected_tables.h"
#include "islands/errors.h"

namespace islands {
namespace {

const Statement kQ = PatientQuestion();
const Statement kB = BelievePatientQuestion();

TEST(SignatureTest, Table2AllDistinct) {
  std::set<Signature> seen;
  for (int i = 0; i < ExtendedType::kCount; ++i) {
    const ExtendedType t = ExtendedType::FromIndex(i);
    const Signature s = AnswerSignature(t, {kQ, kQ, kB, kB}, 0);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(s[k], testing::kTable2Rows[k][i]);
    seen.insert(s);
  }
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_TRUE(PartitionTypes({kQ, kQ, kB, kB}, 0).discrete());
}

TEST(SignatureTest, EmptyQuestionList) {
  EXPECT_EQ(AnswerSignature(ExtendedType::FromIndex(0), {}, 0), "");
  const TypePartition p = PartitionTypes({}, 0);
  ASSERT_EQ(p.classes.size(), 1u);
  EXPECT_EQ(p.classes.begin()->second.size(), 16u);
}

TEST(PartitionTest, Table3) {
  const TypePartition p = PartitionTypes({kQ, kQ, kB}, 1);
  ASSERT_EQ(p.classes.size(), 8u);
  for (const auto& [sig, labels] : testing::kTable3) {
    const auto it = p.classes.find(std::string(sig));
    ASSERT_NE(it, p.classes.end()) << sig;
    ASSERT_EQ(it->second.size(), 2u);
    EXPECT_EQ(it->second[0].label(), labels[0]);
    EXPECT_EQ(it->second[1].label(), labels[1]);
  }
  EXPECT_FALSE(p.discrete());
}

TEST(PartitionTest, OffsetIsAShift) {
  // Offset k with labels at the first question is offset 0 on the label.
  for (uint64_t offset : {0u, 1u, 2u, 5u}) {
    for (ExtendedType label : ExtendedType::All()) {
      EXPECT_EQ(AnswerSignature(label.Shifted(offset), {kQ, kB, kQ}, offset),
                AnswerSignature(label, {kQ, kB, kQ}, 0));
    }
  }
}

TEST(FilterTest, InvertsPartition) {
  const TypePartition p = PartitionTypes({kQ, kQ, kB}, 1);
  for (const auto& [sig, types] : p.classes) {
    std::vector<Answer> answers;
    for (char c : sig) answers.push_back(c == 'Y' ? Answer::kYes : Answer::kNo);
    EXPECT_EQ(FilterTypesBySignature({kQ, kQ, kB}, answers, 1), types);
  }
  EXPECT_THROW(FilterTypesBySignature({kQ, kQ}, {Answer::kYes}, 0),
               std::invalid_argument);
}

TEST(Table1Test, EngineValuesAndErratum) {
  int differing = 0;
  for (size_t i = 0; i < 4; ++i) {
    const auto& [label, want] = testing::kEngineTable1[i];
    const Signature got =
        AnswerSignature(*ExtendedType::FromLabel(label), {kQ, kB}, 0);
    EXPECT_EQ(got, want) << label;
    const auto& printed = testing::kPrintedTable1[i].second;
    for (int k = 0; k < 2; ++k) differing += got[k] != printed[k];
    EXPECT_EQ(got[0], printed[0]) << "Q column agrees";
  }
  EXPECT_EQ(differing, 2);
}

TEST(QuestionTest, OnlySelfReferentialQuestions) {
  EXPECT_NO_THROW(CheckSelfReferential(ParseStatement("not partial(me) or liar(me)")));
  EXPECT_THROW(CheckSelfReferential(ParseStatement("patient(Ann)")), SemanticError);
  EXPECT_THROW(CheckSelfReferential(ParseStatement("exists x . patient(x)")),
               SemanticError);
  EXPECT_THROW(CheckSelfReferential(ParseStatement("lover(me)")), SemanticError);
}

TEST(RenderTablesTest, GoldenFragments) {
  const std::string t = RenderTables();
  EXPECT_EQ(t, RenderTables());
  EXPECT_NE(t.find("NYN → SAt, PsL"), std::string::npos);
  EXPECT_NE(t.find("Erratum"), std::string::npos);
  // PsAt is column 15 of Table 2: Y, Y, Y, N.
  const size_t header = t.find("   ST   SL");
  ASSERT_NE(header, std::string::npos);
  const size_t col = t.find("PsAt", header) - header;
  std::vector<char> cells;
  size_t line = t.find('\n', header) + 1;
  for (int row = 0; row < 4; ++row) {
    cells.push_back(t[line + col]);
    line = t.find('\n', line) + 1;
  }
  EXPECT_EQ(cells, (std::vector<char>{'Y', 'Y', 'Y', 'N'}));
  EXPECT_EQ(t.find(" \n"), std::string::npos) << "no trailing blanks";
}

}  // namespace
}  // namespace islands

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

#include "islands/semantics.h"

#include <gtest/gtest.h>

#include "expected_tables.h"
#include "islands/errors.h"
#include "test_util.h"

namespace islands {
namespace {

// One person with a single boolean fact whose value the test controls.
struct OneFact {
  Vocabulary vocab{.persons = {"Ann"}, .fluents = {{"f", true, {"false", "true"}}}};
  Statement fact = Atom("f", Term::Person("Ann"));

  World WorldWith(ExtendedType t, bool value) const {
    return World{.types = {t}, .fluents = {{static_cast<uint8_t>(value)}}};
  }
};

TEST(AssertionLawTest, ExhaustiveAgainstReference) {
  const OneFact f;
  int cases = 0;
  for (ExtendedType t : ExtendedType::All()) {
    for (uint64_t parity : {0u, 1u}) {
      for (bool value : {false, true}) {
        const World w = f.WorldWith(t, value);
        const AgentState state{t, parity};
        const auto ref = testing::ReferencePhases(t, parity);
        EXPECT_EQ(WouldAssert(state, f.vocab, w, f.fact, 0), ref.SaysBare(value))
            << t.label() << " parity " << parity << " value " << value;
        EXPECT_EQ(WouldAssert(state, f.vocab, w, Believes(f.fact), 0),
                  ref.SaysBelief(value));
        // Belief collapse: a belief report is said iff truthful == fact.
        EXPECT_EQ(WouldAssert(state, f.vocab, w, Believes(f.fact), 0),
                  ref.truthful == value);
        EXPECT_EQ(WouldAssert(state, f.vocab, w, Believes(Believes(f.fact)), 0),
                  ref.truthful == value);
        // Bare statements: said iff (truthful == sane) == fact.
        EXPECT_EQ(WouldAssert(state, f.vocab, w, f.fact, 0),
                  (ref.truthful == ref.sane) == value);
        cases += 2;
      }
    }
  }
  EXPECT_EQ(cases, 128);
}

TEST(AnswerTest, YesIffWouldAssertAndAdvances) {
  const OneFact f;
  for (ExtendedType t : ExtendedType::All()) {
    for (bool value : {false, true}) {
      const World w = f.WorldWith(t, value);
      const AgentState state{t, 3};
      auto [answer, next] = AnswerYesNo(state, f.vocab, w, f.fact, 0);
      EXPECT_EQ(answer == Answer::kYes, WouldAssert(state, f.vocab, w, f.fact, 0));
      EXPECT_EQ(next, Advance(state));
    }
  }
}

TEST(AnswerTest, PublishedExamples) {
  const Vocabulary v{.persons = {"X"}, .fluents = {}};
  const Statement q = Atom("patient", Term::Speaker());
  auto answer = [&](const char* label, const Statement& s) {
    const ExtendedType t = *ExtendedType::FromLabel(label);
    return AnswerYesNo({t, 0}, v, World{.types = {t}, .fluents = {}}, s, 0).first;
  };
  EXPECT_EQ(answer("ST", q), Answer::kNo);
  EXPECT_EQ(answer("DL", Believes(q)), Answer::kNo);
}

TEST(SimulateTest, Table2) {
  const Vocabulary v{.persons = {"X"}, .fluents = {}};
  const Statement q = Atom("patient", Term::Speaker());
  const std::vector<PlannedUtterance> plan = {
      {PlannedUtterance::Kind::kQuestion, q},
      {PlannedUtterance::Kind::kQuestion, q},
      {PlannedUtterance::Kind::kQuestion, Believes(q)},
      {PlannedUtterance::Kind::kQuestion, Believes(q)}};
  for (int i = 0; i < ExtendedType::kCount; ++i) {
    const ExtendedType t = ExtendedType::FromIndex(i);
    const auto out = SimulatePerson({t, 0}, v, World{.types = {t}, .fluents = {}}, 0, plan);
    ASSERT_EQ(out.size(), 4u);
    for (int k = 0; k < 4; ++k) {
      EXPECT_EQ(AnswerChar(out[k].answer), testing::kTable2Rows[k][i])
          << t.label() << " question " << k;
    }
  }
}

TEST(SimulateTest, EmptyPlan) {
  const OneFact f;
  EXPECT_TRUE(SimulatePerson({ExtendedType::FromIndex(3), 0}, f.vocab,
                             f.WorldWith(ExtendedType::FromIndex(3), true), 0, {})
                  .empty());
}

// Two persons, three mixed utterances, against the reference agent applied
// one step at a time.
TEST(SimulateTest, ToyWorldMatchesStepByStepReference) {
  const Vocabulary v{.persons = {"Ann", "Bob"},
                     .fluents = {{"f", true, {"false", "true"}}}};
  const std::vector<Statement> stmts = {
      ParseStatement("f(Bob)"), ParseStatement("believes(exists x . f(x))"),
      ParseStatement("patient(me) or f(me)")};
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; b += 5) {
      for (int bits = 0; bits < 4; ++bits) {
        const World w{.types = {ExtendedType::FromIndex(a), ExtendedType::FromIndex(b)},
                      .fluents = {{static_cast<uint8_t>(bits & 1),
                                   static_cast<uint8_t>(bits >> 1)}}};
        const std::vector<PlannedUtterance> plan = {
            {PlannedUtterance::Kind::kQuestion, stmts[0]},
            {PlannedUtterance::Kind::kAssertion, stmts[1]},
            {PlannedUtterance::Kind::kQuestion, stmts[2]}};
        const auto out = SimulatePerson({w.types[0], 0}, v, w, 0, plan);
        const bool facts[3] = {
            (bits >> 1) != 0, bits != 0,
            HoldsBuiltin(Builtin::kPatient, w.types[0]) || (bits & 1) != 0};
        for (int k = 0; k < 3; ++k) {
          const auto ref = testing::ReferencePhases(w.types[0], k);
          const bool says = IsBelief(stmts[k]) ? ref.SaysBelief(facts[k])
                                               : ref.SaysBare(facts[k]);
          if (plan[k].kind == PlannedUtterance::Kind::kQuestion) {
            EXPECT_EQ(out[k].answer == Answer::kYes, says);
          } else {
            EXPECT_EQ(out[k].consistent, says);
          }
          EXPECT_EQ(out[k].phases.truthful, ref.truthful);
          EXPECT_EQ(out[k].phases.sane, ref.sane);
        }
      }
    }
  }
}

TEST(DecodeTest, Examples) {
  const Statement lover_beth = ParseStatement("lover(Beth)");
  const AgentState dl{*ExtendedType::FromLabel("DL"), 0};
  EXPECT_EQ(DecodeAssertion(dl, lover_beth), lover_beth);
  EXPECT_EQ(DecodeAssertion(dl, Believes(lover_beth)), Not(lover_beth));
  const AgentState pi_al{*ExtendedType::FromLabel("PiAl"), 0};
  EXPECT_EQ(DecodeAssertion(pi_al, lover_beth), lover_beth);
  // One utterance later PiAl speaks as PsAt: truthful, so beliefs are facts.
  const AgentState later{*ExtendedType::FromLabel("PiAl"), 1};
  EXPECT_EQ(DecodeAssertion(later, Believes(lover_beth)), lover_beth);
  EXPECT_EQ(DecodeAssertion(dl, ParseStatement("believes(not lover(Eve))")),
            ParseStatement("lover(Eve)"));
}

// The decoded fact holds in exactly the worlds where the utterance fits.
TEST(DecodeTest, AgreesWithWouldAssert) {
  const Vocabulary v{.persons = {"Ann", "Bob"},
                     .fluents = {{"f", true, {"false", "true"}}}};
  testing::Rng rng(5);
  const testing::StatementShape shape = testing::ShapeFor(v, 3);
  for (int i = 0; i < 500; ++i) {
    const Statement s = testing::RandomStatement(rng, shape);
    const World w = testing::RandomWorld(rng, v);
    const AgentState state{w.types[0], rng() % 4};
    const Statement fact = DecodeAssertion(state, BindSpeaker(s, "Ann"));
    EXPECT_EQ(EvalClosed(v, w, fact), WouldAssert(state, v, w, s, 0))
        << RenderStatement(s);
  }
}

}  // namespace
}  // namespace islands

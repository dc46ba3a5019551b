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

#include "islands/statement.h"

#include <gtest/gtest.h>

#include "islands/errors.h"
#include "islands/puzzle.h"
#include "test_util.h"

namespace islands {
namespace {

TEST(ParseTest, Atoms) {
  EXPECT_EQ(ParseStatement("lover(Ann)"), Atom("lover", Term::Person("Ann")));
  EXPECT_EQ(ParseStatement("patient(me)"), Atom("patient", Term::Speaker()));
  EXPECT_EQ(ParseStatement("guilt(Ann, guilty)"),
            Atom("guilt", Term::Person("Ann"), "guilty"));
}

TEST(ParseTest, PrecedenceAndAssociativity) {
  const Statement a = Atom("a", Term::Person("P"));
  const Statement b = Atom("b", Term::Person("P"));
  const Statement c = Atom("c", Term::Person("P"));
  EXPECT_EQ(ParseStatement("a(P) or b(P) and c(P)"), Or({a, And({b, c})}));
  EXPECT_EQ(ParseStatement("not a(P) and b(P)"), And({Not(a), b}));
  EXPECT_EQ(ParseStatement("a(P) implies b(P) implies c(P)"),
            Implies(a, Implies(b, c)));
  EXPECT_EQ(ParseStatement("a(P) and b(P) and c(P)"), And({a, b, c}));
  EXPECT_EQ(ParseStatement("(a(P) and b(P)) and c(P)"), And({And({a, b}), c}));
}

TEST(ParseTest, QuantifiersBindVariables) {
  const Statement s = ParseStatement("exists x . unlocked(x) and doctor(x)");
  EXPECT_EQ(s, Exists("x", And({Atom("unlocked", Term::Variable("x")),
                                Atom("doctor", Term::Variable("x"))})));
  EXPECT_EQ(ParseStatement("atleast 2 x . guilt(x, guilty)"),
            AtLeast(2, "x", Atom("guilt", Term::Variable("x"), "guilty")));
}

TEST(ParseTest, Believes) {
  EXPECT_EQ(ParseStatement("believes(not lover(Eve))"),
            Believes(Not(Atom("lover", Term::Person("Eve")))));
  EXPECT_EQ(ParseStatement("believes(believes(patient(me)))"),
            Believes(Believes(Atom("patient", Term::Speaker()))));
}

TEST(RenderTest, Canonical) {
  EXPECT_EQ(RenderStatement(
                AtLeast(2, "x", Atom("guilt", Term::Variable("x"), "guilty"))),
            "atleast 2 x . guilt(x, guilty)");
  EXPECT_EQ(RenderStatement(ParseStatement(
                "(exists x . unlocked(x)) and (forall x . unlocked(x) implies doctor(x))")),
            "(exists x . unlocked(x)) and (forall x . unlocked(x) implies doctor(x))");
  EXPECT_EQ(RenderStatement(ParseStatement("not  (a(P)  or b(P))")),
            "not (a(P) or b(P))");
}

TEST(ErrorTest, SyntaxErrorsCarryPositions) {
  try {
    ParseStatement("lover(Ann) and");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_GT(e.column(), 10);
  }
  for (const char* bad : {"", "lover(", "lover(Ann", "exists . p(x)",
                          "atleast x . p(x)", "p(Ann) p(Bob)", "(p(Ann)",
                          "p(Ann))", "and p(Ann)"}) {
    EXPECT_THROW(ParseStatement(bad), ParseError) << bad;
  }
}

TEST(ErrorTest, MisplacedBelieves) {
  EXPECT_THROW(ParseStatement("not believes(p(Ann))"), SemanticError);
  EXPECT_THROW(ParseStatement("p(Ann) and believes(p(Ann))"), SemanticError);
  StatementContext no_beliefs;
  no_beliefs.allow_believes = false;
  EXPECT_THROW(ParseStatement("believes(p(Ann))", no_beliefs), SemanticError);
}

TEST(ErrorTest, UndeclaredNamesWithVocabulary) {
  Vocabulary v{.persons = {"Ann"},
               .fluents = {{"lover", true, {"false", "true"}}}};
  StatementContext ctx{.vocabulary = &v};
  EXPECT_NO_THROW(ParseStatement("lover(Ann) and patient(me)", ctx));
  EXPECT_THROW(ParseStatement("lover(Bob)", ctx), SemanticError);
  EXPECT_THROW(ParseStatement("strong(Ann)", ctx), SemanticError);
  EXPECT_THROW(ParseStatement("lover(Ann, yes)", ctx), SemanticError);
  EXPECT_THROW(ParseStatement("lover(x)", ctx), SemanticError);
  ctx.allow_speaker = false;
  EXPECT_THROW(ParseStatement("lover(me)", ctx), SemanticError);
}

TEST(BindSpeakerTest, ReplacesMe) {
  EXPECT_EQ(BindSpeaker(ParseStatement("believes(exists x . lover(x) and lover(me))"),
                        "Ann"),
            ParseStatement("believes(exists x . lover(x) and lover(Ann))"));
  EXPECT_EQ(BeliefBody(ParseStatement("believes(believes(p(me)))")),
            ParseStatement("p(me)"));
}

TEST(NegateTest, StripsDoubleNegation) {
  const Statement a = Atom("a", Term::Person("P"));
  EXPECT_EQ(Negate(a), Not(a));
  EXPECT_EQ(Negate(Not(a)), a);
}

TEST(RoundTripTest, GeneratedStatements) {
  testing::Rng rng(20261016);
  testing::StatementShape shape;
  shape.persons = {"Ann", "Bob", "Cy"};
  shape.predicates = {{"p", {}}, {"q", {}}, {"guilt", {"a", "b", "c"}},
                      {"patient", {}}};
  shape.max_depth = 6;
  for (int i = 0; i < 2000; ++i) {
    const Statement s = testing::RandomStatement(rng, shape);
    const std::string text = RenderStatement(s);
    ASSERT_EQ(ParseStatement(text), s) << text;
    ASSERT_EQ(RenderStatement(ParseStatement(text)), text);
  }
}

TEST(RoundTripTest, FixtureStatements) {
  const PuzzleSpec spec = testing::LoadFixture();
  StatementContext ctx{.vocabulary = &spec.vocabulary};
  for (const auto& a : spec.axioms) {
    EXPECT_EQ(ParseStatement(RenderStatement(a), ctx), a);
  }
  for (const auto& r : spec.rounds) {
    for (const auto& u : r.utterances) {
      EXPECT_EQ(ParseStatement(RenderStatement(u.statement), ctx), u.statement);
    }
  }
}

}  // namespace
}  // namespace islands

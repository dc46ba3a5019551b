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

#include "islands/solver.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "expected_tables.h"
#include "islands/errors.h"
#include "islands/transcript.h"
#include "test_util.h"

namespace islands {
namespace {

World LoadWorldFile(const PuzzleSpec& spec, const std::string& name) {
  return ParseWorld(ReadFile(testing::DataPath(name)), spec);
}

TEST(CheckTest, FixtureSolutionIsConsistent) {
  const PuzzleSpec spec = testing::LoadFixture();
  const CheckResult r = CheckWorld(spec, LoadWorldFile(spec, "asylum_solution.world"));
  EXPECT_TRUE(r.consistent) << r.message;
}

TEST(CheckTest, SaneLiarAnnFailsAtRoundFour) {
  const PuzzleSpec spec = testing::LoadFixture();
  const CheckResult r = CheckWorld(spec, LoadWorldFile(spec, "asylum_ann_sl.world"));
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.round, 4);
  EXPECT_EQ(r.person, "Ann");
  EXPECT_NE(r.message.find("round 4"), std::string::npos);
}

// Swapping the type alone fails earlier: a sane liar cannot truthfully
// claim to have been a lover.
TEST(CheckTest, SaneLiarAnnWhoIsALoverFailsAtRoundZero) {
  const PuzzleSpec spec = testing::LoadFixture();
  World w = LoadWorldFile(spec, "asylum_solution.world");
  w.types[0] = spec.ToEpoch(0, *ExtendedType::FromLabel("SL"));
  const CheckResult r = CheckWorld(spec, w);
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.round, 0);
}

TEST(CheckTest, AxiomViolationReported) {
  const PuzzleSpec spec = testing::LoadFixture();
  World w = LoadWorldFile(spec, "asylum_solution.world");
  w.fluents[3][4] = 0;  // nobody unlocked the door
  const CheckResult r = CheckWorld(spec, w);
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.axiom, 0);
}

TEST(CheckTest, EmptyPuzzleAcceptsAnything) {
  const PuzzleSpec spec = ParsePuzzle("persons: Ann, Bob\nfluent f: bool\n");
  testing::Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(CheckWorld(spec, testing::RandomWorld(rng, spec.vocabulary)).consistent);
  }
}

TEST(SolveTest, FixtureHasTheUniqueSolution) {
  const PuzzleSpec spec = testing::LoadFixture();
  const SolveResult r = SolveAll(spec);
  ASSERT_EQ(r.status, SolveStatus::kUnique);
  EXPECT_EQ(r.worlds.front(), LoadWorldFile(spec, "asylum_solution.world"));
  ASSERT_EQ(r.reports.size(), 9u);
  for (size_t i = 0; i < 9; ++i) {
    const auto& want = testing::kTable4[i];
    EXPECT_EQ(r.reports[i].person, want.name);
    EXPECT_EQ(SanityClassName(r.reports[i].sanity), want.sanity);
    EXPECT_EQ(TruthClassName(r.reports[i].truth), want.truth);
    EXPECT_EQ(r.reports[i].guilt, want.guilt);
  }
}

TEST(SolveTest, ContradictionAndEmpty) {
  EXPECT_EQ(SolveAll(testing::LoadFixture("contradictory.puzzle")).status,
            SolveStatus::kNone);
  const SolveResult all = SolveAll(testing::LoadFixture("empty.puzzle"));
  EXPECT_EQ(all.status, SolveStatus::kMultiple);
  EXPECT_EQ(all.worlds.size(), 16u);
}

TEST(SolveTest, SingleQuestionsNarrowTypes) {
  const PuzzleSpec spec = testing::LoadFixture("two_questions.puzzle");
  const SolveResult r = SolveAll(spec);
  // Y Y Y N is the PsAt column alone.
  ASSERT_EQ(r.status, SolveStatus::kUnique);
  EXPECT_EQ(r.worlds[0].types[0], *ExtendedType::FromLabel("PsAt"));
}

TEST(SolveTest, MatchesBruteForceOnRandomPuzzles) {
  testing::Rng rng(1234);
  int with_worlds = 0;
  for (int i = 0; i < 120; ++i) {
    const PuzzleSpec spec = testing::RandomPuzzle(rng);
    const std::vector<World> want = BruteForceWorlds(spec);
    const SolveResult got = SolveAll(spec, {.threads = 1 + i % 3});
    ASSERT_EQ(got.worlds, want) << "puzzle " << i;
    with_worlds += !want.empty();
  }
  // The generator should not be degenerate.
  EXPECT_GT(with_worlds, 30);
}

TEST(SolveTest, ResultsAreInCanonicalOrder) {
  testing::Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    const SolveResult r = SolveAll(testing::RandomPuzzle(rng));
    EXPECT_TRUE(std::is_sorted(r.worlds.begin(), r.worlds.end(), CanonicalLess));
    EXPECT_TRUE(std::adjacent_find(r.worlds.begin(), r.worlds.end()) == r.worlds.end());
  }
}

TEST(SolveTest, MoreAxiomsNeverAddWorlds) {
  testing::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    PuzzleSpec spec = testing::RandomPuzzle(rng);
    const SolveResult before = SolveAll(spec);
    testing::StatementShape shape = testing::ShapeFor(spec.vocabulary, 2);
    shape.allow_speaker = false;
    spec.axioms.push_back(testing::RandomBody(rng, shape));
    const SolveResult after = SolveAll(spec);
    // Both lists are in canonical order.
    EXPECT_TRUE(std::includes(before.worlds.begin(), before.worlds.end(),
                              after.worlds.begin(), after.worlds.end(),
                              CanonicalLess));
  }
}

TEST(SolveTest, HiddenWorldIsAlwaysFound) {
  testing::Rng rng(4242);
  for (int i = 0; i < 40; ++i) {
    PuzzleSpec spec = testing::RandomPuzzle(rng);
    spec.axioms.clear();
    const World hidden = testing::RandomWorld(rng, spec.vocabulary);
    const auto transcript = SimulateTranscript(spec, hidden);
    // Flip whatever the hidden world could not say. Negating the body of a
    // statement complements whether it can be said.
    size_t k = 0;
    for (auto& round : spec.rounds) {
      for (auto& u : round.utterances) {
        const auto& t = transcript[k++];
        if (round.kind == Round::Kind::kQuestion) {
          u.answer = t.answer;
        } else if (!t.consistent) {
          Statement flipped = Not(BeliefBody(u.statement));
          for (const Statement* s = &u.statement; IsBelief(*s); s = &s->children[0]) {
            flipped = Believes(std::move(flipped));
          }
          u.statement = std::move(flipped);
        }
      }
    }
    const SolveResult r = SolveAll(spec);
    EXPECT_NE(std::find(r.worlds.begin(), r.worlds.end(), hidden), r.worlds.end());
  }
}

TEST(SolveTest, DeterministicAcrossThreadCounts) {
  const PuzzleSpec spec = testing::LoadFixture();
  const SolveResult serial = SolveAll(spec, {.threads = 1});
  for (int threads : {2, 3, 8}) {
    const SolveResult par = SolveAll(spec, {.threads = threads});
    EXPECT_EQ(par.worlds, serial.worlds);
    EXPECT_EQ(par.stats.nodes, serial.stats.nodes);
  }
}

TEST(SolveTest, BudgetExceeded) {
  const PuzzleSpec spec = testing::LoadFixture();
  EXPECT_THROW(SolveAll(spec, {.max_nodes = 10}), BudgetExceeded);
  EXPECT_THROW(SolveAll(spec, {.max_nodes = 10, .threads = 4}), BudgetExceeded);
  // Large enough to reach a time check: every world is a solution.
  const PuzzleSpec open =
      ParsePuzzle("persons: A, B, C\nfluent f: bool\nfluent g: bool\n");
  EXPECT_THROW(SolveAll(open, {.max_seconds = 1e-9}), BudgetExceeded);
  EXPECT_NO_THROW(SolveAll(testing::LoadFixture("empty.puzzle"), {.max_nodes = 16}));
}

TEST(ExplainTest, FixtureDerivation) {
  const PuzzleSpec spec = testing::LoadFixture();
  const World w = LoadWorldFile(spec, "asylum_solution.world");
  const auto lines = ExplainSolution(spec, w);
  ASSERT_EQ(lines.size(), 54u);
  // Round 0: the two delusional liars and Grace state facts truthfully.
  EXPECT_EQ(lines[1].decoded, "lover(Beth)");
  EXPECT_EQ(lines[5].decoded, "lover(Fiona)");
  EXPECT_EQ(lines[6].decoded, "lover(Grace)");
  EXPECT_EQ(lines[6].type_label, "PsAt");
  EXPECT_EQ(lines[9].utterance, "patient(Ann)? yes");
  EXPECT_EQ(lines[9].type_label, "PsAt");
  EXPECT_EQ(lines[45].decoded,
            "(exists x . unlocked(x)) and (forall x . unlocked(x) implies doctor(x))");
  EXPECT_NE(FormatExplainLine(lines[45]).find("round 5  Ann [PsAt: sane, truthful]"),
            std::string::npos);
  World bad = w;
  bad.fluents[0][1] = 0;
  EXPECT_THROW(ExplainSolution(spec, bad), std::invalid_argument);
}

TEST(WorldSpaceTest, Size) {
  EXPECT_EQ(WorldSpaceSize(testing::LoadFixture("empty.puzzle")), 16u);
  const PuzzleSpec spec = ParsePuzzle("persons: A, B\nfluent f: bool\nfluent g: {x, y, z}\n");
  EXPECT_EQ(WorldSpaceSize(spec), 16u * 16u * 4u * 9u);
  EXPECT_EQ(BruteForceWorlds(spec).size(), WorldSpaceSize(spec));
}

}  // namespace
}  // namespace islands

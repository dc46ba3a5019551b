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

// The reference checker, the brute-force enumerator and explanations.

#include <limits>
#include <stdexcept>

#include "compiled_puzzle.h"
#include "islands/errors.h"
#include "islands/semantics.h"
#include "islands/solver.h"

namespace islands {
namespace internal {

CompiledPuzzle CompilePuzzle(const PuzzleSpec& puzzle) {
  CompiledPuzzle out;
  const Vocabulary& vocab = puzzle.vocabulary;
  for (const auto& a : puzzle.axioms) out.axioms.push_back(Compile(a, vocab));
  std::vector<uint64_t> counts(vocab.persons.size(), 0);
  for (size_t r = 0; r < puzzle.rounds.size(); ++r) {
    const Round& round = puzzle.rounds[r];
    for (const auto& u : round.utterances) {
      CompiledUtterance cu;
      cu.round = static_cast<int>(r);
      cu.speaker = u.speaker;
      cu.count = counts[u.speaker]++;
      cu.is_belief = IsBelief(u.statement);
      cu.is_question = round.kind == Round::Kind::kQuestion;
      cu.required = !cu.is_question || u.answer == Answer::kYes;
      cu.body = Compile(BeliefBody(u.statement), vocab);
      out.utterances.push_back(std::move(cu));
    }
  }
  return out;
}

namespace {

CheckResult CheckCompiled(const PuzzleSpec& puzzle, const CompiledPuzzle& cp,
                          const World& world) {
  for (size_t i = 0; i < cp.axioms.size(); ++i) {
    if (!Evaluate(cp.axioms[i], world)) {
      return {.consistent = false,
              .axiom = static_cast<int>(i),
              .person = "",
              .message = "axiom " + std::to_string(i + 1) + " is false: " +
                         RenderStatement(puzzle.axioms[i])};
    }
  }
  for (const auto& u : cp.utterances) {
    const AgentState state{world.types[u.speaker], u.count};
    const bool asserts = AssertionRule(CurrentPhases(state), u.is_belief,
                                       Evaluate(u.body, world, u.speaker));
    if (asserts == u.required) continue;
    const std::string& name = puzzle.vocabulary.persons[u.speaker];
    const Round& round = puzzle.rounds[u.round];
    std::string message = "round " + std::to_string(u.round) + ": ";
    if (u.is_question) {
      message += name + " would answer " + (asserts ? "yes" : "no") +
                 " to " + RenderStatement(BindSpeaker(round.question, name)) +
                 ", recorded " +
                 (u.required ? "yes" : "no");
    } else {
      for (const auto& ru : round.utterances) {
        if (ru.speaker == u.speaker) {
          message += name + " could not say " +
                     RenderStatement(BindSpeaker(ru.statement, name));
        }
      }
    }
    return {.consistent = false,
            .round = u.round,
            .person = name,
            .message = std::move(message)};
  }
  return {};
}

}  // namespace
}  // namespace internal

CheckResult CheckWorld(const PuzzleSpec& puzzle, const World& world) {
  CheckWorldShape(puzzle.vocabulary, world);
  return internal::CheckCompiled(puzzle, internal::CompilePuzzle(puzzle), world);
}

uint64_t WorldSpaceSize(const PuzzleSpec& puzzle) {
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  uint64_t size = 1;
  auto mul = [&](uint64_t k) {
    size = (k != 0 && size > kMax / k) ? kMax : size * k;
  };
  const size_t n = puzzle.vocabulary.persons.size();
  for (size_t p = 0; p < n; ++p) mul(ExtendedType::kCount);
  for (const auto& f : puzzle.vocabulary.fluents) {
    for (size_t p = 0; p < n; ++p) mul(f.values.size());
  }
  return size;
}

std::vector<World> BruteForceWorlds(const PuzzleSpec& puzzle) {
  const Vocabulary& vocab = puzzle.vocabulary;
  const internal::CompiledPuzzle cp = internal::CompilePuzzle(puzzle);
  const size_t n = vocab.persons.size();
  const size_t nf = vocab.fluents.size();

  // Odometer over [types..., fluent values...], last position fastest, which
  // yields canonical order.
  std::vector<int> radix;
  for (size_t p = 0; p < n; ++p) radix.push_back(ExtendedType::kCount);
  for (size_t f = 0; f < nf; ++f) {
    for (size_t p = 0; p < n; ++p) {
      radix.push_back(static_cast<int>(vocab.fluents[f].values.size()));
    }
  }
  std::vector<int> digits(radix.size(), 0);
  World world;
  world.types.assign(n, ExtendedType::FromIndex(0));
  world.fluents.assign(nf, std::vector<uint8_t>(n, 0));

  std::vector<World> out;
  for (;;) {
    for (size_t p = 0; p < n; ++p) {
      world.types[p] = ExtendedType::FromIndex(digits[p]);
    }
    for (size_t f = 0; f < nf; ++f) {
      for (size_t p = 0; p < n; ++p) {
        world.fluents[f][p] = static_cast<uint8_t>(digits[n + f * n + p]);
      }
    }
    if (internal::CheckCompiled(puzzle, cp, world).consistent) {
      out.push_back(world);
    }
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0 && ++digits[i] == radix[i]) digits[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

bool CanonicalLess(const World& a, const World& b) {
  for (size_t p = 0; p < a.types.size(); ++p) {
    if (a.types[p] != b.types[p]) return a.types[p] < b.types[p];
  }
  return a.fluents < b.fluents;
}

std::string_view SolveStatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kUnique:
      return "unique";
    case SolveStatus::kNone:
      return "none";
    case SolveStatus::kMultiple:
      return "multiple";
  }
  return "?";
}

std::vector<ReportTriple> Reports(const PuzzleSpec& puzzle, const World& world) {
  const int guilt = puzzle.GuiltFluent();
  std::vector<ReportTriple> out;
  for (size_t p = 0; p < puzzle.vocabulary.persons.size(); ++p) {
    ReportTriple t;
    t.person = puzzle.vocabulary.persons[p];
    t.sanity = world.types[p].sanity_class();
    t.truth = world.types[p].truth_class();
    if (guilt >= 0) {
      t.guilt = puzzle.vocabulary.fluents[guilt].values[world.fluents[guilt][p]];
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ExplainLine> ExplainSolution(const PuzzleSpec& puzzle,
                                         const World& world) {
  const CheckResult check = CheckWorld(puzzle, world);
  if (!check.consistent) {
    throw std::invalid_argument("cannot explain an inconsistent world: " +
                                check.message);
  }
  const Vocabulary& vocab = puzzle.vocabulary;
  std::vector<uint64_t> counts(vocab.persons.size(), 0);
  std::vector<ExplainLine> out;
  for (size_t r = 0; r < puzzle.rounds.size(); ++r) {
    const Round& round = puzzle.rounds[r];
    for (const auto& u : round.utterances) {
      const std::string& name = vocab.persons[u.speaker];
      const AgentState state{world.types[u.speaker], counts[u.speaker]++};
      const Statement said = BindSpeaker(u.statement, name);
      ExplainLine line;
      line.round = static_cast<int>(r);
      line.kind = round.kind;
      line.person = name;
      line.type_label = std::string(state.type.Shifted(state.utterances_made).label());
      line.phases = CurrentPhases(state);
      Statement fact = DecodeAssertion(state, said);
      if (round.kind == Round::Kind::kQuestion) {
        const bool yes = u.answer == Answer::kYes;
        line.utterance = RenderStatement(said) + "? " + (yes ? "yes" : "no");
        // A "no" is a refusal to assert, so it certifies the opposite fact.
        if (!yes) fact = Negate(std::move(fact));
      } else {
        line.utterance = RenderStatement(said);
      }
      line.decoded = RenderStatement(fact);
      out.push_back(std::move(line));
    }
  }
  return out;
}

std::string FormatExplainLine(const ExplainLine& line) {
  std::string out = "round " + std::to_string(line.round) + "  " + line.person;
  out += " [" + line.type_label + ": " + (line.phases.sane ? "sane" : "insane") +
         ", " + (line.phases.truthful ? "truthful" : "lying") + "]  ";
  out += line.utterance;
  out += "  =>  ";
  out += line.decoded;
  return out;
}

}  // namespace islands

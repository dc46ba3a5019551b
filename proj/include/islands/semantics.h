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

// When does a person say something?
//
// A person believes a fact iff it is true and they are currently sane, or it
// is false and they are currently insane. A truthful person asserts what they
// believe; a lying person asserts what they do not believe. For a bare fact S
// this gives
//
//   asserts(S)  <=>  (truthful == sane) == S
//
// For "I believe S" the insanity cancels: an insane person believes that
// they believe the opposite of their actual belief, so
//
//   asserts(believes(S))  <=>  truthful == S
//
// whatever the sanity. Nested beliefs collapse to the single case.
#ifndef ISLANDS_SEMANTICS_H_
#define ISLANDS_SEMANTICS_H_

#include <utility>
#include <vector>

#include "islands/agent.h"
#include "islands/formula.h"
#include "islands/statement.h"

namespace islands {

// The assertion law on already-evaluated content.
inline bool AssertionRule(Phases phases, bool is_belief, bool content) {
  const bool says_truth = is_belief ? phases.truthful
                                    : phases.truthful == phases.sane;
  return says_truth == content;
}

// `stmt` may mention `me`, bound to `speaker`. Throws SemanticError for open
// statements or believes below the outermost position.
bool WouldAssert(const AgentState& state, const Vocabulary& vocabulary,
                 const World& world, const Statement& stmt, int speaker);

// Yes iff the person would assert the question's statement. The returned
// state has advanced by one utterance.
std::pair<Answer, AgentState> AnswerYesNo(const AgentState& state,
                                          const Vocabulary& vocabulary,
                                          const World& world,
                                          const Statement& question,
                                          int speaker);

struct PlannedUtterance {
  enum class Kind { kQuestion, kAssertion };
  Kind kind;
  Statement statement;
};

struct UtteranceOutcome {
  PlannedUtterance::Kind kind;
  Answer answer = Answer::kNo;  // kQuestion
  bool consistent = false;      // kAssertion: uttering it fits the type
  Phases phases{};              // at the time of the utterance
};

// Runs one person through a plan, starting `state.utterances_made` after the
// epoch. Every utterance advances the counter once.
std::vector<UtteranceOutcome> SimulatePerson(const AgentState& state,
                                             const Vocabulary& vocabulary,
                                             const World& world, int speaker,
                                             const std::vector<PlannedUtterance>& plan);

// The fact an utterance guarantees, given the speaker's phases: the belief
// body (or bare statement) when the speaker's assertions track the truth,
// its negation otherwise. `me` is left unbound.
Statement DecodeAssertion(const AgentState& state, const Statement& stmt);

}  // namespace islands

#endif  // ISLANDS_SEMANTICS_H_

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

#include "islands/errors.h"

namespace islands {

bool WouldAssert(const AgentState& state, const Vocabulary& vocabulary,
                 const World& world, const Statement& stmt, int speaker) {
  ValidateStatement(stmt, StatementContext{.vocabulary = &vocabulary});
  const Statement& body = BeliefBody(stmt);
  const bool content = EvalClosed(vocabulary, world, body, speaker);
  return AssertionRule(CurrentPhases(state), IsBelief(stmt), content);
}

std::pair<Answer, AgentState> AnswerYesNo(const AgentState& state,
                                          const Vocabulary& vocabulary,
                                          const World& world,
                                          const Statement& question,
                                          int speaker) {
  const bool yes = WouldAssert(state, vocabulary, world, question, speaker);
  return {yes ? Answer::kYes : Answer::kNo, Advance(state)};
}

std::vector<UtteranceOutcome> SimulatePerson(
    const AgentState& state, const Vocabulary& vocabulary, const World& world,
    int speaker, const std::vector<PlannedUtterance>& plan) {
  std::vector<UtteranceOutcome> out;
  out.reserve(plan.size());
  AgentState current = state;
  for (const auto& step : plan) {
    UtteranceOutcome o{.kind = step.kind, .phases = CurrentPhases(current)};
    if (step.kind == PlannedUtterance::Kind::kQuestion) {
      auto [answer, next] =
          AnswerYesNo(current, vocabulary, world, step.statement, speaker);
      o.answer = answer;
      current = next;
    } else {
      o.consistent =
          WouldAssert(current, vocabulary, world, step.statement, speaker);
      current = Advance(current);
    }
    out.push_back(o);
  }
  return out;
}

Statement DecodeAssertion(const AgentState& state, const Statement& stmt) {
  ValidateStatement(stmt, StatementContext{});
  const Statement& body = BeliefBody(stmt);
  // Asserting S is consistent iff S's value equals AssertionRule(.., true).
  const bool tracks_truth =
      AssertionRule(CurrentPhases(state), IsBelief(stmt), true);
  return tracks_truth ? body : Negate(body);
}

}  // namespace islands

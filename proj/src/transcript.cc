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

#include "islands/transcript.h"

#include <algorithm>

#include "json.hpp"

namespace islands {

std::vector<SimulatedUtterance> SimulateTranscript(const PuzzleSpec& puzzle,
                                                   const World& world) {
  CheckWorldShape(puzzle.vocabulary, world);
  const size_t n = puzzle.persons().size();

  // One plan per person; remember where each step came from.
  struct Origin {
    int round;
    const Utterance* utterance;
  };
  std::vector<std::vector<PlannedUtterance>> plans(n);
  std::vector<std::vector<Origin>> origins(n);
  for (size_t r = 0; r < puzzle.rounds.size(); ++r) {
    const Round& round = puzzle.rounds[r];
    const auto kind = round.kind == Round::Kind::kQuestion
                          ? PlannedUtterance::Kind::kQuestion
                          : PlannedUtterance::Kind::kAssertion;
    for (const auto& u : round.utterances) {
      plans[u.speaker].push_back({kind, u.statement});
      origins[u.speaker].push_back({static_cast<int>(r), &u});
    }
  }

  std::vector<std::vector<UtteranceOutcome>> outcomes(n);
  for (size_t p = 0; p < n; ++p) {
    outcomes[p] = SimulatePerson(AgentState{world.types[p], 0},
                                 puzzle.vocabulary, world, static_cast<int>(p),
                                 plans[p]);
  }

  // Back to file order.
  std::vector<size_t> next(n, 0);
  std::vector<SimulatedUtterance> out;
  for (size_t r = 0; r < puzzle.rounds.size(); ++r) {
    const Round& round = puzzle.rounds[r];
    for (const auto& u : round.utterances) {
      const size_t i = next[u.speaker]++;
      const UtteranceOutcome& o = outcomes[u.speaker][i];
      const std::string& name = puzzle.persons()[u.speaker];
      out.push_back(SimulatedUtterance{
          .round = static_cast<int>(r),
          .kind = round.kind,
          .person = name,
          .statement = RenderStatement(BindSpeaker(u.statement, name)),
          .answer = o.answer,
          .consistent = o.consistent,
          .recorded = u.answer,
      });
    }
  }
  return out;
}

std::string RenderTranscriptText(const PuzzleSpec& puzzle,
                                 const std::vector<SimulatedUtterance>& lines) {
  size_t width = 0;
  for (const auto& p : puzzle.persons()) width = std::max(width, p.size());
  std::string out;
  for (const auto& l : lines) {
    std::string name = l.person;
    name.resize(width, ' ');
    out += "round " + std::to_string(l.round) + "  " + name + "  ";
    if (l.kind == Round::Kind::kQuestion) {
      out += l.statement + "? ";
      out += l.answer == Answer::kYes ? "yes" : "no";
      if (l.recorded && *l.recorded != l.answer) {
        out += std::string("  (recorded ") +
               (*l.recorded == Answer::kYes ? "yes" : "no") + ")";
      }
    } else {
      out += l.statement + "  ";
      out += l.consistent ? "ok" : "impossible";
    }
    out += "\n";
  }
  return out;
}

std::string RenderTranscriptJson(const std::string& digest,
                                 const std::vector<SimulatedUtterance>& lines) {
  using Json = nlohmann::ordered_json;
  Json utterances = Json::array();
  for (const auto& l : lines) {
    Json u;
    u["round"] = l.round;
    u["person"] = l.person;
    u["statement"] = l.statement;
    if (l.kind == Round::Kind::kQuestion) {
      u["answer"] = l.answer == Answer::kYes ? "yes" : "no";
      if (l.recorded) u["recorded"] = *l.recorded == Answer::kYes ? "yes" : "no";
    } else {
      u["consistent"] = l.consistent;
    }
    utterances.push_back(std::move(u));
  }
  Json doc;
  doc["puzzle_digest"] = "sha256:" + digest;
  doc["transcript"] = std::move(utterances);
  return doc.dump(2) + "\n";
}

}  // namespace islands

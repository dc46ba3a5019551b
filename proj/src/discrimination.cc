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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "islands/errors.h"
#include "islands/semantics.h"

namespace islands {
namespace {

void CheckNode(const Statement& s) {
  switch (s.kind) {
    case StatementKind::kAtom:
      if (!BuiltinFromName(s.predicate) || s.term.kind != Term::Kind::kSpeaker) {
        throw SemanticError(
            "unsupported question: only built-in predicates about 'me'",
            RenderStatement(s));
      }
      return;
    case StatementKind::kExists:
    case StatementKind::kForAll:
    case StatementKind::kAtLeast:
      throw SemanticError("unsupported question: quantifiers",
                          RenderStatement(s));
    default:
      for (const auto& c : s.children) CheckNode(c);
  }
}

const Vocabulary& SelfVocabulary() {
  static const Vocabulary v{.persons = {"self"}, .fluents = {}};
  return v;
}

}  // namespace

void CheckSelfReferential(const Statement& question) {
  ValidateStatement(question, StatementContext{});
  CheckNode(BeliefBody(question));
}

Signature AnswerSignature(ExtendedType epoch_type,
                          const std::vector<Statement>& questions,
                          uint64_t offset) {
  for (const auto& q : questions) CheckSelfReferential(q);
  const World world{.types = {epoch_type}, .fluents = {}};
  AgentState state{epoch_type, offset};
  Signature out;
  for (const auto& q : questions) {
    auto [answer, next] = AnswerYesNo(state, SelfVocabulary(), world, q, 0);
    out += AnswerChar(answer);
    state = next;
  }
  return out;
}

bool TypePartition::discrete() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const auto& kv) { return kv.second.size() == 1; });
}

TypePartition PartitionTypes(const std::vector<Statement>& questions,
                             uint64_t offset) {
  TypePartition out;
  for (ExtendedType label : ExtendedType::All()) {
    const ExtendedType epoch = label.Shifted(offset);
    out.classes[AnswerSignature(epoch, questions, offset)].push_back(label);
  }
  return out;
}

std::vector<ExtendedType> FilterTypesBySignature(
    const std::vector<Statement>& questions, const std::vector<Answer>& answers,
    uint64_t offset) {
  if (questions.size() != answers.size()) {
    throw std::invalid_argument("got " + std::to_string(answers.size()) +
                                " answers for " +
                                std::to_string(questions.size()) + " questions");
  }
  Signature want;
  for (Answer a : answers) want += AnswerChar(a);
  std::vector<ExtendedType> out;
  for (ExtendedType label : ExtendedType::All()) {
    if (AnswerSignature(label.Shifted(offset), questions, offset) == want) {
      out.push_back(label);
    }
  }
  return out;
}

Statement PatientQuestion() { return Atom("patient", Term::Speaker()); }

Statement BelievePatientQuestion() { return Believes(PatientQuestion()); }

std::string RenderTables() {
  const Statement q = PatientQuestion();
  const Statement b = BelievePatientQuestion();
  std::ostringstream out;

  out << "Table 1. Non-switching types, questions [Q, B], offset 0\n";
  out << "  Q = " << RenderStatement(q) << "\n";
  out << "  B = " << RenderStatement(b) << "\n\n";
  out << "  type                  Q  B\n";
  struct Row {
    const char* name;
    const char* label;
    bool erratum;
  };
  for (const Row& row : {Row{"sane truth-teller", "ST", false},
                         Row{"sane liar", "SL", true},
                         Row{"insane truth-teller", "DT", false},
                         Row{"insane liar", "DL", true}}) {
    const Signature sig =
        AnswerSignature(*ExtendedType::FromLabel(row.label), {q, b}, 0);
    std::string name = row.name;
    name.resize(20, ' ');
    out << "  " << name << "  " << sig[0] << "  " << sig[1]
        << (row.erratum ? "  *" : "") << "\n";
  }
  out << "\n  * Erratum: answers to B depend only on the truthful phase, so a\n"
         "    sane liar says Y and an insane liar says N. The classic four-row\n"
         "    version of this table lists Y N and Y Y for these rows; its two\n"
         "    B cells for liars contradict Table 2.\n\n";

  out << "Table 2. All types, questions [Q, Q, B, B], offset 0\n\n";
  const std::vector<Statement> qqbb = {q, q, b, b};
  std::vector<Signature> sigs;
  // Columns are five wide; no trailing blanks.
  std::string header = "   ";
  for (ExtendedType t : ExtendedType::All()) {
    std::string label(t.label());
    label.resize(5, ' ');
    header += label;
    sigs.push_back(AnswerSignature(t, qqbb, 0));
  }
  header.erase(header.find_last_not_of(' ') + 1);
  out << header << "\n";
  const char* row_names[] = {"Q", "Q", "B", "B"};
  for (size_t i = 0; i < qqbb.size(); ++i) {
    std::string row = std::string(row_names[i]) + "  ";
    for (const auto& s : sigs) row += std::string(1, s[i]) + "    ";
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << "\n";
  }
  out << "\n";

  out << "Table 3. Classes under [Q, Q, B], offset 1 (labels at the first "
         "question)\n\n";
  const TypePartition part = PartitionTypes({q, q, b}, 1);
  std::vector<std::pair<Signature, std::vector<ExtendedType>>> classes(
      part.classes.begin(), part.classes.end());
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return x.second.front() < y.second.front();
  });
  for (const auto& [sig, types] : classes) {
    out << "  " << sig << " → ";
    for (size_t i = 0; i < types.size(); ++i) {
      out << (i ? ", " : "") << types[i].label();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace islands

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

// Which types can a sequence of self-referential yes/no questions tell
// apart?
//
// A question here may only use built-in predicates about the speaker
// ("patient(me)", "believes(patient(me))"), so its answer depends on the
// person's type and phases alone.
//
// `offset` is the number of utterances the person made before the first
// question. AnswerSignature takes the type at the epoch. PartitionTypes and
// FilterTypesBySignature report types labelled by their phases at the first
// question, i.e. the epoch type shifted by `offset`; that is the convention
// of the "before round one" labels in the asylum transcript.
#ifndef ISLANDS_DISCRIMINATION_H_
#define ISLANDS_DISCRIMINATION_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "islands/agent.h"
#include "islands/statement.h"

namespace islands {

// One 'Y' or 'N' per question.
using Signature = std::string;

// Throws SemanticError for questions that depend on anything but the
// speaker's type.
void CheckSelfReferential(const Statement& question);

Signature AnswerSignature(ExtendedType epoch_type,
                          const std::vector<Statement>& questions,
                          uint64_t offset);

struct TypePartition {
  // Types in canonical order within each class.
  std::map<Signature, std::vector<ExtendedType>> classes;

  bool discrete() const;
};

TypePartition PartitionTypes(const std::vector<Statement>& questions,
                             uint64_t offset);

// Throws std::invalid_argument if the lengths differ.
std::vector<ExtendedType> FilterTypesBySignature(
    const std::vector<Statement>& questions, const std::vector<Answer>& answers,
    uint64_t offset);

// The standard questions: "are you a patient?" and "do you believe you are a
// patient?".
Statement PatientQuestion();
Statement BelievePatientQuestion();

// Fixed-layout text tables: the four non-switching types under [Q, B], all
// 16 types under [Q, Q, B, B] at offset 0, and the [Q, Q, B] classes at
// offset 1.
std::string RenderTables();

}  // namespace islands

#endif  // ISLANDS_DISCRIMINATION_H_

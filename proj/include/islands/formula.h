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

// Worlds and the evaluation of believes-free statements against them.
#ifndef ISLANDS_FORMULA_H_
#define ISLANDS_FORMULA_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "islands/agent.h"
#include "islands/statement.h"

namespace islands {

// A complete assignment. Types are anchored at the epoch; fluent values are
// indices into the fluent's domain, stored fluent-major:
// fluents[f][person].
struct World {
  std::vector<ExtendedType> types;
  std::vector<std::vector<uint8_t>> fluents;

  friend bool operator==(const World&, const World&) = default;
};

// Throws SemanticError if the world does not match the vocabulary's shape or
// a fluent value lies outside its domain.
void CheckWorldShape(const Vocabulary& vocabulary, const World& world);

// Derived predicates. patient = delusional or partial; doctor = sane.
bool HoldsBuiltin(Builtin builtin, ExtendedType type);

// A statement resolved against a vocabulary: names become indices and bound
// variables become environment slots.
struct Formula {
  enum class Op : uint8_t {
    kBuiltin,
    kFluent,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kExists,
    kForAll,
    kAtLeast,
  };
  enum class TermKind : uint8_t { kPerson, kSlot, kSpeaker };

  Op op = Op::kBuiltin;
  Builtin builtin = Builtin::kPatient;
  int fluent = -1;
  int value = -1;
  TermKind term_kind = TermKind::kPerson;
  int term_index = -1;  // person index or environment slot
  int slot = -1;        // quantifiers: the slot they bind
  uint32_t count = 0;
  std::vector<Formula> children;
};

constexpr int kMaxQuantifierDepth = 32;

// Compiles a believes-free statement. Throws SemanticError on believes,
// unknown names or excessive nesting.
Formula Compile(const Statement& s, const Vocabulary& vocabulary);

// Classical evaluation. `speaker` binds `me`; evaluating `me` without a
// speaker throws SemanticError.
bool Evaluate(const Formula& f, const World& world, int speaker = -1);

// Convenience: compile then evaluate.
bool EvalClosed(const Vocabulary& vocabulary, const World& world,
                const Statement& s, std::optional<int> speaker = std::nullopt);

// Three-valued (Kleene) evaluation over a partial assignment.
enum class Truth : int8_t { kFalse, kTrue, kUnknown };

struct PartialWorld {
  static constexpr int8_t kUnassigned = -1;

  std::vector<int8_t> types;                // type index or kUnassigned
  std::vector<std::vector<int8_t>> fluents;  // value index or kUnassigned

  static PartialWorld Empty(const Vocabulary& vocabulary);
};

Truth EvaluatePartial(const Formula& f, const PartialWorld& world,
                      int speaker = -1);

}  // namespace islands

#endif  // ISLANDS_FORMULA_H_

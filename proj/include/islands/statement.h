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

// The statement language.
//
//   stmt := 'believes' '(' stmt ')' | body
//   body := 'not' body | body 'and' body | body 'or' body
//         | body 'implies' body
//         | ('exists' | 'forall') IDENT '.' body
//         | 'atleast' NAT IDENT '.' body
//         | PRED '(' term (',' VALUE)? ')' | '(' body ')'
//   term := PERSON | VARIABLE | 'me'
//
// Precedence is not > and > or > implies; implies associates to the right
// and quantifier bodies extend as far right as possible. Chains of the same
// connective parse into a single n-ary node. `believes` may only wrap the
// whole statement.
#ifndef ISLANDS_STATEMENT_H_
#define ISLANDS_STATEMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace islands {

struct Term {
  enum class Kind : uint8_t { kPerson, kVariable, kSpeaker };

  Kind kind = Kind::kPerson;
  std::string name;  // empty for kSpeaker

  static Term Person(std::string name) { return {Kind::kPerson, std::move(name)}; }
  static Term Variable(std::string name) {
    return {Kind::kVariable, std::move(name)};
  }
  static Term Speaker() { return {Kind::kSpeaker, ""}; }

  friend bool operator==(const Term&, const Term&) = default;
};

enum class StatementKind : uint8_t {
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kExists,
  kForAll,
  kAtLeast,
  kBelieves,
};

struct Statement {
  StatementKind kind = StatementKind::kAtom;
  // kAtom
  std::string predicate;
  Term term;
  std::string value;  // empty when the atom has no value argument
  // kExists, kForAll, kAtLeast
  std::string variable;
  uint32_t count = 0;  // kAtLeast only
  // kNot, kBelieves, quantifiers: one child; kImplies: two; kAnd/kOr: >= 2
  std::vector<Statement> children;

  friend bool operator==(const Statement&, const Statement&) = default;
};

Statement Atom(std::string predicate, Term term, std::string value = "");
Statement Not(Statement s);
// Not(s), except that not(not(x)) collapses to x.
Statement Negate(Statement s);
Statement And(std::vector<Statement> items);
Statement Or(std::vector<Statement> items);
Statement Implies(Statement premise, Statement conclusion);
Statement Exists(std::string variable, Statement body);
Statement ForAll(std::string variable, Statement body);
Statement AtLeast(uint32_t count, std::string variable, Statement body);
Statement Believes(Statement body);

// Built-in predicates, derived from a person's type.
enum class Builtin : uint8_t {
  kPatient,
  kDoctor,
  kSane,
  kDelusional,
  kPartial,
  kTruthteller,
  kLiar,
  kAlternator,
};

std::optional<Builtin> BuiltinFromName(std::string_view name);
bool IsKeyword(std::string_view word);

struct FluentDecl {
  std::string name;
  bool is_bool = false;
  // Domain in declaration order; {"false", "true"} for boolean fluents.
  std::vector<std::string> values;

  int ValueIndex(std::string_view value) const;
};

// Names a puzzle declares: who exists and which fluents they carry.
struct Vocabulary {
  std::vector<std::string> persons;
  std::vector<FluentDecl> fluents;

  int PersonIndex(std::string_view name) const;
  int FluentIndex(std::string_view name) const;
};

struct StatementContext {
  // When set, persons and predicates must be declared in it.
  const Vocabulary* vocabulary = nullptr;
  bool allow_believes = true;
  bool allow_speaker = true;
};

// Throws ParseError on syntax errors and SemanticError on misplaced
// believes, unbound variables and (with a vocabulary) undeclared names.
// `line` and `column` locate the first character of `text` for error
// reporting inside larger files.
Statement ParseStatement(std::string_view text,
                         const StatementContext& context = {}, int line = 1,
                         int column = 1);

// Checks a statement against a context without re-parsing. Throws
// SemanticError naming the offending node path.
void ValidateStatement(const Statement& s, const StatementContext& context);

// Canonical text. ParseStatement(RenderStatement(s)) == s for every valid s.
std::string RenderStatement(const Statement& s);

// Replaces every `me` with the given person.
Statement BindSpeaker(const Statement& s, const std::string& person);

// Strips outer believes wrappers (believes(believes(S)) -> S). Returns the
// statement itself when it has none.
const Statement& BeliefBody(const Statement& s);
inline bool IsBelief(const Statement& s) {
  return s.kind == StatementKind::kBelieves;
}

}  // namespace islands

#endif  // ISLANDS_STATEMENT_H_

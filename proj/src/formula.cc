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

#include "islands/formula.h"

#include <array>
#include <string>

#include "islands/errors.h"

namespace islands {

void CheckWorldShape(const Vocabulary& vocabulary, const World& world) {
  const size_t n = vocabulary.persons.size();
  if (world.types.size() != n) {
    throw SemanticError("world assigns " + std::to_string(world.types.size()) +
                        " types for " + std::to_string(n) + " persons");
  }
  if (world.fluents.size() != vocabulary.fluents.size()) {
    throw SemanticError("world has the wrong number of fluents");
  }
  for (size_t f = 0; f < world.fluents.size(); ++f) {
    const FluentDecl& decl = vocabulary.fluents[f];
    if (world.fluents[f].size() != n) {
      throw SemanticError("fluent '" + decl.name + "' is not assigned for every person");
    }
    for (uint8_t v : world.fluents[f]) {
      if (v >= decl.values.size()) {
        throw SemanticError("value out of domain for fluent '" + decl.name + "'");
      }
    }
  }
}

bool HoldsBuiltin(Builtin builtin, ExtendedType type) {
  switch (builtin) {
    case Builtin::kPatient:
      return type.sanity_class() != SanityClass::kSane;
    case Builtin::kDoctor:
      return type.sanity_class() == SanityClass::kSane;
    case Builtin::kSane:
      return type.sanity_class() == SanityClass::kSane;
    case Builtin::kDelusional:
      return type.sanity_class() == SanityClass::kDelusional;
    case Builtin::kPartial:
      return type.sanity_class() == SanityClass::kPartial;
    case Builtin::kTruthteller:
      return type.truth_class() == TruthClass::kTruthteller;
    case Builtin::kLiar:
      return type.truth_class() == TruthClass::kLiar;
    case Builtin::kAlternator:
      return type.truth_class() == TruthClass::kAlternator;
  }
  return false;
}

namespace {

class Compiler {
 public:
  explicit Compiler(const Vocabulary& vocabulary) : vocabulary_(vocabulary) {}

  Formula Run(const Statement& s) {
    switch (s.kind) {
      case StatementKind::kBelieves:
        throw SemanticError("believes cannot be evaluated as a fact",
                            RenderStatement(s));
      case StatementKind::kAtom:
        return CompileAtom(s);
      case StatementKind::kNot:
        return WithChildren(Formula::Op::kNot, s);
      case StatementKind::kAnd:
        return WithChildren(Formula::Op::kAnd, s);
      case StatementKind::kOr:
        return WithChildren(Formula::Op::kOr, s);
      case StatementKind::kImplies:
        return WithChildren(Formula::Op::kImplies, s);
      case StatementKind::kExists:
      case StatementKind::kForAll:
      case StatementKind::kAtLeast: {
        if (static_cast<int>(scope_.size()) >= kMaxQuantifierDepth) {
          throw SemanticError("quantifiers nested too deeply");
        }
        Formula f;
        f.op = s.kind == StatementKind::kExists   ? Formula::Op::kExists
               : s.kind == StatementKind::kForAll ? Formula::Op::kForAll
                                                  : Formula::Op::kAtLeast;
        f.count = s.count;
        f.slot = static_cast<int>(scope_.size());
        scope_.push_back(s.variable);
        f.children.push_back(Run(s.children.at(0)));
        scope_.pop_back();
        return f;
      }
    }
    throw SemanticError("unknown statement kind");
  }

 private:
  Formula WithChildren(Formula::Op op, const Statement& s) {
    Formula f;
    f.op = op;
    f.children.reserve(s.children.size());
    for (const auto& c : s.children) f.children.push_back(Run(c));
    return f;
  }

  Formula CompileAtom(const Statement& s) {
    Formula f;
    ResolveTerm(s.term, f);
    if (auto b = BuiltinFromName(s.predicate)) {
      if (!s.value.empty()) {
        throw SemanticError("built-in predicate takes no value", s.predicate);
      }
      f.op = Formula::Op::kBuiltin;
      f.builtin = *b;
      return f;
    }
    const int fi = vocabulary_.FluentIndex(s.predicate);
    if (fi < 0) {
      throw SemanticError("undeclared predicate '" + s.predicate + "'",
                          s.predicate);
    }
    const FluentDecl& decl = vocabulary_.fluents[fi];
    f.op = Formula::Op::kFluent;
    f.fluent = fi;
    if (decl.is_bool) {
      if (!s.value.empty()) {
        throw SemanticError("boolean fluent takes no value", s.predicate);
      }
      f.value = 1;
    } else {
      f.value = decl.ValueIndex(s.value);
      if (f.value < 0) {
        throw SemanticError("'" + s.value + "' is not a value of fluent '" +
                                s.predicate + "'",
                            s.predicate);
      }
    }
    return f;
  }

  void ResolveTerm(const Term& t, Formula& f) const {
    switch (t.kind) {
      case Term::Kind::kSpeaker:
        f.term_kind = Formula::TermKind::kSpeaker;
        return;
      case Term::Kind::kVariable:
      case Term::Kind::kPerson:
        // Innermost binding wins.
        for (int i = static_cast<int>(scope_.size()) - 1; i >= 0; --i) {
          if (scope_[i] == t.name) {
            f.term_kind = Formula::TermKind::kSlot;
            f.term_index = i;
            return;
          }
        }
        if (t.kind == Term::Kind::kVariable) {
          throw SemanticError("unbound variable '" + t.name + "'", t.name);
        }
        f.term_kind = Formula::TermKind::kPerson;
        f.term_index = vocabulary_.PersonIndex(t.name);
        if (f.term_index < 0) {
          throw SemanticError("unknown person '" + t.name + "'", t.name);
        }
        return;
    }
  }

  const Vocabulary& vocabulary_;
  std::vector<std::string> scope_;
};

using Env = std::array<int, kMaxQuantifierDepth>;

int ResolvePerson(const Formula& f, const Env& env, int speaker) {
  switch (f.term_kind) {
    case Formula::TermKind::kPerson:
      return f.term_index;
    case Formula::TermKind::kSlot:
      return env[f.term_index];
    case Formula::TermKind::kSpeaker:
      if (speaker < 0) throw SemanticError("'me' used without a speaker");
      return speaker;
  }
  return -1;
}

bool Eval(const Formula& f, const World& w, int speaker, Env& env) {
  switch (f.op) {
    case Formula::Op::kBuiltin:
      return HoldsBuiltin(f.builtin, w.types[ResolvePerson(f, env, speaker)]);
    case Formula::Op::kFluent:
      return w.fluents[f.fluent][ResolvePerson(f, env, speaker)] == f.value;
    case Formula::Op::kNot:
      return !Eval(f.children[0], w, speaker, env);
    case Formula::Op::kAnd:
      for (const auto& c : f.children) {
        if (!Eval(c, w, speaker, env)) return false;
      }
      return true;
    case Formula::Op::kOr:
      for (const auto& c : f.children) {
        if (Eval(c, w, speaker, env)) return true;
      }
      return false;
    case Formula::Op::kImplies:
      return !Eval(f.children[0], w, speaker, env) ||
             Eval(f.children[1], w, speaker, env);
    case Formula::Op::kExists:
    case Formula::Op::kForAll:
    case Formula::Op::kAtLeast: {
      const int n = static_cast<int>(w.types.size());
      uint32_t hits = 0;
      for (int p = 0; p < n; ++p) {
        env[f.slot] = p;
        if (Eval(f.children[0], w, speaker, env)) {
          ++hits;
          if (f.op == Formula::Op::kExists) return true;
        } else if (f.op == Formula::Op::kForAll) {
          return false;
        }
      }
      if (f.op == Formula::Op::kExists) return false;
      if (f.op == Formula::Op::kForAll) return true;
      return hits >= f.count;
    }
  }
  return false;
}

Truth FromBool(bool b) { return b ? Truth::kTrue : Truth::kFalse; }

Truth EvalPartial(const Formula& f, const PartialWorld& w, int speaker,
                  Env& env) {
  switch (f.op) {
    case Formula::Op::kBuiltin: {
      const int8_t t = w.types[ResolvePerson(f, env, speaker)];
      if (t == PartialWorld::kUnassigned) return Truth::kUnknown;
      return FromBool(HoldsBuiltin(f.builtin, ExtendedType::FromIndex(t)));
    }
    case Formula::Op::kFluent: {
      const int8_t v = w.fluents[f.fluent][ResolvePerson(f, env, speaker)];
      if (v == PartialWorld::kUnassigned) return Truth::kUnknown;
      return FromBool(v == f.value);
    }
    case Formula::Op::kNot: {
      const Truth t = EvalPartial(f.children[0], w, speaker, env);
      if (t == Truth::kUnknown) return t;
      return t == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
    }
    case Formula::Op::kAnd: {
      Truth acc = Truth::kTrue;
      for (const auto& c : f.children) {
        const Truth t = EvalPartial(c, w, speaker, env);
        if (t == Truth::kFalse) return t;
        if (t == Truth::kUnknown) acc = t;
      }
      return acc;
    }
    case Formula::Op::kOr: {
      Truth acc = Truth::kFalse;
      for (const auto& c : f.children) {
        const Truth t = EvalPartial(c, w, speaker, env);
        if (t == Truth::kTrue) return t;
        if (t == Truth::kUnknown) acc = t;
      }
      return acc;
    }
    case Formula::Op::kImplies: {
      const Truth a = EvalPartial(f.children[0], w, speaker, env);
      if (a == Truth::kFalse) return Truth::kTrue;
      const Truth b = EvalPartial(f.children[1], w, speaker, env);
      if (b == Truth::kTrue) return Truth::kTrue;
      if (a == Truth::kTrue && b == Truth::kFalse) return Truth::kFalse;
      return Truth::kUnknown;
    }
    case Formula::Op::kExists:
    case Formula::Op::kForAll:
    case Formula::Op::kAtLeast: {
      const int n = static_cast<int>(w.types.size());
      uint32_t yes = 0;
      uint32_t maybe = 0;
      for (int p = 0; p < n; ++p) {
        env[f.slot] = p;
        const Truth t = EvalPartial(f.children[0], w, speaker, env);
        if (t == Truth::kTrue) {
          ++yes;
          if (f.op == Formula::Op::kExists) return Truth::kTrue;
        } else if (t == Truth::kFalse) {
          if (f.op == Formula::Op::kForAll) return Truth::kFalse;
        } else {
          ++maybe;
        }
      }
      if (f.op == Formula::Op::kExists) {
        return maybe > 0 ? Truth::kUnknown : Truth::kFalse;
      }
      if (f.op == Formula::Op::kForAll) {
        return maybe > 0 ? Truth::kUnknown : Truth::kTrue;
      }
      if (yes >= f.count) return Truth::kTrue;
      if (yes + maybe < f.count) return Truth::kFalse;
      return Truth::kUnknown;
    }
  }
  return Truth::kUnknown;
}

}  // namespace

Formula Compile(const Statement& s, const Vocabulary& vocabulary) {
  return Compiler(vocabulary).Run(s);
}

bool Evaluate(const Formula& f, const World& world, int speaker) {
  Env env{};
  return Eval(f, world, speaker, env);
}

bool EvalClosed(const Vocabulary& vocabulary, const World& world,
                const Statement& s, std::optional<int> speaker) {
  CheckWorldShape(vocabulary, world);
  return Evaluate(Compile(s, vocabulary), world, speaker.value_or(-1));
}

PartialWorld PartialWorld::Empty(const Vocabulary& vocabulary) {
  PartialWorld w;
  const size_t n = vocabulary.persons.size();
  w.types.assign(n, kUnassigned);
  w.fluents.assign(vocabulary.fluents.size(),
                   std::vector<int8_t>(n, kUnassigned));
  return w;
}

Truth EvaluatePartial(const Formula& f, const PartialWorld& world,
                      int speaker) {
  Env env{};
  return EvalPartial(f, world, speaker, env);
}

}  // namespace islands

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

#include "islands/statement.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "islands/errors.h"

namespace islands {

Statement Atom(std::string predicate, Term term, std::string value) {
  Statement s;
  s.kind = StatementKind::kAtom;
  s.predicate = std::move(predicate);
  s.term = std::move(term);
  s.value = std::move(value);
  return s;
}

Statement Not(Statement inner) {
  Statement s;
  s.kind = StatementKind::kNot;
  s.children.push_back(std::move(inner));
  return s;
}

Statement Negate(Statement s) {
  if (s.kind == StatementKind::kNot) return std::move(s.children.front());
  return Not(std::move(s));
}

Statement And(std::vector<Statement> items) {
  Statement s;
  s.kind = StatementKind::kAnd;
  s.children = std::move(items);
  return s;
}

Statement Or(std::vector<Statement> items) {
  Statement s;
  s.kind = StatementKind::kOr;
  s.children = std::move(items);
  return s;
}

Statement Implies(Statement premise, Statement conclusion) {
  Statement s;
  s.kind = StatementKind::kImplies;
  s.children.push_back(std::move(premise));
  s.children.push_back(std::move(conclusion));
  return s;
}

namespace {

Statement Quantifier(StatementKind kind, uint32_t count, std::string variable,
                     Statement body) {
  Statement s;
  s.kind = kind;
  s.count = count;
  s.variable = std::move(variable);
  s.children.push_back(std::move(body));
  return s;
}

}  // namespace

Statement Exists(std::string variable, Statement body) {
  return Quantifier(StatementKind::kExists, 0, std::move(variable),
                    std::move(body));
}

Statement ForAll(std::string variable, Statement body) {
  return Quantifier(StatementKind::kForAll, 0, std::move(variable),
                    std::move(body));
}

Statement AtLeast(uint32_t count, std::string variable, Statement body) {
  return Quantifier(StatementKind::kAtLeast, count, std::move(variable),
                    std::move(body));
}

Statement Believes(Statement body) {
  Statement s;
  s.kind = StatementKind::kBelieves;
  s.children.push_back(std::move(body));
  return s;
}

std::optional<Builtin> BuiltinFromName(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Builtin>, 8> kNames =
      {{{"patient", Builtin::kPatient},
        {"doctor", Builtin::kDoctor},
        {"sane", Builtin::kSane},
        {"delusional", Builtin::kDelusional},
        {"partial", Builtin::kPartial},
        {"truthteller", Builtin::kTruthteller},
        {"liar", Builtin::kLiar},
        {"alternator", Builtin::kAlternator}}};
  for (const auto& [n, b] : kNames) {
    if (n == name) return b;
  }
  return std::nullopt;
}

bool IsKeyword(std::string_view word) {
  static constexpr std::array<std::string_view, 9> kKeywords = {
      "believes", "not",    "and",     "or", "implies",
      "exists",   "forall", "atleast", "me"};
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

int FluentDecl::ValueIndex(std::string_view v) const {
  auto it = std::find(values.begin(), values.end(), v);
  return it == values.end() ? -1 : static_cast<int>(it - values.begin());
}

int Vocabulary::PersonIndex(std::string_view name) const {
  auto it = std::find(persons.begin(), persons.end(), name);
  return it == persons.end() ? -1 : static_cast<int>(it - persons.begin());
}

int Vocabulary::FluentIndex(std::string_view name) const {
  for (size_t i = 0; i < fluents.size(); ++i) {
    if (fluents[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string_view KindName(StatementKind k) {
  switch (k) {
    case StatementKind::kAtom:
      return "atom";
    case StatementKind::kNot:
      return "not";
    case StatementKind::kAnd:
      return "and";
    case StatementKind::kOr:
      return "or";
    case StatementKind::kImplies:
      return "implies";
    case StatementKind::kExists:
      return "exists";
    case StatementKind::kForAll:
      return "forall";
    case StatementKind::kAtLeast:
      return "atleast";
    case StatementKind::kBelieves:
      return "believes";
  }
  return "?";
}

class Validator {
 public:
  explicit Validator(const StatementContext& context) : context_(context) {}

  void Run(const Statement& s) {
    const Statement* node = &s;
    std::string path;
    while (node->kind == StatementKind::kBelieves) {
      path += path.empty() ? "believes" : "/believes";
      if (!context_.allow_believes) {
        throw SemanticError("believes is not allowed here", path);
      }
      if (node->children.size() != 1) {
        throw SemanticError("believes takes one operand", path);
      }
      node = &node->children[0];
    }
    Visit(*node, path);
  }

 private:
  void Visit(const Statement& s, const std::string& parent) {
    std::string path = parent.empty() ? std::string(KindName(s.kind))
                                      : parent + "/" + std::string(KindName(s.kind));
    switch (s.kind) {
      case StatementKind::kBelieves:
        throw SemanticError("believes is only allowed as the outermost node",
                            path);
      case StatementKind::kAtom:
        CheckAtom(s, path + " " + s.predicate);
        return;
      case StatementKind::kNot:
        Expect(s, s.children.size() == 1, "not takes one operand", path);
        break;
      case StatementKind::kAnd:
      case StatementKind::kOr:
        Expect(s, s.children.size() >= 2, "connective needs two operands",
               path);
        break;
      case StatementKind::kImplies:
        Expect(s, s.children.size() == 2, "implies takes two operands", path);
        break;
      case StatementKind::kExists:
      case StatementKind::kForAll:
      case StatementKind::kAtLeast: {
        path += " " + s.variable;
        Expect(s, s.children.size() == 1, "quantifier takes one body", path);
        CheckIdentifier(s.variable, path);
        if (context_.vocabulary != nullptr &&
            context_.vocabulary->PersonIndex(s.variable) >= 0) {
          throw SemanticError(
              "variable '" + s.variable + "' shadows a person name", path);
        }
        scope_.push_back(s.variable);
        Visit(s.children[0], path);
        scope_.pop_back();
        return;
      }
    }
    for (size_t i = 0; i < s.children.size(); ++i) {
      Visit(s.children[i], s.children.size() > 1
                               ? path + "[" + std::to_string(i) + "]"
                               : path);
    }
  }

  static void Expect(const Statement&, bool ok, const char* message,
                     const std::string& path) {
    if (!ok) throw SemanticError(message, path);
  }

  static void CheckIdentifier(const std::string& name, const std::string& path) {
    if (name.empty() || IsKeyword(name) ||
        !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
      throw SemanticError("invalid identifier '" + name + "'", path);
    }
    for (char c : name) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw SemanticError("invalid identifier '" + name + "'", path);
      }
    }
  }

  void CheckAtom(const Statement& s, const std::string& path) {
    CheckIdentifier(s.predicate, path);
    CheckTerm(s.term, path);
    if (BuiltinFromName(s.predicate)) {
      if (!s.value.empty()) {
        throw SemanticError("built-in predicate takes no value", path);
      }
      return;
    }
    if (!s.value.empty()) CheckIdentifier(s.value, path);
    const Vocabulary* vocab = context_.vocabulary;
    if (vocab == nullptr) return;
    const int f = vocab->FluentIndex(s.predicate);
    if (f < 0) {
      throw SemanticError("undeclared predicate '" + s.predicate + "'", path);
    }
    const FluentDecl& decl = vocab->fluents[f];
    if (decl.is_bool) {
      if (!s.value.empty()) {
        throw SemanticError("boolean fluent takes no value", path);
      }
    } else if (s.value.empty()) {
      throw SemanticError("fluent '" + s.predicate + "' needs a value", path);
    } else if (decl.ValueIndex(s.value) < 0) {
      throw SemanticError(
          "'" + s.value + "' is not a value of fluent '" + s.predicate + "'",
          path);
    }
  }

  void CheckTerm(const Term& t, const std::string& path) {
    switch (t.kind) {
      case Term::Kind::kSpeaker:
        if (!context_.allow_speaker) {
          throw SemanticError("'me' is not allowed here", path);
        }
        return;
      case Term::Kind::kVariable:
        if (std::find(scope_.begin(), scope_.end(), t.name) == scope_.end()) {
          throw SemanticError("unbound variable '" + t.name + "'", path);
        }
        return;
      case Term::Kind::kPerson:
        CheckIdentifier(t.name, path);
        if (context_.vocabulary != nullptr &&
            context_.vocabulary->PersonIndex(t.name) < 0) {
          throw SemanticError(
              "unbound variable or unknown person '" + t.name + "'", path);
        }
        return;
    }
  }

  const StatementContext& context_;
  std::vector<std::string> scope_;
};

// ---------------------------------------------------------------------------
// Lexer and parser

enum class Tok { kIdent, kNat, kLParen, kRParen, kComma, kDot, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> Lex(std::string_view text, int line, int column) {
  std::vector<Token> out;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      out.push_back({Tok::kNat, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(':
        kind = Tok::kLParen;
        break;
      case ')':
        kind = Tok::kRParen;
        break;
      case ',':
        kind = Tok::kComma;
        break;
      case '.':
        kind = Tok::kDot;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tl,
                         tc);
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Statement ParseTop() {
    Statement s = ParseStatementOrBelief();
    if (Peek().kind != Tok::kEnd) {
      const Token& t = Peek();
      if (IsConnective(t) && Previous().kind == Tok::kRParen && top_belief_) {
        throw SemanticError("believes is only allowed as the outermost node",
                            Where(t));
      }
      throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    }
    return s;
  }

 private:
  Statement ParseStatementOrBelief() {
    if (PeekWord("believes")) {
      Next();
      Expect(Tok::kLParen, "'(' after believes");
      Statement inner = ParseStatementOrBelief();
      Expect(Tok::kRParen, "')' closing believes");
      top_belief_ = true;
      return Believes(std::move(inner));
    }
    return ParseImplies();
  }

  Statement ParseImplies() {
    Statement lhs = ParseOr();
    if (PeekWord("implies")) {
      Next();
      Statement rhs = ParseImplies();
      return Implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Statement ParseOr() {
    std::vector<Statement> items;
    items.push_back(ParseAnd());
    while (PeekWord("or")) {
      Next();
      items.push_back(ParseAnd());
    }
    if (items.size() == 1) return std::move(items[0]);
    return Or(std::move(items));
  }

  Statement ParseAnd() {
    std::vector<Statement> items;
    items.push_back(ParseUnary());
    while (PeekWord("and")) {
      Next();
      items.push_back(ParseUnary());
    }
    if (items.size() == 1) return std::move(items[0]);
    return And(std::move(items));
  }

  Statement ParseUnary() {
    const Token& t = Peek();
    if (t.kind == Tok::kLParen) {
      Next();
      Statement inner = ParseImplies();
      Expect(Tok::kRParen, "')'");
      return inner;
    }
    if (t.kind != Tok::kIdent) {
      throw ParseError(t.kind == Tok::kEnd ? "unexpected end of statement"
                                           : "unexpected '" + t.text + "'",
                       t.line, t.column);
    }
    if (t.text == "not") {
      Next();
      return Not(ParseUnary());
    }
    if (t.text == "believes") {
      throw SemanticError("believes is only allowed as the outermost node",
                          Where(t));
    }
    if (t.text == "exists" || t.text == "forall" || t.text == "atleast") {
      return ParseQuantifier();
    }
    if (IsKeyword(t.text)) {
      throw ParseError("unexpected keyword '" + t.text + "'", t.line, t.column);
    }
    return ParseAtom();
  }

  Statement ParseQuantifier() {
    const Token q = Next();
    uint32_t count = 0;
    if (q.text == "atleast") {
      const Token& n = Peek();
      if (n.kind != Tok::kNat) {
        throw ParseError("expected a count after atleast", n.line, n.column);
      }
      auto [ptr, ec] = std::from_chars(n.text.data(),
                                       n.text.data() + n.text.size(), count);
      if (ec != std::errc()) {
        throw ParseError("count out of range", n.line, n.column);
      }
      Next();
    }
    const Token& v = Peek();
    if (v.kind != Tok::kIdent || IsKeyword(v.text)) {
      throw ParseError("expected a variable name", v.line, v.column);
    }
    std::string variable = Next().text;
    Expect(Tok::kDot, "'.' after the quantified variable");
    scope_.push_back(variable);
    Statement body = ParseImplies();
    scope_.pop_back();
    StatementKind kind = q.text == "exists"   ? StatementKind::kExists
                         : q.text == "forall" ? StatementKind::kForAll
                                              : StatementKind::kAtLeast;
    return Quantifier(kind, count, std::move(variable), std::move(body));
  }

  Statement ParseAtom() {
    std::string predicate = Next().text;
    Expect(Tok::kLParen, "'(' after predicate '" + predicate + "'");
    Term term = ParseTerm();
    std::string value;
    if (Peek().kind == Tok::kComma) {
      Next();
      const Token& v = Peek();
      if (v.kind != Tok::kIdent || IsKeyword(v.text)) {
        throw ParseError("expected a value", v.line, v.column);
      }
      value = Next().text;
    }
    Expect(Tok::kRParen, "')' closing predicate '" + predicate + "'");
    return Atom(std::move(predicate), std::move(term), std::move(value));
  }

  Term ParseTerm() {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent) {
      throw ParseError("expected a person, variable or 'me'", t.line, t.column);
    }
    if (t.text == "me") {
      Next();
      return Term::Speaker();
    }
    if (IsKeyword(t.text)) {
      throw ParseError("unexpected keyword '" + t.text + "'", t.line, t.column);
    }
    std::string name = Next().text;
    if (std::find(scope_.begin(), scope_.end(), name) != scope_.end()) {
      return Term::Variable(std::move(name));
    }
    return Term::Person(std::move(name));
  }

  static bool IsConnective(const Token& t) {
    return t.kind == Tok::kIdent &&
           (t.text == "and" || t.text == "or" || t.text == "implies");
  }

  static std::string Where(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column);
  }

  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool PeekWord(std::string_view w) const {
    return Peek().kind == Tok::kIdent && Peek().text == w;
  }
  Token Next() {
    Token t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  void Expect(Tok kind, const std::string& what) {
    const Token& t = Peek();
    if (t.kind != kind) {
      throw ParseError("expected " + what +
                           (t.kind == Tok::kEnd ? " before end of statement"
                                                : ", found '" + t.text + "'"),
                       t.line, t.column);
    }
    Next();
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  std::vector<std::string> scope_;
  bool top_belief_ = false;
};

// ---------------------------------------------------------------------------
// Rendering

bool IsQuantifier(StatementKind k) {
  return k == StatementKind::kExists || k == StatementKind::kForAll ||
         k == StatementKind::kAtLeast;
}

std::string RenderTerm(const Term& t) {
  return t.kind == Term::Kind::kSpeaker ? "me" : t.name;
}

void Render(const Statement& s, std::string& out);

void RenderOperand(const Statement& s, bool parens, std::string& out) {
  if (parens) out += '(';
  Render(s, out);
  if (parens) out += ')';
}

void Render(const Statement& s, std::string& out) {
  switch (s.kind) {
    case StatementKind::kAtom:
      out += s.predicate;
      out += '(';
      out += RenderTerm(s.term);
      if (!s.value.empty()) {
        out += ", ";
        out += s.value;
      }
      out += ')';
      return;
    case StatementKind::kBelieves:
      out += "believes(";
      Render(s.children[0], out);
      out += ')';
      return;
    case StatementKind::kNot: {
      const auto k = s.children[0].kind;
      out += "not ";
      RenderOperand(s.children[0],
                    k != StatementKind::kAtom && k != StatementKind::kNot, out);
      return;
    }
    case StatementKind::kAnd:
    case StatementKind::kOr: {
      const bool is_and = s.kind == StatementKind::kAnd;
      for (size_t i = 0; i < s.children.size(); ++i) {
        if (i > 0) out += is_and ? " and " : " or ";
        const auto k = s.children[i].kind;
        // Same-kind children keep their parentheses so that nested
        // n-ary nodes survive a round trip.
        const bool parens = IsQuantifier(k) || k == StatementKind::kImplies ||
                            k == StatementKind::kOr ||
                            (is_and && k == StatementKind::kAnd);
        RenderOperand(s.children[i], parens, out);
      }
      return;
    }
    case StatementKind::kImplies: {
      const auto lk = s.children[0].kind;
      const auto rk = s.children[1].kind;
      RenderOperand(s.children[0],
                    IsQuantifier(lk) || lk == StatementKind::kImplies, out);
      out += " implies ";
      RenderOperand(s.children[1], IsQuantifier(rk), out);
      return;
    }
    case StatementKind::kExists:
    case StatementKind::kForAll:
    case StatementKind::kAtLeast:
      if (s.kind == StatementKind::kExists) {
        out += "exists ";
      } else if (s.kind == StatementKind::kForAll) {
        out += "forall ";
      } else {
        out += "atleast " + std::to_string(s.count) + " ";
      }
      out += s.variable;
      out += " . ";
      Render(s.children[0], out);
      return;
  }
}

Statement BindSpeakerImpl(const Statement& s, const std::string& person) {
  Statement out = s;
  if (out.kind == StatementKind::kAtom) {
    if (out.term.kind == Term::Kind::kSpeaker) out.term = Term::Person(person);
    return out;
  }
  for (auto& c : out.children) c = BindSpeakerImpl(c, person);
  return out;
}

}  // namespace

Statement ParseStatement(std::string_view text,
                         const StatementContext& context, int line,
                         int column) {
  Parser parser(Lex(text, line, column));
  Statement s = parser.ParseTop();
  ValidateStatement(s, context);
  return s;
}

void ValidateStatement(const Statement& s, const StatementContext& context) {
  Validator(context).Run(s);
}

std::string RenderStatement(const Statement& s) {
  std::string out;
  Render(s, out);
  return out;
}

Statement BindSpeaker(const Statement& s, const std::string& person) {
  return BindSpeakerImpl(s, person);
}

const Statement& BeliefBody(const Statement& s) {
  const Statement* node = &s;
  while (node->kind == StatementKind::kBelieves) node = &node->children[0];
  return *node;
}

}  // namespace islands

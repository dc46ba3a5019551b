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

#include "islands/puzzle.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "islands/errors.h"

namespace islands {

std::vector<uint64_t> PuzzleSpec::UtterancesBefore(int round) const {
  std::vector<uint64_t> counts(vocabulary.persons.size(), 0);
  const int limit = std::min<int>(round, static_cast<int>(rounds.size()));
  for (int r = 0; r < limit; ++r) {
    for (const auto& u : rounds[r].utterances) ++counts[u.speaker];
  }
  return counts;
}

ExtendedType PuzzleSpec::ToEpoch(int person, ExtendedType label) const {
  // Shifting is an involution on the phase parity.
  return label.Shifted(UtterancesBefore(label_round)[person]);
}

ExtendedType PuzzleSpec::ToLabel(int person, ExtendedType epoch) const {
  return epoch.Shifted(UtterancesBefore(label_round)[person]);
}

int PuzzleSpec::GuiltFluent() const {
  if (extraction) {
    const std::string name = extraction->GuiltFluent();
    if (!name.empty()) return vocabulary.FluentIndex(name);
  }
  return vocabulary.FluentIndex("guilt");
}

namespace {

// A line with comments removed, remembering where it came from.
struct Line {
  int number = 0;
  std::string text;   // without comment, right-trimmed
  size_t indent = 0;  // offset of first non-space character
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) {
      raw.pop_back();
    }
    size_t indent = 0;
    while (indent < raw.size() &&
           std::isspace(static_cast<unsigned char>(raw[indent]))) {
      ++indent;
    }
    if (indent < raw.size()) out.push_back({number, raw, indent});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Cursor over one line with located errors.
class LineReader {
 public:
  explicit LineReader(const Line& line) : line_(line), pos_(line.indent) {}

  void SkipSpace() {
    while (pos_ < line_.text.size() &&
           std::isspace(static_cast<unsigned char>(line_.text[pos_]))) {
      ++pos_;
    }
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ >= line_.text.size();
  }

  bool TryWord(std::string_view word) {
    SkipSpace();
    if (line_.text.compare(pos_, word.size(), word) != 0) return false;
    const size_t after = pos_ + word.size();
    if (after < line_.text.size() &&
        (std::isalnum(static_cast<unsigned char>(line_.text[after])) ||
         line_.text[after] == '_')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  bool TryChar(char c) {
    SkipSpace();
    if (pos_ < line_.text.size() && line_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void ExpectChar(char c) {
    if (!TryChar(c)) Fail(std::string("expected '") + c + "'");
  }

  std::string Identifier(const char* what) {
    SkipSpace();
    size_t end = pos_;
    while (end < line_.text.size() &&
           (std::isalnum(static_cast<unsigned char>(line_.text[end])) ||
            line_.text[end] == '_')) {
      ++end;
    }
    std::string id = line_.text.substr(pos_, end - pos_);
    if (!IsIdentifier(id)) Fail(std::string("expected ") + what);
    pos_ = end;
    return id;
  }

  std::string Quoted() {
    SkipSpace();
    if (pos_ >= line_.text.size() || line_.text[pos_] != '"') {
      Fail("expected a quoted label");
    }
    const size_t close = line_.text.find('"', pos_ + 1);
    if (close == std::string::npos) Fail("unterminated label");
    std::string out = line_.text.substr(pos_ + 1, close - pos_ - 1);
    pos_ = close + 1;
    return out;
  }

  uint32_t Natural() {
    SkipSpace();
    uint32_t value = 0;
    const char* begin = line_.text.data() + pos_;
    const char* end = line_.text.data() + line_.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) Fail("expected a number");
    pos_ += static_cast<size_t>(ptr - begin);
    return value;
  }

  // Comma separated identifiers up to the end of the line.
  std::vector<std::string> IdentifierList(const char* what) {
    std::vector<std::string> out;
    if (AtEnd()) return out;
    do {
      out.push_back(Identifier(what));
    } while (TryChar(','));
    if (!AtEnd()) Fail("unexpected text");
    return out;
  }

  std::string Rest() {
    SkipSpace();
    std::string out = line_.text.substr(pos_);
    pos_ = line_.text.size();
    return out;
  }

  size_t pos() const { return pos_; }
  void set_pos(size_t p) { pos_ = p; }
  int column() const { return static_cast<int>(pos_) + 1; }
  const Line& line() const { return line_; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_.number, static_cast<int>(pos_) + 1);
  }

 private:
  const Line& line_;
  size_t pos_;
};

// Statement text awaiting the full vocabulary.
struct PendingStatement {
  std::string text;
  int line = 0;
  int column = 0;
};

struct PendingUtterance {
  std::string speaker;
  PendingStatement statement;
  std::optional<Answer> answer;
  int line = 0;
};

struct PendingRound {
  Round::Kind kind = Round::Kind::kStatements;
  std::string label;
  int line = 0;
  bool to_all = false;
  std::vector<std::string> addressed;
  PendingStatement question;
  std::vector<std::pair<std::string, Answer>> answers;
  std::vector<int> answer_lines;
  std::vector<PendingUtterance> utterances;
};

enum class Block { kNone, kStatements, kQuestion, kExtraction };

Statement ParsePending(const PendingStatement& p, const StatementContext& ctx) {
  try {
    return ParseStatement(p.text, ctx, p.line, p.column);
  } catch (const SemanticError& e) {
    throw SemanticError(std::string(e.what()),
                        "line " + std::to_string(p.line));
  }
}

void ParseAnswers(LineReader& r, PendingRound& round) {
  while (!r.AtEnd()) {
    std::string name = r.Identifier("a person name");
    r.ExpectChar('=');
    const size_t at = r.pos();
    Answer a;
    if (r.TryWord("yes")) {
      a = Answer::kYes;
    } else if (r.TryWord("no")) {
      a = Answer::kNo;
    } else {
      r.set_pos(at);
      r.Fail("expected yes or no");
    }
    round.answers.emplace_back(std::move(name), a);
    round.answer_lines.push_back(r.line().number);
    r.TryChar(',');
  }
}

class PuzzleParser {
 public:
  PuzzleSpec Run(std::string_view text) {
    for (const Line& line : SplitLines(text)) HandleLine(line);
    return Finish();
  }

 private:
  void HandleLine(const Line& line) {
    LineReader r(line);
    if (r.TryWord("persons")) {
      r.ExpectChar(':');
      if (persons_line_ != 0) r.Fail("persons declared twice");
      persons_line_ = line.number;
      for (auto& name : r.IdentifierList("a person name")) {
        if (IsKeyword(name) || BuiltinFromName(name)) {
          r.Fail("'" + name + "' cannot be a person name");
        }
        if (spec_.vocabulary.PersonIndex(name) >= 0) {
          r.Fail("duplicate person '" + name + "'");
        }
        spec_.vocabulary.persons.push_back(std::move(name));
      }
      block_ = Block::kNone;
      return;
    }
    if (r.TryWord("fluent") && block_ != Block::kExtraction) {
      HandleFluent(r);
      block_ = Block::kNone;
      return;
    }
    r.set_pos(line.indent);
    if (r.TryWord("axiom")) {
      r.SkipSpace();
      const int column = r.column();
      axioms_.push_back({r.Rest(), line.number, column});
      if (axioms_.back().text.empty()) r.Fail("empty axiom");
      block_ = Block::kNone;
      return;
    }
    if (r.TryWord("labels")) {
      if (!r.TryWord("before") || !r.TryWord("round")) {
        r.Fail("expected 'labels before round N'");
      }
      label_round_ = static_cast<int>(r.Natural());
      label_line_ = line.number;
      if (!r.AtEnd()) r.Fail("unexpected text");
      block_ = Block::kNone;
      return;
    }
    if (r.TryWord("round")) {
      HandleRound(r);
      return;
    }
    if (r.TryWord("answers")) {
      r.ExpectChar(':');
      if (block_ != Block::kQuestion) r.Fail("answers outside a question round");
      ParseAnswers(r, rounds_.back());
      return;
    }
    if (r.TryWord("extraction")) {
      r.ExpectChar(':');
      if (!r.AtEnd()) r.Fail("unexpected text");
      if (extraction_) r.Fail("extraction declared twice");
      extraction_.emplace();
      extraction_->order = PersonOrder::kAlphabetical;
      extraction_line_ = line.number;
      block_ = Block::kExtraction;
      return;
    }
    if (r.TryWord("world")) {
      r.Fail("world sections belong in world files");
    }
    switch (block_) {
      case Block::kStatements:
        HandleUtterance(r);
        return;
      case Block::kExtraction:
        HandleExtraction(r);
        return;
      default:
        r.Fail("unexpected line");
    }
  }

  void HandleFluent(LineReader& r) {
    FluentDecl decl;
    decl.name = r.Identifier("a fluent name");
    if (IsKeyword(decl.name) || BuiltinFromName(decl.name)) {
      r.Fail("'" + decl.name + "' is reserved");
    }
    if (spec_.vocabulary.FluentIndex(decl.name) >= 0) {
      r.Fail("duplicate fluent '" + decl.name + "'");
    }
    r.ExpectChar(':');
    if (r.TryWord("bool")) {
      decl.is_bool = true;
      decl.values = {"false", "true"};
    } else {
      r.ExpectChar('{');
      do {
        std::string v = r.Identifier("a value");
        if (decl.ValueIndex(v) >= 0) r.Fail("duplicate value '" + v + "'");
        decl.values.push_back(std::move(v));
      } while (r.TryChar(','));
      r.ExpectChar('}');
      if (decl.values.size() > 100) r.Fail("too many values");
    }
    if (!r.AtEnd()) r.Fail("unexpected text");
    spec_.vocabulary.fluents.push_back(std::move(decl));
  }

  void HandleRound(LineReader& r) {
    PendingRound round;
    round.line = r.line().number;
    if (r.TryWord("statements")) {
      round.kind = Round::Kind::kStatements;
      if (!r.TryChar(':')) {
        round.label = r.Quoted();
        r.ExpectChar(':');
      }
      if (!r.AtEnd()) r.Fail("statements go on the following lines");
      rounds_.push_back(std::move(round));
      block_ = Block::kStatements;
      return;
    }
    if (!r.TryWord("question")) r.Fail("expected 'statements' or 'question'");
    round.kind = Round::Kind::kQuestion;
    round.label = r.Quoted();
    if (!r.TryWord("to")) r.Fail("expected 'to'");
    if (r.TryWord("all")) {
      round.to_all = true;
    } else {
      do {
        round.addressed.push_back(r.Identifier("a person name"));
      } while (r.TryChar(','));
    }
    r.ExpectChar(':');
    r.SkipSpace();
    const std::string& text = r.line().text;
    size_t answers_at = text.find("answers:", r.pos());
    const size_t stmt_end =
        answers_at == std::string::npos ? text.size() : answers_at;
    round.question = {text.substr(r.pos(), stmt_end - r.pos()),
                      r.line().number, r.column()};
    if (round.question.text.find_first_not_of(" \t") == std::string::npos) {
      r.Fail("question needs a statement");
    }
    rounds_.push_back(std::move(round));
    block_ = Block::kQuestion;
    if (answers_at != std::string::npos) {
      r.set_pos(answers_at + std::string_view("answers:").size());
      ParseAnswers(r, rounds_.back());
    }
  }

  void HandleUtterance(LineReader& r) {
    PendingUtterance u;
    u.line = r.line().number;
    u.speaker = r.Identifier("a speaker name");
    r.ExpectChar(':');
    r.SkipSpace();
    const int column = r.column();
    u.statement = {r.Rest(), r.line().number, column};
    if (u.statement.text.empty()) r.Fail("missing statement");
    rounds_.back().utterances.push_back(std::move(u));
  }

  void HandleExtraction(LineReader& r) {
    if (r.TryWord("order")) {
      r.ExpectChar(':');
      if (r.TryWord("alphabetical")) {
        extraction_->order = PersonOrder::kAlphabetical;
      } else if (r.TryWord("declaration")) {
        extraction_->order = PersonOrder::kDeclaration;
      } else {
        r.Fail("expected 'alphabetical' or 'declaration'");
      }
      if (!r.AtEnd()) r.Fail("unexpected text");
      return;
    }
    ExtractionCategory cat;
    if (r.TryWord("sanity")) {
      cat.source = ExtractionCategory::Source::kSanity;
    } else if (r.TryWord("truthfulness")) {
      cat.source = ExtractionCategory::Source::kTruthfulness;
    } else if (r.TryWord("fluent")) {
      cat.source = ExtractionCategory::Source::kFluent;
      cat.fluent = r.Identifier("a fluent name");
    } else {
      r.Fail("expected sanity, truthfulness, fluent or order");
    }
    r.ExpectChar(':');
    // truth-teller is accepted as a spelling of truthteller.
    std::string rest = r.Rest();
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (item == "truth-teller") item = "truthteller";
      if (!IsIdentifier(item)) r.Fail("bad category value '" + item + "'");
      cat.values.push_back(item);
    }
    extraction_->categories.push_back(std::move(cat));
  }

  int PersonOrThrow(const std::string& name, int line) const {
    const int p = spec_.vocabulary.PersonIndex(name);
    if (p < 0) throw SemanticError("unknown person '" + name + "'",
                                   "line " + std::to_string(line));
    return p;
  }

  PuzzleSpec Finish() {
    const Vocabulary& vocab = spec_.vocabulary;
    const StatementContext axiom_ctx{.vocabulary = &vocab,
                                     .allow_believes = false,
                                     .allow_speaker = false};
    const StatementContext utterance_ctx{.vocabulary = &vocab};
    for (const auto& a : axioms_) {
      spec_.axioms.push_back(ParsePending(a, axiom_ctx));
    }
    for (const auto& pr : rounds_) {
      const std::string where = "line " + std::to_string(pr.line);
      Round round;
      round.kind = pr.kind;
      round.label = pr.label;
      round.line = pr.line;
      if (pr.kind == Round::Kind::kStatements) {
        std::set<int> seen;
        for (const auto& pu : pr.utterances) {
          const int p = PersonOrThrow(pu.speaker, pu.line);
          if (!seen.insert(p).second) {
            throw SemanticError(pu.speaker + " speaks twice in one round",
                                "line " + std::to_string(pu.line));
          }
          round.utterances.push_back(
              {p, ParsePending(pu.statement, utterance_ctx), std::nullopt});
        }
      } else {
        round.question = ParsePending(pr.question, utterance_ctx);
        std::vector<int> addressed;
        if (pr.to_all) {
          for (int p = 0; p < static_cast<int>(vocab.persons.size()); ++p) {
            addressed.push_back(p);
          }
        } else {
          for (const auto& name : pr.addressed) {
            const int p = PersonOrThrow(name, pr.line);
            if (std::find(addressed.begin(), addressed.end(), p) !=
                addressed.end()) {
              throw SemanticError(name + " is addressed twice", where);
            }
            addressed.push_back(p);
          }
        }
        std::vector<std::optional<Answer>> answers(vocab.persons.size());
        for (size_t i = 0; i < pr.answers.size(); ++i) {
          const auto& [name, answer] = pr.answers[i];
          const std::string aw = "line " + std::to_string(pr.answer_lines[i]);
          const int p = PersonOrThrow(name, pr.answer_lines[i]);
          if (std::find(addressed.begin(), addressed.end(), p) ==
              addressed.end()) {
            throw SemanticError(
                "answer recorded for " + name + ", who was not asked", aw);
          }
          if (answers[p]) {
            throw SemanticError("two answers recorded for " + name, aw);
          }
          answers[p] = answer;
        }
        for (int p : addressed) {
          if (!answers[p]) {
            throw SemanticError("no answer recorded for " + vocab.persons[p],
                                where);
          }
          round.utterances.push_back({p, round.question, answers[p]});
        }
      }
      spec_.rounds.push_back(std::move(round));
    }
    if (label_round_ > static_cast<int>(spec_.rounds.size())) {
      throw SemanticError("labels refer to a round that does not exist",
                          "line " + std::to_string(label_line_));
    }
    spec_.label_round = label_round_;
    if (extraction_) {
      const std::string where = "line " + std::to_string(extraction_line_);
      try {
        extraction_->Validate();
      } catch (const ExtractionError& e) {
        throw SemanticError(e.what(), where);
      }
      for (const auto& cat : extraction_->categories) {
        if (cat.source != ExtractionCategory::Source::kFluent) continue;
        const int f = vocab.FluentIndex(cat.fluent);
        if (f < 0) {
          throw SemanticError("extraction uses undeclared fluent '" +
                                  cat.fluent + "'",
                              where);
        }
        std::set<std::string> want(vocab.fluents[f].values.begin(),
                                   vocab.fluents[f].values.end());
        std::set<std::string> got(cat.values.begin(), cat.values.end());
        if (want != got) {
          throw SemanticError("extraction values of '" + cat.fluent +
                                  "' must be exactly its domain",
                              where);
        }
      }
      spec_.extraction = std::move(extraction_);
    }
    return std::move(spec_);
  }

  PuzzleSpec spec_;
  std::vector<PendingStatement> axioms_;
  std::vector<PendingRound> rounds_;
  std::optional<ExtractionConfig> extraction_;
  Block block_ = Block::kNone;
  int persons_line_ = 0;
  int label_round_ = 0;
  int label_line_ = 0;
  int extraction_line_ = 0;
};

}  // namespace

PuzzleSpec ParsePuzzle(std::string_view text) {
  return PuzzleParser().Run(text);
}

World ParseWorld(std::string_view text, const PuzzleSpec& puzzle) {
  const Vocabulary& vocab = puzzle.vocabulary;
  const size_t n = vocab.persons.size();
  std::vector<std::optional<ExtendedType>> types(n);
  std::vector<std::vector<int>> values(vocab.fluents.size(),
                                       std::vector<int>(n, -1));
  bool in_world = false;
  for (const Line& line : SplitLines(text)) {
    LineReader r(line);
    if (r.TryWord("world")) {
      r.ExpectChar(':');
      if (!r.AtEnd()) r.Fail("unexpected text");
      in_world = true;
      continue;
    }
    if (!in_world) r.Fail("expected 'world:'");
    const std::string name = r.Identifier("a person name");
    const int p = vocab.PersonIndex(name);
    if (p < 0) r.Fail("unknown person '" + name + "'");
    if (types[p]) r.Fail(name + " is assigned twice");
    r.ExpectChar(':');
    const std::string label = r.Identifier("a type label");
    auto type = ExtendedType::FromLabel(label);
    if (!type) r.Fail("unknown type label '" + label + "'");
    types[p] = puzzle.ToEpoch(p, *type);
    while (!r.AtEnd()) {
      const std::string fluent = r.Identifier("a fluent name");
      const int f = vocab.FluentIndex(fluent);
      if (f < 0) r.Fail("unknown fluent '" + fluent + "'");
      r.ExpectChar('=');
      const std::string value = r.Identifier("a value");
      const int v = vocab.fluents[f].ValueIndex(value);
      if (v < 0) r.Fail("'" + value + "' is not a value of " + fluent);
      if (values[f][p] >= 0) r.Fail(fluent + " is assigned twice for " + name);
      values[f][p] = v;
    }
  }
  World world;
  for (size_t p = 0; p < n; ++p) {
    if (!types[p]) throw SemanticError("world has no entry for " + vocab.persons[p]);
    world.types.push_back(*types[p]);
  }
  for (size_t f = 0; f < vocab.fluents.size(); ++f) {
    std::vector<uint8_t> row;
    for (size_t p = 0; p < n; ++p) {
      if (values[f][p] < 0) {
        throw SemanticError("world leaves " + vocab.fluents[f].name +
                            " unassigned for " + vocab.persons[p]);
      }
      row.push_back(static_cast<uint8_t>(values[f][p]));
    }
    world.fluents.push_back(std::move(row));
  }
  return world;
}

std::string RenderWorld(const PuzzleSpec& puzzle, const World& world) {
  const Vocabulary& vocab = puzzle.vocabulary;
  std::string out = "world:\n";
  for (size_t p = 0; p < vocab.persons.size(); ++p) {
    out += "  " + vocab.persons[p] + ": ";
    out += puzzle.ToLabel(static_cast<int>(p), world.types[p]).label();
    for (size_t f = 0; f < vocab.fluents.size(); ++f) {
      out += " " + vocab.fluents[f].name + "=" +
             vocab.fluents[f].values[world.fluents[f][p]];
    }
    out += "\n";
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace islands

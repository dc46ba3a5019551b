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

#ifndef ISLANDS_ERRORS_H_
#define ISLANDS_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace islands {

// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed input that violates a semantic rule: unbound variables,
// undeclared predicates, misplaced believes, arity mismatches.
// `path` names the offending node, e.g. "and[1]/exists x/not".
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& message, std::string path = "")
      : std::runtime_error(path.empty() ? message : message + " at " + path),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// The search hit its node or time limit. Carries the work done so far;
// never accompanied by a partial world list.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& message, uint64_t nodes, double seconds)
      : std::runtime_error(message), nodes_(nodes), seconds_(seconds) {}

  uint64_t nodes() const { return nodes_; }
  double seconds() const { return seconds_; }

 private:
  uint64_t nodes_;
  double seconds_;
};

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace islands

#endif  // ISLANDS_ERRORS_H_

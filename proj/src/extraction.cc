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

#include "islands/extraction.h"

#include <algorithm>
#include <set>

#include "islands/errors.h"
#include "islands/solver.h"

namespace islands {

ExtractionConfig ExtractionConfig::Default() {
  ExtractionConfig c;
  c.categories = {
      {ExtractionCategory::Source::kSanity, "", {"partial", "delusional", "sane"}},
      {ExtractionCategory::Source::kTruthfulness,
       "",
       {"alternator", "liar", "truthteller"}},
      {ExtractionCategory::Source::kFluent,
       "guilt",
       {"accomplice", "guilty", "innocent"}},
  };
  c.order = PersonOrder::kAlphabetical;
  return c;
}

void ExtractionConfig::Validate() const {
  if (categories.size() != kDigits) {
    throw ExtractionError("extraction needs exactly 3 categories, got " +
                          std::to_string(categories.size()));
  }
  for (const auto& cat : categories) {
    std::set<std::string> distinct(cat.values.begin(), cat.values.end());
    if (cat.values.size() != 3 || distinct.size() != 3) {
      throw ExtractionError(
          "each extraction category needs exactly 3 distinct values");
    }
    for (const auto& v : cat.values) {
      if (cat.source == ExtractionCategory::Source::kSanity &&
          !SanityClassFromName(v)) {
        throw ExtractionError("'" + v + "' is not a sanity class");
      }
      if (cat.source == ExtractionCategory::Source::kTruthfulness &&
          !TruthClassFromName(v)) {
        throw ExtractionError("'" + v + "' is not a truth class");
      }
    }
  }
}

std::string ExtractionConfig::GuiltFluent() const {
  for (const auto& cat : categories) {
    if (cat.source == ExtractionCategory::Source::kFluent) return cat.fluent;
  }
  return "";
}

namespace {

int PositionOf(const ExtractionCategory& cat, const ReportTriple& t) {
  for (size_t i = 0; i < cat.values.size(); ++i) {
    const std::string& v = cat.values[i];
    switch (cat.source) {
      case ExtractionCategory::Source::kSanity:
        if (SanityClassFromName(v) == t.sanity) return static_cast<int>(i);
        break;
      case ExtractionCategory::Source::kTruthfulness:
        if (TruthClassFromName(v) == t.truth) return static_cast<int>(i);
        break;
      case ExtractionCategory::Source::kFluent:
        if (v == t.guilt) return static_cast<int>(i);
        break;
    }
  }
  return -1;
}

std::string ComponentName(const ExtractionCategory& cat,
                          const ReportTriple& t) {
  switch (cat.source) {
    case ExtractionCategory::Source::kSanity:
      return std::string(SanityClassName(t.sanity));
    case ExtractionCategory::Source::kTruthfulness:
      return std::string(TruthClassName(t.truth));
    case ExtractionCategory::Source::kFluent:
      return t.guilt;
  }
  return "";
}

}  // namespace

EncodedPerson EncodePerson(const ReportTriple& triple,
                           const ExtractionConfig& config) {
  EncodedPerson out;
  for (const auto& cat : config.categories) {
    const int pos = PositionOf(cat, triple);
    if (pos < 0) {
      throw ExtractionError("unknown category value '" +
                            ComponentName(cat, triple) + "' for " +
                            triple.person);
    }
    out.digits += static_cast<char>('0' + pos);
    out.value = out.value * static_cast<int>(cat.values.size()) + pos;
  }
  return out;
}

char ValueToLetter(int value, const std::string& person) {
  if (value < 1 || value > 26) {
    throw ExtractionError("value " + std::to_string(value) +
                          " has no letter" +
                          (person.empty() ? "" : " (person " + person + ")"));
  }
  return static_cast<char>('A' + value - 1);
}

std::vector<ExtractionRow> ExtractRows(const std::vector<ReportTriple>& reports,
                                       const ExtractionConfig& config) {
  config.Validate();
  std::vector<ReportTriple> ordered = reports;
  if (config.order == PersonOrder::kAlphabetical) {
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const ReportTriple& a, const ReportTriple& b) {
                       return a.person < b.person;
                     });
  }
  std::vector<ExtractionRow> rows;
  rows.reserve(ordered.size());
  for (const auto& t : ordered) {
    ExtractionRow row;
    row.person = t.person;
    row.encoded = EncodePerson(t, config);
    row.letter = ValueToLetter(row.encoded.value, t.person);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ExtractWord(const std::vector<ReportTriple>& reports,
                        const ExtractionConfig& config) {
  std::string word;
  for (const auto& row : ExtractRows(reports, config)) word += row.letter;
  return word;
}

std::string ExtractWord(const SolveResult& result,
                        const ExtractionConfig& config) {
  if (result.status != SolveStatus::kUnique) {
    throw ExtractionError("extraction needs a unique solution, got " +
                          std::string(SolveStatusName(result.status)));
  }
  return ExtractWord(result.reports, config);
}

}  // namespace islands

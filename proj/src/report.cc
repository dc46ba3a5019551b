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

#include "islands/report.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "json.hpp"

namespace islands {

using Json = nlohmann::ordered_json;

std::string Sha256Hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

std::string Pad(std::string s, size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

Json WorldJson(const PuzzleSpec& puzzle, const World& world) {
  const Vocabulary& vocab = puzzle.vocabulary;
  Json persons = Json::array();
  for (size_t p = 0; p < vocab.persons.size(); ++p) {
    const ExtendedType label = puzzle.ToLabel(static_cast<int>(p), world.types[p]);
    Json fluents = Json::object();
    for (size_t f = 0; f < vocab.fluents.size(); ++f) {
      fluents[vocab.fluents[f].name] = vocab.fluents[f].values[world.fluents[f][p]];
    }
    persons.push_back(Json{
        {"name", vocab.persons[p]},
        {"type", std::string(label.label())},
        {"sanity", std::string(SanityClassName(label.sanity_class()))},
        {"truthfulness", std::string(TruthClassName(label.truth_class()))},
        {"fluents", std::move(fluents)},
    });
  }
  return Json{{"persons", std::move(persons)}};
}

}  // namespace

std::string RenderSolveJson(const SolveReport& report) {
  const PuzzleSpec& puzzle = *report.puzzle;
  const SolveResult& result = *report.result;
  Json doc;
  doc["puzzle_digest"] = "sha256:" + report.digest;
  doc["status"] = std::string(SolveStatusName(result.status));
  doc["world_count"] = result.worlds.size();
  Json worlds = Json::array();
  for (const auto& w : result.worlds) worlds.push_back(WorldJson(puzzle, w));
  doc["worlds"] = std::move(worlds);
  Json reports = Json::array();
  for (const auto& r : result.reports) {
    reports.push_back(Json{
        {"name", r.person},
        {"sanity", std::string(SanityClassName(r.sanity))},
        {"truthfulness", std::string(TruthClassName(r.truth))},
        {"guilt", r.guilt},
    });
  }
  doc["reports"] = std::move(reports);
  doc["statistics"] = Json{{"nodes", result.stats.nodes}};
  if (report.explanation) {
    Json lines = Json::array();
    for (const auto& l : *report.explanation) {
      lines.push_back(Json{
          {"round", l.round},
          {"person", l.person},
          {"type", l.type_label},
          {"sane", l.phases.sane},
          {"truthful", l.phases.truthful},
          {"utterance", l.utterance},
          {"decoded", l.decoded},
      });
    }
    doc["explanation"] = std::move(lines);
  }
  if (report.extraction) {
    Json rows = Json::array();
    std::string word;
    for (const auto& r : *report.extraction) {
      rows.push_back(Json{
          {"name", r.person},
          {"digits", r.encoded.digits},
          {"value", r.encoded.value},
          {"letter", std::string(1, r.letter)},
      });
      word += r.letter;
    }
    doc["extraction"] = Json{{"rows", std::move(rows)}, {"word", word}};
  }
  return doc.dump(2) + "\n";
}

std::string RenderSolveText(const SolveReport& report) {
  const PuzzleSpec& puzzle = *report.puzzle;
  const SolveResult& result = *report.result;
  const Vocabulary& vocab = puzzle.vocabulary;
  std::string out;
  out += "status: " + std::string(SolveStatusName(result.status)) + "\n";
  out += "worlds: " + std::to_string(result.worlds.size()) + "\n";
  size_t name_width = 0;
  for (const auto& p : vocab.persons) name_width = std::max(name_width, p.size());
  for (size_t i = 0; i < result.worlds.size(); ++i) {
    const World& w = result.worlds[i];
    out += "world " + std::to_string(i + 1) + ":\n";
    for (size_t p = 0; p < vocab.persons.size(); ++p) {
      out += "  " + Pad(vocab.persons[p], name_width) + "  ";
      out += Pad(std::string(puzzle.ToLabel(static_cast<int>(p), w.types[p]).label()), 5);
      for (size_t f = 0; f < vocab.fluents.size(); ++f) {
        out += " " + vocab.fluents[f].name + "=" +
               vocab.fluents[f].values[w.fluents[f][p]];
      }
      out += "\n";
    }
  }
  if (!result.reports.empty()) {
    out += "report:\n";
    for (const auto& r : result.reports) {
      out += "  " + Pad(r.person, name_width) + "  " +
             std::string(SanityClassName(r.sanity)) + ", " +
             std::string(TruthClassName(r.truth));
      if (!r.guilt.empty()) out += ", " + r.guilt;
      out += "\n";
    }
  }
  char stats[96];
  std::snprintf(stats, sizeof(stats), "nodes: %llu  time: %.3f s\n",
                static_cast<unsigned long long>(result.stats.nodes),
                result.stats.seconds);
  out += stats;
  if (report.explanation) {
    out += "derivation:\n";
    for (const auto& l : *report.explanation) {
      out += "  " + FormatExplainLine(l) + "\n";
    }
  }
  if (report.extraction) {
    out += "extraction:\n";
    std::string word;
    for (const auto& r : *report.extraction) {
      out += "  " + Pad(r.person, name_width) + "  " + r.encoded.digits + "  " +
             Pad(std::to_string(r.encoded.value), 2) + "  " + r.letter + "\n";
      word += r.letter;
    }
    out += word + "\n";
  }
  return out;
}

}  // namespace islands

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

#include "islands/cli.h"

#include <algorithm>
#include <map>

#include "CLI11.hpp"
#include "islands/discrimination.h"
#include "islands/errors.h"
#include "islands/extraction.h"
#include "islands/puzzle.h"
#include "islands/report.h"
#include "islands/solver.h"
#include "islands/transcript.h"
#include "json.hpp"

namespace islands {
namespace {

enum class Format { kText, kStructured };

struct RunConfig {
  std::string puzzle_path;
  std::string world_path;
  Format format = Format::kText;
  bool explain = false;
  bool extract = false;
  bool expect_unique = false;
  SolveOptions options;
};

struct LoadedPuzzle {
  std::string digest;
  PuzzleSpec spec;
};

// Parse errors are reported as "path:line:col: message".
LoadedPuzzle LoadPuzzle(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return {Sha256Hex(text), ParsePuzzle(text)};
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  } catch (const SemanticError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

World LoadWorld(const std::string& path, const PuzzleSpec& puzzle) {
  const std::string text = ReadFile(path);
  try {
    return ParseWorld(text, puzzle);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

int Solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedPuzzle puzzle = LoadPuzzle(config.puzzle_path);
  SolveResult result;
  try {
    result = SolveAll(puzzle.spec, config.options);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  }

  int code = kExitOk;
  if (result.status == SolveStatus::kNone) {
    code = kExitNoWorld;
  } else if (result.status == SolveStatus::kMultiple && config.expect_unique) {
    code = kExitNotUnique;
    err << "error: expected a unique world, found " << result.worlds.size()
        << "\n";
  }

  SolveReport report;
  report.digest = puzzle.digest;
  report.puzzle = &puzzle.spec;
  report.result = &result;
  const bool unique = result.status == SolveStatus::kUnique;
  if (config.explain) {
    if (unique) {
      report.explanation = ExplainSolution(puzzle.spec, result.worlds.front());
    } else {
      err << "note: --explain needs a unique world\n";
    }
  }
  if (config.extract) {
    if (unique) {
      const ExtractionConfig extraction =
          puzzle.spec.extraction.value_or(ExtractionConfig::Default());
      try {
        report.extraction = ExtractRows(result.reports, extraction);
      } catch (const ExtractionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
    } else {
      err << "note: --extract needs a unique world\n";
    }
  }
  out << (config.format == Format::kStructured ? RenderSolveJson(report)
                                               : RenderSolveText(report));
  if (code == kExitNoWorld) err << "no consistent world\n";
  return code;
}

int Check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedPuzzle puzzle = LoadPuzzle(config.puzzle_path);
  const World world = LoadWorld(config.world_path, puzzle.spec);
  const CheckResult check = CheckWorld(puzzle.spec, world);
  if (config.format == Format::kStructured) {
    nlohmann::ordered_json doc;
    doc["puzzle_digest"] = "sha256:" + puzzle.digest;
    doc["consistent"] = check.consistent;
    if (!check.consistent) {
      nlohmann::ordered_json v;
      if (check.axiom >= 0) v["axiom"] = check.axiom;
      if (check.round >= 0) v["round"] = check.round;
      if (!check.person.empty()) v["person"] = check.person;
      v["message"] = check.message;
      doc["violation"] = std::move(v);
    }
    out << doc.dump(2) << "\n";
  } else if (check.consistent) {
    out << "consistent\n";
  } else {
    out << "violation: " << check.message << "\n";
  }
  if (!check.consistent) {
    err << "error: the world violates the puzzle\n";
    return kExitViolation;
  }
  return kExitOk;
}

int Simulate(const RunConfig& config, std::ostream& out) {
  const LoadedPuzzle puzzle = LoadPuzzle(config.puzzle_path);
  const World world = LoadWorld(config.world_path, puzzle.spec);
  const auto lines = SimulateTranscript(puzzle.spec, world);
  out << (config.format == Format::kStructured
              ? RenderTranscriptJson(puzzle.digest, lines)
              : RenderTranscriptText(puzzle.spec, lines));
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app{"Puzzle engine for asylum-island logic puzzles", "islands"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"text", Format::kText},
                                              {"structured", Format::kStructured}};
  app.add_option("--format", config.format, "Output format: text or structured")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--budget-nodes", config.options.max_nodes,
                 "Give up after this many search nodes")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", config.options.max_seconds,
                 "Give up after this many seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.options.threads,
                 "Solver threads; 0 = OpenMP default, 1 = serial")
      ->check(CLI::NonNegativeNumber);

  CLI::App* solve = app.add_subcommand("solve", "Find every consistent world");
  solve->add_option("puzzle", config.puzzle_path, "Puzzle file")->required();
  solve->add_flag("--explain", config.explain, "Print the derivation");
  solve->add_flag("--extract", config.extract, "Print the extracted word");
  solve->add_flag("--expect-unique", config.expect_unique,
                  "Fail unless exactly one world is consistent");

  CLI::App* check = app.add_subcommand("check", "Check one world");
  check->add_option("puzzle", config.puzzle_path, "Puzzle file")->required();
  check->add_option("world", config.world_path, "World file")->required();

  CLI::App* tables = app.add_subcommand("tables", "Print the question tables");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Replay the rounds against a world");
  simulate->add_option("puzzle", config.puzzle_path, "Puzzle file")->required();
  simulate->add_option("world", config.world_path, "World file")->required();

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Prints help on request, or the parse error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return Solve(config, out, err);
    if (check->parsed()) return Check(config, out, err);
    if (simulate->parsed()) return Simulate(config, out);
    if (tables->parsed()) {
      out << RenderTables();
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace islands

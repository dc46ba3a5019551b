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

#include <atomic>
#include <chrono>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "compiled_puzzle.h"
#include "islands/errors.h"
#include "islands/semantics.h"
#include "islands/solver.h"

namespace islands {
namespace {

using Clock = std::chrono::steady_clock;

// Subtrees handed to workers. Fixed so that the frontier, and with it the
// node count, does not depend on the thread count.
constexpr size_t kFrontierTarget = 256;
constexpr uint64_t kFlushEvery = 1024;

struct Constraint {
  const Formula* body = nullptr;
  int speaker = -1;  // -1 for axioms
  uint64_t count = 0;
  bool is_belief = false;
  bool required = true;
};

// Variables are numbered: person types 0..n-1, then fluent f of person p at
// n + f * n + p. Lexicographic order over this numbering is canonical order.
class Problem {
 public:
  explicit Problem(const PuzzleSpec& puzzle)
      : puzzle_(puzzle),
        compiled_(internal::CompilePuzzle(puzzle)),
        n_(static_cast<int>(puzzle.vocabulary.persons.size())),
        nf_(static_cast<int>(puzzle.vocabulary.fluents.size())) {
    for (const auto& a : compiled_.axioms) {
      constraints_.push_back({&a, -1, 0, false, true});
    }
    for (const auto& u : compiled_.utterances) {
      constraints_.push_back(
          {&u.body, u.speaker, u.count, u.is_belief, u.required});
    }
    watch_.resize(num_vars());
    for (size_t c = 0; c < constraints_.size(); ++c) {
      std::set<int> vars;
      CollectVars(*constraints_[c].body, constraints_[c].speaker, vars);
      if (constraints_[c].speaker >= 0) vars.insert(constraints_[c].speaker);
      if (vars.empty()) unwatched_.push_back(static_cast<int>(c));
      for (int v : vars) watch_[v].push_back(static_cast<int>(c));
    }
    PruneDomains();
  }

  int num_vars() const { return n_ + nf_ * n_; }
  const std::vector<int8_t>& domain(int var) const { return domains_[var]; }
  bool infeasible() const { return infeasible_; }

  static void Set(PartialWorld& w, int n, int var, int8_t value) {
    if (var < n) {
      w.types[var] = value;
    } else {
      w.fluents[(var - n) / n][(var - n) % n] = value;
    }
  }
  void Set(PartialWorld& w, int var, int8_t value) const {
    Set(w, n_, var, value);
  }

  // False iff some constraint watching `var` is definitely violated.
  bool Consistent(const PartialWorld& w, int var) const {
    for (int c : watch_[var]) {
      if (Violated(constraints_[c], w)) return false;
    }
    return true;
  }

  World ToWorld(const PartialWorld& w) const {
    World out;
    for (int8_t t : w.types) out.types.push_back(ExtendedType::FromIndex(t));
    for (const auto& row : w.fluents) {
      out.fluents.emplace_back(row.begin(), row.end());
    }
    return out;
  }

  PartialWorld Empty() const { return PartialWorld::Empty(puzzle_.vocabulary); }

 private:
  bool Violated(const Constraint& c, const PartialWorld& w) const {
    const Truth content = EvaluatePartial(*c.body, w, c.speaker);
    if (content == Truth::kUnknown) return false;
    if (c.speaker < 0) return content == Truth::kFalse;
    const int8_t t = w.types[c.speaker];
    if (t == PartialWorld::kUnassigned) return false;
    const AgentState state{ExtendedType::FromIndex(t), c.count};
    return AssertionRule(CurrentPhases(state), c.is_belief,
                         content == Truth::kTrue) != c.required;
  }

  void CollectVars(const Formula& f, int speaker, std::set<int>& vars) const {
    auto persons = [&](auto&& add) {
      switch (f.term_kind) {
        case Formula::TermKind::kPerson:
          add(f.term_index);
          break;
        case Formula::TermKind::kSpeaker:
          add(speaker);
          break;
        case Formula::TermKind::kSlot:
          for (int p = 0; p < n_; ++p) add(p);
          break;
      }
    };
    if (f.op == Formula::Op::kBuiltin) {
      persons([&](int p) { vars.insert(p); });
    } else if (f.op == Formula::Op::kFluent) {
      persons([&](int p) { vars.insert(n_ + f.fluent * n_ + p); });
    }
    for (const auto& c : f.children) CollectVars(c, speaker, vars);
  }

  // Drops values that violate a constraint on their own.
  void PruneDomains() {
    domains_.resize(num_vars());
    PartialWorld w = Empty();
    for (int c : unwatched_) {
      if (Violated(constraints_[c], w)) infeasible_ = true;
    }
    for (int v = 0; v < num_vars(); ++v) {
      const int size = v < n_ ? ExtendedType::kCount
                              : static_cast<int>(puzzle_.vocabulary
                                                     .fluents[(v - n_) / n_]
                                                     .values.size());
      for (int x = 0; x < size; ++x) {
        Set(w, v, static_cast<int8_t>(x));
        if (Consistent(w, v)) domains_[v].push_back(static_cast<int8_t>(x));
      }
      Set(w, v, PartialWorld::kUnassigned);
      if (domains_[v].empty()) infeasible_ = true;
    }
  }

  const PuzzleSpec& puzzle_;
  internal::CompiledPuzzle compiled_;
  int n_;
  int nf_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<int>> watch_;
  std::vector<int> unwatched_;
  std::vector<std::vector<int8_t>> domains_;
  bool infeasible_ = false;
};

struct Budget {
  uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
};

// Depth-first search below a fixed prefix. One per worker.
class Worker {
 public:
  Worker(const Problem& problem, Budget& budget, int n)
      : problem_(problem), budget_(budget), n_(n) {}

  ~Worker() { Flush(); }

  void Run(PartialWorld& w, int var, std::vector<World>& out) {
    if (budget_.exhausted.load(std::memory_order_relaxed)) return;
    if (var == problem_.num_vars()) {
      out.push_back(problem_.ToWorld(w));
      return;
    }
    for (int8_t value : problem_.domain(var)) {
      if (!Tick()) return;
      Problem::Set(w, n_, var, value);
      if (problem_.Consistent(w, var)) Run(w, var + 1, out);
    }
    Problem::Set(w, n_, var, PartialWorld::kUnassigned);
  }

  // Counts one node; false once the budget is gone.
  bool Tick() {
    if (++local_ < kFlushEvery) return true;
    Flush();
    if (budget_.nodes.load(std::memory_order_relaxed) > budget_.max_nodes ||
        Clock::now() > budget_.deadline) {
      budget_.exhausted.store(true, std::memory_order_relaxed);
    }
    return !budget_.exhausted.load(std::memory_order_relaxed);
  }

  void Flush() {
    budget_.nodes.fetch_add(local_, std::memory_order_relaxed);
    local_ = 0;
  }

 private:
  const Problem& problem_;
  Budget& budget_;
  int n_;
  uint64_t local_ = 0;
};

struct Prefix {
  std::vector<int8_t> values;
};

std::vector<World> SearchSerial(const Problem& problem, Budget& budget, int n) {
  std::vector<World> out;
  PartialWorld w = problem.Empty();
  Worker worker(problem, budget, n);
  worker.Run(w, 0, out);
  return out;
}

std::vector<World> SearchParallel(const Problem& problem, Budget& budget,
                                  int n, int threads) {
  // Breadth-first expansion of the top of the tree, in canonical order.
  std::vector<Prefix> frontier{Prefix{}};
  int depth = 0;
  {
    Worker worker(problem, budget, n);
    PartialWorld w = problem.Empty();
    while (depth < problem.num_vars() && frontier.size() < kFrontierTarget &&
           !frontier.empty()) {
      std::vector<Prefix> next;
      for (const Prefix& p : frontier) {
        for (int v = 0; v < depth; ++v) problem.Set(w, v, p.values[v]);
        for (int8_t value : problem.domain(depth)) {
          if (!worker.Tick()) break;
          problem.Set(w, depth, value);
          if (problem.Consistent(w, depth)) {
            Prefix q = p;
            q.values.push_back(value);
            next.push_back(std::move(q));
          }
        }
        problem.Set(w, depth, PartialWorld::kUnassigned);
      }
      frontier = std::move(next);
      ++depth;
    }
  }

  std::vector<std::vector<World>> found(frontier.size());
  const int64_t count = static_cast<int64_t>(frontier.size());
#pragma omp parallel num_threads(threads)
  {
    Worker worker(problem, budget, n);
    PartialWorld w = problem.Empty();
#pragma omp for schedule(dynamic, 1)
    for (int64_t i = 0; i < count; ++i) {
      const Prefix& p = frontier[i];
      for (int v = 0; v < depth; ++v) problem.Set(w, v, p.values[v]);
      worker.Run(w, depth, found[i]);
      for (int v = 0; v < depth; ++v) problem.Set(w, v, PartialWorld::kUnassigned);
    }
  }

  std::vector<World> out;
  for (auto& part : found) {
    for (auto& world : part) out.push_back(std::move(world));
  }
  return out;
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

SolveResult SolveAll(const PuzzleSpec& puzzle, const SolveOptions& options) {
  const auto start = Clock::now();
  Budget budget;
  budget.max_nodes = options.max_nodes;
  budget.deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(options.max_seconds));

  const Problem problem(puzzle);
  const int n = static_cast<int>(puzzle.vocabulary.persons.size());
  SolveResult result;
  if (!problem.infeasible()) {
    const int threads = ResolveThreads(options.threads);
    result.worlds = threads == 1 ? SearchSerial(problem, budget, n)
                                 : SearchParallel(problem, budget, n, threads);
  }
  result.stats.nodes = budget.nodes.load();
  result.stats.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (budget.exhausted.load() || result.stats.nodes > options.max_nodes) {
    throw BudgetExceeded(
        "search budget exceeded after " + std::to_string(result.stats.nodes) +
            " nodes (" + std::to_string(result.stats.seconds) + " s)",
        result.stats.nodes, result.stats.seconds);
  }
  result.status = result.worlds.empty()        ? SolveStatus::kNone
                  : result.worlds.size() == 1 ? SolveStatus::kUnique
                                              : SolveStatus::kMultiple;
  if (result.status == SolveStatus::kUnique) {
    result.reports = Reports(puzzle, result.worlds.front());
  }
  return result;
}

}  // namespace islands

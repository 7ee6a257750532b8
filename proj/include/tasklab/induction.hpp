#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tasklab/statement.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

// The induction view of a task: which complete states a solution must
// accept (on) and reject (off); everything else is a don't-care.
class InductionProblem {
 public:
  InductionProblem(int n, StateSet on, StateSet off);

  // on = goals, off = reach(situations) \ goals.
  static InductionProblem from_task(const Task& t, const Limits& limits = Limits{});
  // on = goals_o, off = reach(situations_o) \ goals_o.
  static InductionProblem from_ostensive(const OstensiveDefinition& o,
                                         const Limits& limits = Limits{});

  int vars() const { return n_; }
  const StateSet& on() const { return on_; }
  const StateSet& off() const { return off_; }
  StateSet scope() const;  // on ∪ off

 private:
  int n_;
  StateSet on_;
  StateSet off_;
};

struct SolveConfig {
  std::size_t max_primes = 64;   // exact mode refuses beyond this many primes
  std::size_t max_results = 8;   // tied optima returned, canonical order
  bool greedy = false;           // weakness-greedy cover instead of exact search
  bool forbid_tautology = true;  // one-class learning only
  Limits limits{};
};

struct SolutionReport {
  Statement statement = Statement::false_(1);
  std::uint64_t weakness = 0;
  std::uint64_t bits = 0;
  std::size_t term_count = 0;
  bool valid = false;
  bool exact = true;
  std::string note;  // "ties=N", "greedy", "fallback=extensional", ...
};

// One line per report: statement first, then the numeric fields.
std::string report_line(const SolutionReport& r);

// Disjunction of one full-width term per goal state. FALSE when empty.
Statement extensional_solution(const StateSet& goals);
Statement extensional_solution(const std::vector<PartialAssignment>& goals, int n);

// All terms that avoid off, intersect on, and cannot lose a literal without
// hitting off. Canonical order.
std::vector<Term> prime_implicants(const InductionProblem& p,
                                   const Limits& limits = Limits{});

// Weakness-maximal covers of `on` by prime implicants; ties resolved by
// minimum encoding length, then canonical order. Exact mode searches all
// prime subsets (branch and bound); greedy mode is a weakness-greedy cover
// flagged exact=false.
std::vector<SolutionReport> intensional_solutions(const InductionProblem& p,
                                                  const SolveConfig& cfg = SolveConfig{});

// extension(c) restricted to on ∪ off equals on.
bool is_solution(const Statement& c, const InductionProblem& p,
                 const Limits& limits = Limits{});

// The literals shared by every given complete state, as a term.
Term meet(const std::vector<PartialAssignment>& states);

// One-class learning over positive states only: candidate terms are the
// meet-closure of the positives, the cover maximizes weakness with ties by
// fewer terms, then canonical order. The tautology is excluded by default;
// if nothing generalizes the result falls back to the extensional cover and
// says so in the note.
SolutionReport one_class_learn(const std::vector<PartialAssignment>& positives,
                               const SolveConfig& cfg = SolveConfig{});

struct EnumBounds {
  std::size_t max_terms = 4;
  std::size_t max_literals = 3;
};

// Every canonical statement within the bounds that solves p. Oracle-scale
// only (n <= limits.oracle_cap).
std::vector<SolutionReport> enumerate_all_solutions(const InductionProblem& p,
                                                    const EnumBounds& bounds = EnumBounds{},
                                                    const Limits& limits = Limits{});

// |extension(c) ∩ goals(t)|.
std::uint64_t generality(const Statement& c, const Task& t,
                         const Limits& limits = Limits{});

struct SufficiencyResult {
  bool sufficient = false;
  std::optional<Statement> witness;  // an optimum that fails the full task
};

// True iff every intensional optimum of the ostensive problem also solves
// the full task's problem.
SufficiencyResult is_sufficient(const OstensiveDefinition& o,
                                const SolveConfig& cfg = SolveConfig{});

// |(goals \ goals_o) ∩ reach(situations_o)|: listed as off by the ostensive
// problem even though the full task calls them goals.
std::uint64_t hidden_goal_count(const OstensiveDefinition& o,
                                const Limits& limits = Limits{});

}  // namespace tasklab

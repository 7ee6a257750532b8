#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tasklab/induction.hpp"

namespace tasklab {

enum class AgentKind { intentional, mimic, hybrid };

const char* to_string(AgentKind k);
std::optional<AgentKind> agent_kind_from(const std::string& name);

// A frozen pair of solutions. Which ones are populated depends on the kind:
// a mimic only has the extensional lookup, an intentional agent only the
// intensional statement, a hybrid both.
struct Agent {
  AgentKind kind = AgentKind::intentional;
  int n = 1;
  Statement intensional = Statement::false_(1);
  Statement extensional = Statement::false_(1);
  bool exact = true;  // whether the intensional search was exact
};

// Trains on an induction problem; the problem's `on` set is the training
// goal sample.
Agent train_agent(AgentKind kind, const InductionProblem& training,
                  const SolveConfig& cfg = SolveConfig{});

// extension(c) ∩ completions(s), ascending.
std::vector<PartialAssignment> abduct(const Statement& c,
                                      const PartialAssignment& s,
                                      const Limits& limits = Limits{});

// Deterministic mode: the numerically smallest abducted response, or none.
// A hybrid consults its extensional lookup first and falls back to the
// intensional statement when the lookup abducts nothing.
std::optional<PartialAssignment> decide(const Agent& a, const PartialAssignment& s,
                                        const Limits& limits = Limits{});

// Expected mode: |abducted ∩ goal_oracle| / |abducted|, 0 when nothing is
// abducted. Same hybrid fallback rule as decide.
double expected_score(const Agent& a, const PartialAssignment& s,
                      const StateSet& goal_oracle, const Limits& limits = Limits{});

// The disjuncts of `self` true of the observed complete response: the
// observer's explanation of why that response was chosen.
std::vector<Term> rationale(const Statement& self,
                            const PartialAssignment& observed);

}  // namespace tasklab

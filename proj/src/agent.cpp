#include "tasklab/agent.hpp"

namespace tasklab {

const char* to_string(AgentKind k) {
  switch (k) {
    case AgentKind::intentional: return "intentional";
    case AgentKind::mimic: return "mimic";
    case AgentKind::hybrid: return "hybrid";
  }
  return "unknown";
}

std::optional<AgentKind> agent_kind_from(const std::string& name) {
  if (name == "intentional") return AgentKind::intentional;
  if (name == "mimic") return AgentKind::mimic;
  if (name == "hybrid") return AgentKind::hybrid;
  return std::nullopt;
}

Agent train_agent(AgentKind kind, const InductionProblem& training,
                  const SolveConfig& cfg) {
  Agent a;
  a.kind = kind;
  a.n = training.vars();
  a.intensional = Statement::false_(a.n);
  a.extensional = Statement::false_(a.n);
  if (kind == AgentKind::mimic || kind == AgentKind::hybrid)
    a.extensional = extensional_solution(training.on());
  if (kind == AgentKind::intentional || kind == AgentKind::hybrid) {
    const auto reports = intensional_solutions(training, cfg);
    a.intensional = reports.front().statement;
    a.exact = reports.front().exact;
  }
  return a;
}

std::vector<PartialAssignment> abduct(const Statement& c, const PartialAssignment& s,
                                      const Limits& limits) {
  if (c.vars() != s.vars())
    throw dimension_error("abducing with a statement over " + std::to_string(c.vars()) +
                          " variables from a situation over " + std::to_string(s.vars()));
  std::vector<PartialAssignment> out;
  for (const auto& z : completions(s, limits))
    if (eval(c, z)) out.push_back(z);
  return out;
}

namespace {

// The candidate responses the agent actually considers in situation s:
// hybrids try their extensional lookup first and only abduce through the
// intensional statement when the lookup comes up empty.
std::vector<PartialAssignment> candidates(const Agent& a, const PartialAssignment& s,
                                          const Limits& limits) {
  switch (a.kind) {
    case AgentKind::mimic:
      return abduct(a.extensional, s, limits);
    case AgentKind::intentional:
      return abduct(a.intensional, s, limits);
    case AgentKind::hybrid: {
      auto out = abduct(a.extensional, s, limits);
      if (out.empty()) out = abduct(a.intensional, s, limits);
      return out;
    }
  }
  return {};
}

}  // namespace

std::optional<PartialAssignment> decide(const Agent& a, const PartialAssignment& s,
                                        const Limits& limits) {
  const auto cands = candidates(a, s, limits);
  if (cands.empty()) return std::nullopt;
  return cands.front();  // abduct returns ascending order
}

double expected_score(const Agent& a, const PartialAssignment& s,
                      const StateSet& goal_oracle, const Limits& limits) {
  if (goal_oracle.vars() != a.n)
    throw dimension_error("goal oracle over " + std::to_string(goal_oracle.vars()) +
                          " variables scoring an agent over " + std::to_string(a.n));
  const auto cands = candidates(a, s, limits);
  if (cands.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& z : cands)
    if (goal_oracle.contains(z.values())) ++hits;
  return static_cast<double>(hits) / static_cast<double>(cands.size());
}

std::vector<Term> rationale(const Statement& self, const PartialAssignment& observed) {
  if (self.vars() != observed.vars())
    throw dimension_error("rationale over mismatched variable counts (" +
                          std::to_string(self.vars()) + " vs " +
                          std::to_string(observed.vars()) + ")");
  if (!observed.is_complete())
    throw argument_error("a rationale explains a complete response, got \"" +
                         observed.to_text() + "\"");
  std::vector<Term> out;
  for (const Term& t : self.terms())
    if (t.matches(observed.values())) out.push_back(t);
  return out;
}

}  // namespace tasklab

#include "tasklab/induction.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace tasklab {

namespace {

std::uint32_t var_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

int index_bits(int n) {
  return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
}

std::uint64_t term_cost(const Term& t, int n) {
  return 1 + static_cast<std::uint64_t>(t.literal_count()) *
                 (1 + static_cast<std::uint64_t>(index_bits(n)));
}

StateSet term_extension(const Term& t, int n) {
  StateSet s(n);
  s.or_pattern(t.mask(), t.bits());
  return s;
}

}  // namespace

InductionProblem::InductionProblem(int n, StateSet on, StateSet off)
    : n_(n), on_(std::move(on)), off_(std::move(off)) {
  if (on_.vars() != n || off_.vars() != n)
    throw dimension_error("induction problem over n=" + std::to_string(n) +
                          " built from sets over n=" + std::to_string(on_.vars()) +
                          " and n=" + std::to_string(off_.vars()));
  if (on_.intersects(off_))
    throw argument_error("the on and off sets of an induction problem overlap");
}

InductionProblem InductionProblem::from_task(const Task& t, const Limits& limits) {
  const auto violations = validate_task(t);
  if (!violations.empty()) {
    std::string msg = "task fails validation:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw invalid_task_error(msg);
  }
  StateSet on = StateSet::of(t.vars(), t.goals());
  StateSet off = reach_set(t.situations(), t.vars(), limits);
  off -= on;
  return InductionProblem(t.vars(), std::move(on), std::move(off));
}

InductionProblem InductionProblem::from_ostensive(const OstensiveDefinition& o,
                                                  const Limits& limits) {
  StateSet on = StateSet::of(o.task().vars(), o.goals_o());
  StateSet off = reach_set(o.situations_o(), o.task().vars(), limits);
  off -= on;
  return InductionProblem(o.task().vars(), std::move(on), std::move(off));
}

StateSet InductionProblem::scope() const {
  StateSet s = on_;
  s |= off_;
  return s;
}

std::string report_line(const SolutionReport& r) {
  std::string line = print_statement(r.statement);
  line += "\tweakness=" + std::to_string(r.weakness);
  line += "\tbits=" + std::to_string(r.bits);
  line += "\tterms=" + std::to_string(r.term_count);
  line += "\tvalid=";
  line += r.valid ? "yes" : "no";
  line += "\texact=";
  line += r.exact ? "yes" : "no";
  if (!r.note.empty()) line += "\t" + r.note;
  return line;
}

Statement extensional_solution(const StateSet& goals) {
  const int n = goals.vars();
  std::vector<Term> terms;
  for (std::uint32_t z : goals.to_states()) terms.emplace_back(var_mask(n), z);
  return Statement::make(n, std::move(terms));
}

Statement extensional_solution(const std::vector<PartialAssignment>& goals, int n) {
  std::vector<Term> terms;
  terms.reserve(goals.size());
  for (const auto& g : goals) {
    if (g.vars() != n)
      throw dimension_error("goal \"" + g.to_text() + "\" is over " +
                            std::to_string(g.vars()) + " variables, expected " +
                            std::to_string(n));
    if (!g.is_complete())
      throw argument_error("extensional construction needs complete goals, got \"" +
                           g.to_text() + "\"");
    terms.emplace_back(var_mask(n), g.values());
  }
  return Statement::make(n, std::move(terms));
}

std::vector<Term> prime_implicants(const InductionProblem& p, const Limits& limits) {
  const int n = p.vars();
  if (n > limits.exact_cap)
    throw capacity_error("prime generation over n=" + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(limits.exact_cap));
  if (p.on().empty()) return {};
  if (p.off().empty()) return {Term{}};

  StateSet care = StateSet::full(n);
  care -= p.off();

  // Quine–McCluskey over the care set: start from its minterms and merge
  // sibling cubes (same variable mask, one value bit apart) level by level.
  // A cube with no sibling in its level cannot lose any literal and is
  // prime; it is reported when its extension meets the on set.
  const auto key = [](std::uint32_t mask, std::uint32_t bits) {
    return (static_cast<std::uint64_t>(mask) << 32) | bits;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> level;
  std::unordered_set<std::uint64_t> level_keys;
  for (std::uint32_t z : care.to_states()) {
    level.emplace_back(var_mask(n), z);
    level_keys.insert(key(var_mask(n), z));
  }
  std::size_t cube_total = level.size();
  std::vector<Term> primes;
  while (!level.empty()) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    std::unordered_set<std::uint64_t> next_keys;
    for (const auto& [mask, bits] : level) {
      bool merged = false;
      std::uint32_t rest = mask;
      while (rest != 0) {
        const std::uint32_t bit = rest & (0 - rest);
        rest &= rest - 1;
        if (level_keys.count(key(mask, bits ^ bit))) {
          merged = true;
          // Insert the widened cube once: let the sibling holding the 0 do it.
          if ((bits & bit) == 0 && next_keys.insert(key(mask ^ bit, bits)).second) {
            next.emplace_back(mask ^ bit, bits);
            if (++cube_total > limits.max_cubes)
              throw capacity_error("prime generation exceeded the cube budget of " +
                                   std::to_string(limits.max_cubes));
          }
        }
      }
      if (!merged && p.on().intersects_pattern(mask, bits))
        primes.emplace_back(mask, bits);
    }
    level = std::move(next);
    level_keys = std::move(next_keys);
  }
  std::sort(primes.begin(), primes.end(), term_less);
  return primes;
}

bool is_solution(const Statement& c, const InductionProblem& p, const Limits& limits) {
  if (c.vars() != p.vars())
    throw dimension_error("statement over " + std::to_string(c.vars()) +
                          " variables checked against a problem over " +
                          std::to_string(p.vars()));
  StateSet ext = extension_set(c, limits);
  ext &= p.scope();
  return ext == p.on();
}

namespace {

constexpr std::size_t kTieCap = 4096;

struct CoverOutcome {
  std::vector<std::vector<Term>> ties;  // canonical order, capped at kTieCap
  std::uint64_t best_cost = 0;
  std::uint64_t weakness = 0;
  bool capped = false;
};

// Minimum-total-cost subsets of `cands` whose joint extension equals the
// joint extension of all of them (the weakness ceiling: extensions only
// grow under disjunction, so the union of every candidate is the weakest
// reachable statement). Candidates must be canonically sorted; ties come
// out in canonical statement order.
CoverOutcome cover_search(int n, const std::vector<Term>& cands,
                          const std::vector<std::uint64_t>& costs,
                          const Limits& limits) {
  CoverOutcome out;
  std::vector<StateSet> exts;
  exts.reserve(cands.size());
  StateSet target(n);
  for (const Term& t : cands) {
    exts.push_back(term_extension(t, n));
    target |= exts.back();
  }
  out.weakness = target.size();

  // Essential loop: a target state covered by exactly one candidate forces
  // that candidate; anything its cover absorbs is settled, repeat.
  std::vector<std::size_t> active(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) active[i] = i;
  std::vector<std::size_t> forced;
  StateSet cover(n);
  const auto states = target.to_states();
  for (;;) {
    std::size_t forced_before = forced.size();
    for (std::uint32_t z : states) {
      if (cover.contains(z)) continue;
      std::size_t hits = 0, last = 0;
      for (std::size_t i : active) {
        if (exts[i].contains(z)) {
          ++hits;
          last = i;
          if (hits > 1) break;
        }
      }
      if (hits == 1) {
        forced.push_back(last);
        cover |= exts[last];
      }
    }
    if (forced.size() == forced_before) break;
    std::vector<std::size_t> still;
    for (std::size_t i : active)
      if (!cover.contains_all(exts[i])) still.push_back(i);
    active = std::move(still);
  }
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  std::uint64_t base_cost = 0;
  std::vector<Term> base_terms;
  for (std::size_t i : forced) {
    base_cost += costs[i];
    base_terms.push_back(cands[i]);
  }

  if (cover == target) {
    out.best_cost = base_cost;
    out.ties.push_back(base_terms);
    return out;
  }

  // Suffix unions over the remaining candidates, for reachability pruning,
  // plus the cheapest remaining cost as an admissible bound.
  const std::size_t m = active.size();
  std::vector<StateSet> suffix(m + 1, StateSet(n));
  for (std::size_t i = m; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i] |= exts[active[i]];
  }
  std::vector<std::uint64_t> cheapest(m + 1, ~std::uint64_t{0});
  for (std::size_t i = m; i-- > 0;)
    cheapest[i] = std::min(cheapest[i + 1], costs[active[i]]);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::vector<Term>> ties;
  bool capped = false;
  std::vector<std::size_t> stack;
  std::uint64_t nodes = 0;

  const auto record = [&](std::uint64_t cost) {
    if (cost < best) {
      best = cost;
      ties.clear();
      capped = false;
    }
    if (cost == best) {
      if (ties.size() >= kTieCap) {
        capped = true;
        return;
      }
      std::vector<Term> terms = base_terms;
      for (std::size_t i : stack) terms.push_back(cands[active[i]]);
      ties.push_back(std::move(terms));
    }
  };

  const std::function<void(std::size_t, StateSet&, std::uint64_t)> dfs =
      [&](std::size_t i, StateSet& covered, std::uint64_t cost) {
        if (++nodes > limits.search_budget)
          throw capacity_error("cover search exceeded its node budget of " +
                               std::to_string(limits.search_budget));
        if (covered == target) {
          record(cost);
          return;
        }
        if (i == m) return;
        if (cost + cheapest[i] > best) return;
        {
          StateSet reachable = covered;
          reachable |= suffix[i];
          if (!reachable.contains_all(target)) return;
        }
        if (!covered.contains_all(exts[active[i]])) {
          StateSet with = covered;
          with |= exts[active[i]];
          stack.push_back(i);
          dfs(i + 1, with, cost + costs[active[i]]);
          stack.pop_back();
        }
        dfs(i + 1, covered, cost);
      };
  dfs(0, cover, base_cost);

  out.best_cost = best;
  out.ties = std::move(ties);
  out.capped = capped;
  return out;
}

SolutionReport make_report(Statement s, const InductionProblem& p, bool exact,
                           std::string note, const Limits& limits) {
  SolutionReport r;
  r.weakness = weakness(s, limits);
  r.bits = encoding_length(s);
  r.term_count = s.terms().size();
  r.valid = is_solution(s, p, limits);
  r.exact = exact;
  r.note = std::move(note);
  r.statement = std::move(s);
  return r;
}

}  // namespace

std::vector<SolutionReport> intensional_solutions(const InductionProblem& p,
                                                  const SolveConfig& cfg) {
  const int n = p.vars();
  if (p.on().empty())
    return {make_report(Statement::false_(n), p, true, "", cfg.limits)};

  std::vector<Term> primes = prime_implicants(p, cfg.limits);

  if (cfg.greedy) {
    // Keep every prime (weakness-maximal by construction), then delete
    // redundant terms from the costly end. Exact in weakness, heuristic in
    // length.
    StateSet target(n);
    std::vector<StateSet> exts;
    exts.reserve(primes.size());
    for (const Term& t : primes) {
      exts.push_back(term_extension(t, n));
      target |= exts.back();
    }
    std::vector<bool> kept(primes.size(), true);
    for (std::size_t i = primes.size(); i-- > 0;) {
      StateSet rest(n);
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (kept[j] && j != i) rest |= exts[j];
      if (rest == target) kept[i] = false;
    }
    std::vector<Term> terms;
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (kept[j]) terms.push_back(primes[j]);
    return {make_report(Statement::make(n, std::move(terms)), p, false, "greedy",
                        cfg.limits)};
  }

  if (primes.size() > cfg.max_primes)
    throw capacity_error("exact search over " + std::to_string(primes.size()) +
                         " prime implicants exceeds the cap of " +
                         std::to_string(cfg.max_primes) + "; use the greedy mode");

  std::vector<std::uint64_t> costs;
  costs.reserve(primes.size());
  for (const Term& t : primes) costs.push_back(term_cost(t, n));
  CoverOutcome found = cover_search(n, primes, costs, cfg.limits);

  std::string note = "ties=" + std::to_string(found.ties.size());
  if (found.capped) note += " (capped)";
  std::vector<SolutionReport> out;
  for (auto& terms : found.ties) {
    out.push_back(make_report(Statement::make(n, std::move(terms)), p, true, note,
                              cfg.limits));
    if (out.size() >= cfg.max_results) break;
  }
  // The search yields ties in canonical order already; keep a defensive
  // sort so the public contract never depends on that argument.
  std::sort(out.begin(), out.end(), [](const SolutionReport& a, const SolutionReport& b) {
    return statement_less(a.statement, b.statement);
  });
  return out;
}

Term meet(const std::vector<PartialAssignment>& states) {
  if (states.empty())
    throw argument_error("the meet of an empty set of states is undefined");
  const int n = states[0].vars();
  std::uint32_t agree = var_mask(n);
  const std::uint32_t first = states[0].values();
  for (const auto& z : states) {
    if (z.vars() != n)
      throw dimension_error("meet over mismatched variable counts (" +
                            std::to_string(n) + " vs " + std::to_string(z.vars()) + ")");
    if (!z.is_complete())
      throw argument_error("meet is over complete states, got \"" + z.to_text() + "\"");
    agree &= ~(z.values() ^ first);
  }
  return Term{agree, first & agree};
}

SolutionReport one_class_learn(const std::vector<PartialAssignment>& positives,
                               const SolveConfig& cfg) {
  if (positives.empty())
    throw argument_error("one-class learning needs at least one positive state");
  const int n = positives[0].vars();
  if (n > cfg.limits.enum_cap)
    throw capacity_error("one-class learning over n=" + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cfg.limits.enum_cap));
  std::vector<PartialAssignment> pos = positives;
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());

  // Close the positives' minterms under pairwise meet. Folding any subset's
  // meet through one generator at a time reaches every subset meet.
  const auto key = [](const Term& t) {
    return (static_cast<std::uint64_t>(t.mask()) << 32) | t.bits();
  };
  std::vector<Term> closed;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Term> generators;
  for (const auto& z : pos) {
    if (z.vars() != n)
      throw dimension_error("positive states over mixed variable counts");
    if (!z.is_complete())
      throw argument_error("one-class positives must be complete states, got \"" +
                           z.to_text() + "\"");
    generators.emplace_back(var_mask(n), z.values());
  }
  for (const Term& g : generators)
    if (seen.insert(key(g)).second) closed.push_back(g);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const Term t = closed[i];
    for (const Term& g : generators) {
      const std::uint32_t agree = t.mask() & g.mask() & ~(t.bits() ^ g.bits());
      const Term met{agree, t.bits() & agree};
      if (seen.insert(key(met)).second) {
        closed.push_back(met);
        if (closed.size() > cfg.limits.max_closed_terms)
          throw capacity_error("meet closure exceeded the cap of " +
                               std::to_string(cfg.limits.max_closed_terms) +
                               " closed terms");
      }
    }
  }

  std::vector<Term> cands;
  for (const Term& t : closed) {
    if (t.is_true() && cfg.forbid_tautology) continue;
    cands.push_back(t);
  }
  // Keep only subsumption-maximal candidates: a dominated term never helps
  // the union and never wins a tie.
  std::vector<Term> maximal;
  for (const Term& t : cands) {
    bool dominated = false;
    for (const Term& u : cands)
      if (!(u == t) && term_subsumes(u, t)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(t);
  }
  std::sort(maximal.begin(), maximal.end(), term_less);

  std::vector<std::uint64_t> costs(maximal.size(), 1);
  CoverOutcome found = cover_search(n, maximal, costs, cfg.limits);
  Statement result = Statement::make(n, found.ties.front());

  SolutionReport r;
  r.weakness = weakness(result, cfg.limits);
  r.bits = encoding_length(result);
  r.term_count = result.terms().size();
  r.exact = true;
  bool recall = true;
  for (const auto& z : pos)
    if (!eval(result, z)) recall = false;
  r.valid = recall;
  if (pos.size() > 1 && result == extensional_solution(pos, n))
    r.note = "fallback=extensional";
  r.statement = std::move(result);
  return r;
}

std::vector<SolutionReport> enumerate_all_solutions(const InductionProblem& p,
                                                    const EnumBounds& bounds,
                                                    const Limits& limits) {
  const int n = p.vars();
  if (n > limits.oracle_cap || n > 6)
    throw capacity_error("exhaustive solution enumeration over n=" + std::to_string(n) +
                         " exceeds the oracle cap of " + std::to_string(limits.oracle_cap));
  std::uint64_t on_mask = 0, scope_mask = 0;
  for (std::uint32_t z : p.on().to_states()) on_mask |= std::uint64_t{1} << z;
  scope_mask = on_mask;
  for (std::uint32_t z : p.off().to_states()) scope_mask |= std::uint64_t{1} << z;

  std::vector<Term> terms;
  for (std::uint32_t mask = 0; mask <= var_mask(n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > bounds.max_literals) continue;
    std::uint32_t bits = 0;
    do {
      terms.emplace_back(mask, bits);
      bits = (bits - mask) & mask;
    } while (bits != 0);
  }
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<std::uint64_t> ext(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::uint64_t e = 0;
    for (std::uint32_t z = 0; z <= var_mask(n); ++z)
      if (terms[i].matches(z)) e |= std::uint64_t{1} << z;
    ext[i] = e;
  }

  std::vector<SolutionReport> out;
  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
  const auto emit = [&](std::uint64_t extension) {
    std::vector<Term> picked;
    picked.reserve(chosen.size());
    for (std::size_t i : chosen) picked.push_back(terms[i]);
    Statement s = Statement::make(n, std::move(picked));
    SolutionReport r;
    r.weakness = static_cast<std::uint64_t>(std::popcount(extension));
    r.bits = encoding_length(s);
    r.term_count = s.terms().size();
    r.valid = true;
    r.exact = true;
    r.statement = std::move(s);
    out.push_back(std::move(r));
  };
  // Depth-first over canonical term order; chosen terms form an antichain,
  // which is exactly the canonical-statement condition.
  const std::function<void(std::size_t, std::uint64_t)> dfs =
      [&](std::size_t from, std::uint64_t extension) {
        if (++nodes > limits.search_budget)
          throw capacity_error("solution enumeration exceeded its node budget of " +
                               std::to_string(limits.search_budget));
        if ((extension & scope_mask) == on_mask) emit(extension);
        if (chosen.size() == bounds.max_terms) return;
        for (std::size_t i = from; i < terms.size(); ++i) {
          bool absorbed = false;
          for (std::size_t j : chosen)
            if (term_subsumes(terms[j], terms[i])) {
              absorbed = true;
              break;
            }
          if (absorbed) continue;
          chosen.push_back(i);
          dfs(i + 1, extension | ext[i]);
          chosen.pop_back();
        }
      };
  dfs(0, 0);
  return out;
}

std::uint64_t generality(const Statement& c, const Task& t, const Limits& limits) {
  if (c.vars() != t.vars())
    throw dimension_error("statement over " + std::to_string(c.vars()) +
                          " variables scored against a task over " +
                          std::to_string(t.vars()));
  StateSet ext = extension_set(c, limits);
  ext &= StateSet::of(t.vars(), t.goals());
  return ext.size();
}

SufficiencyResult is_sufficient(const OstensiveDefinition& o, const SolveConfig& cfg) {
  const InductionProblem trained = InductionProblem::from_ostensive(o, cfg.limits);
  const InductionProblem full = InductionProblem::from_task(o.task(), cfg.limits);
  SufficiencyResult result;
  result.sufficient = true;
  for (const auto& r : intensional_solutions(trained, cfg)) {
    if (!is_solution(r.statement, full, cfg.limits)) {
      result.sufficient = false;
      result.witness = r.statement;
      break;
    }
  }
  return result;
}

std::uint64_t hidden_goal_count(const OstensiveDefinition& o, const Limits& limits) {
  const int n = o.task().vars();
  StateSet hidden = StateSet::of(n, o.task().goals());
  hidden -= StateSet::of(n, o.goals_o());
  hidden &= reach_set(o.situations_o(), n, limits);
  return hidden.size();
}

}  // namespace tasklab

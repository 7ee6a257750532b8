#pragma once

// Independent brute-force reference implementations and random-data
// generators used to cross-check the library. Everything here is
// deliberately naive: correctness over speed, and no code shared with the
// implementations under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tasklab/assignment.hpp"
#include "tasklab/induction.hpp"
#include "tasklab/statement.hpp"
#include "tasklab/task.hpp"

namespace oracles {

// Deterministic engine for test data; mt19937_64 output is pinned by the
// standard, so these streams are identical everywhere.
inline std::mt19937_64 test_rng(std::uint64_t seed) {
  return std::mt19937_64(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
}

// Biased-by-modulo draw; fine for test data.
inline std::uint64_t draw(std::mt19937_64& g, std::uint64_t bound) {
  return g() % bound;
}

inline bool naive_term_matches(const tasklab::Term& t, std::uint32_t state) {
  for (const tasklab::Literal& l : t.literals()) {
    const bool bit = (state >> l.var) & 1u;
    if (bit != l.positive) return false;
  }
  return true;
}

inline bool naive_eval(const tasklab::Statement& c, std::uint32_t state) {
  for (const tasklab::Term& t : c.terms())
    if (naive_term_matches(t, state)) return true;
  return false;
}

// Extension by trying every complete state, ascending.
inline std::vector<std::uint32_t> naive_extension(const tasklab::Statement& c) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t z = 0; z < (std::uint32_t{1} << c.vars()); ++z)
    if (naive_eval(c, z)) out.push_back(z);
  return out;
}

// Encoding length recomputed from first principles: one bit per term plus,
// per literal, one polarity bit and enough bits to index a variable.
inline std::uint64_t naive_encoding_length(const tasklab::Statement& c) {
  const int n = c.vars();
  std::uint64_t index_bits = 0;
  while ((std::uint64_t{1} << index_bits) < static_cast<std::uint64_t>(n))
    ++index_bits;
  if (c.terms().empty()) return 1;
  std::uint64_t total = 0;
  for (const tasklab::Term& t : c.terms())
    total += 1 + static_cast<std::uint64_t>(t.literal_count()) * (1 + index_bits);
  return total;
}

// All prime implicants by scanning every (mask, bits) pattern: admissible
// patterns avoid `off` and meet `on`; a pattern is prime when dropping any
// one of its literals hits `off`.
inline std::vector<tasklab::Term> naive_primes(const tasklab::InductionProblem& p) {
  const int n = p.vars();
  const std::uint32_t states = std::uint32_t{1} << n;
  auto avoids_off = [&](std::uint32_t mask, std::uint32_t bits) {
    for (std::uint32_t z = 0; z < states; ++z)
      if ((z & mask) == bits && p.off().contains(z)) return false;
    return true;
  };
  auto meets_on = [&](std::uint32_t mask, std::uint32_t bits) {
    for (std::uint32_t z = 0; z < states; ++z)
      if ((z & mask) == bits && p.on().contains(z)) return true;
    return false;
  };
  std::vector<tasklab::Term> out;
  const std::uint32_t full = states - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    for (std::uint32_t bits = mask;; bits = (bits - 1) & mask) {
      if (avoids_off(mask, bits) && meets_on(mask, bits)) {
        bool prime = true;
        for (int v = 0; v < n && prime; ++v) {
          const std::uint32_t bit = std::uint32_t{1} << v;
          if (!(mask & bit)) continue;
          if (avoids_off(mask & ~bit, bits & ~bit)) prime = false;
        }
        if (prime) out.emplace_back(mask, bits);
      }
      if (bits == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), tasklab::term_less);
  return out;
}

// A random induction problem over n variables: each complete state goes to
// on / off / don't-care (or just on / off when dc_free); `on` is forced
// nonempty.
inline tasklab::InductionProblem random_problem(std::mt19937_64& g, int n,
                                                bool dc_free) {
  const std::uint32_t states = std::uint32_t{1} << n;
  tasklab::StateSet on(n), off(n);
  for (std::uint32_t z = 0; z < states; ++z) {
    const std::uint64_t r = draw(g, dc_free ? 2 : 3);
    if (r == 0)
      on.insert(z);
    else if (r == 1)
      off.insert(z);
  }
  if (on.empty()) {
    const auto z = static_cast<std::uint32_t>(draw(g, states));
    off.erase(z);
    on.insert(z);
  }
  return tasklab::InductionProblem(n, on, off);
}

// The first k values of a seeded shuffle of {0, ..., count-1}.
inline std::vector<int> random_distinct(std::mt19937_64& g, int count, int k) {
  std::vector<int> idx(static_cast<std::size_t>(count));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(draw(g, static_cast<std::uint64_t>(count - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

inline tasklab::Term random_term(std::mt19937_64& g, int n, int max_literals) {
  const int lits = static_cast<int>(draw(g, static_cast<std::uint64_t>(
                                                std::min(n, max_literals) + 1)));
  std::uint32_t mask = 0, bits = 0;
  for (int v : random_distinct(g, n, lits)) {
    mask |= std::uint32_t{1} << v;
    if (draw(g, 2)) bits |= std::uint32_t{1} << v;
  }
  return tasklab::Term(mask, bits);
}

// A random canonical statement (possibly FALSE or TRUE once canonicalized).
inline tasklab::Statement random_statement(std::mt19937_64& g, int n,
                                           int max_terms, int max_literals) {
  const int count = static_cast<int>(draw(g, static_cast<std::uint64_t>(max_terms + 1)));
  std::vector<tasklab::Term> terms;
  for (int i = 0; i < count; ++i) terms.push_back(random_term(g, n, max_literals));
  return tasklab::Statement::make(n, std::move(terms));
}

// Syntactically valid but messy statement text: unsorted literals,
// duplicate and subsumed terms, ragged spacing, TRUE mixed in. Every term
// keeps its variables distinct so the text stays parseable.
inline std::string random_messy_text(std::mt19937_64& g, int n) {
  static const char* const kGaps[] = {"", " ", "  ", "\t", " \t "};
  auto gap = [&] { return kGaps[draw(g, 5)]; };
  const int term_count = 1 + static_cast<int>(draw(g, 4));
  std::string out;
  out += gap();
  for (int t = 0; t < term_count; ++t) {
    if (t) {
      out += gap();
      out += '|';
      out += gap();
    }
    if (draw(g, 8) == 0) {
      out += "TRUE";
      continue;
    }
    const int lits = 1 + static_cast<int>(draw(g, static_cast<std::uint64_t>(
                                                     std::min(n, 4))));
    const std::vector<int> vars = random_distinct(g, n, lits);
    for (int i = 0; i < lits; ++i) {
      if (i) {
        out += gap();
        out += '&';
        out += gap();
      }
      out += 'x';
      out += std::to_string(vars[static_cast<std::size_t>(i)]);
      out += gap();
      out += '=';
      out += gap();
      out += draw(g, 2) ? '1' : '0';
    }
  }
  out += gap();
  return out;
}

// A random valid task: sample goals, then situations as restrictions of
// goals (guaranteeing every situation a goal supersequence).
inline tasklab::Task random_task(std::mt19937_64& g, int n, int max_goals) {
  const std::uint32_t states = std::uint32_t{1} << n;
  const int goal_count =
      1 + static_cast<int>(draw(g, static_cast<std::uint64_t>(
                                       std::min<std::uint32_t>(states, static_cast<std::uint32_t>(max_goals)))));
  std::vector<tasklab::PartialAssignment> goals;
  for (int i = 0; i < goal_count; ++i)
    goals.push_back(tasklab::PartialAssignment::complete(
        n, static_cast<std::uint32_t>(draw(g, states))));
  std::vector<tasklab::PartialAssignment> situations;
  const int situation_count = 1 + static_cast<int>(draw(g, 4));
  const std::uint32_t var_mask = states - 1;
  for (int i = 0; i < situation_count; ++i) {
    const auto& base = goals[draw(g, goals.size())];
    const auto defined = static_cast<std::uint32_t>(draw(g, states)) & var_mask;
    situations.emplace_back(n, defined, base.values() & defined);
  }
  return tasklab::Task(n, std::move(situations), std::move(goals));
}

}  // namespace oracles

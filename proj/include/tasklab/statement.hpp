#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tasklab/assignment.hpp"

namespace tasklab {

struct Literal {
  int var;
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.positive < b.positive;
  }
};

// A conjunction of literals over distinct variables, packed like a pattern:
// mask = which variables appear, bits = their required values. The empty
// term is TRUE. Does not carry n; pattern form and weakness take it.
class Term {
 public:
  Term() = default;  // TRUE
  Term(std::uint32_t mask, std::uint32_t bits);

  static Term from_literals(const std::vector<Literal>& lits);
  static Term from_pattern(const std::string& pattern);

  std::uint32_t mask() const { return mask_; }
  std::uint32_t bits() const { return bits_; }
  int literal_count() const;
  bool is_true() const { return mask_ == 0; }

  std::vector<Literal> literals() const;  // ascending by variable
  std::string pattern(int n) const;
  bool matches(std::uint32_t state) const { return (state & mask_) == bits_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::uint32_t mask_ = 0;
  std::uint32_t bits_ = 0;
};

// Canonical order: fewer literals first, then lexicographic by the
// (variable, polarity) sequence.
bool term_less(const Term& a, const Term& b);

// True iff a's literals are a subset of b's, i.e. extension(a) ⊇ extension(b).
bool term_subsumes(const Term& a, const Term& b);

// Conjunction of two terms; nullopt when they contradict.
std::optional<Term> conjoin(const Term& a, const Term& b);

std::uint64_t term_weakness(const Term& t, int n);

// A statement in full disjunctive normal form, kept canonical: terms are
// deduplicated, subsumption-pruned and sorted. The empty statement is FALSE.
class Statement {
 public:
  static Statement make(int n, std::vector<Term> terms);
  static Statement false_(int n);
  static Statement true_(int n);

  int vars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_false() const { return terms_.empty(); }
  bool is_true() const { return terms_.size() == 1 && terms_[0].is_true(); }

  friend bool operator==(const Statement&, const Statement&) = default;

 private:
  Statement(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {}

  int n_;
  std::vector<Term> terms_;
};

// Lexicographic over the canonical term sequences.
bool statement_less(const Statement& a, const Statement& b);

// Truth of c at the complete state z.
bool eval(const Statement& c, const PartialAssignment& z);

StateSet extension_set(const Statement& c, const Limits& limits = Limits{});
std::vector<PartialAssignment> extension(const Statement& c,
                                         const Limits& limits = Limits{});

// |extension(c)| over the 2^n complete states.
std::uint64_t weakness(const Statement& c, const Limits& limits = Limits{});

// Description length in bits: per term 1 + sum over literals of
// (1 + ceil(log2 n)); FALSE costs 1.
std::uint64_t encoding_length(const Statement& c);

// Union of the two statements' terms, canonicalized.
Statement disjoin(const Statement& a, const Statement& b);

// Grammar:  statement := 'FALSE' | term ('|' term)*
//           term      := 'TRUE' | literal ('&' literal)*
//           literal   := 'x' digits '=' ('0'|'1')
// Whitespace-insensitive; see parse_error for failure kinds.
Statement parse_statement(const std::string& text, int n);

// Canonical text; single spaces around '&' and '|'.
std::string print_statement(const Statement& c);

// Terms of c paired with their extensions, in canonical term order.
std::vector<std::pair<Term, std::vector<PartialAssignment>>> split_symbols(
    const Statement& c, const Limits& limits = Limits{});

}  // namespace tasklab

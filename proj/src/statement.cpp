#include "tasklab/statement.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace tasklab {

namespace {

std::uint32_t var_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

void check_scope(const Term& t, int n, const char* what) {
  if ((t.mask() & ~var_mask(n)) != 0)
    throw argument_error(std::string(what) + " uses variables beyond x" +
                         std::to_string(n - 1));
}

int index_bits(int n) {
  return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
}

}  // namespace

Term::Term(std::uint32_t mask, std::uint32_t bits) : mask_(mask), bits_(bits) {
  if ((bits_ & ~mask_) != 0)
    throw argument_error("term value bits set outside its variable mask");
}

Term Term::from_literals(const std::vector<Literal>& lits) {
  std::uint32_t mask = 0, bits = 0;
  for (const Literal& l : lits) {
    if (l.var < 0 || l.var >= kMaxVars)
      throw argument_error("literal variable x" + std::to_string(l.var) +
                           " out of range");
    const std::uint32_t bit = std::uint32_t{1} << l.var;
    if (mask & bit) {
      const bool prior = (bits & bit) != 0;
      if (prior != l.positive)
        throw argument_error("contradictory literals on x" + std::to_string(l.var));
      throw argument_error("duplicate literal on x" + std::to_string(l.var));
    }
    mask |= bit;
    if (l.positive) bits |= bit;
  }
  return {mask, bits};
}

Term Term::from_pattern(const std::string& pattern) {
  const auto a = PartialAssignment::from_text(pattern);
  return {a.defined(), a.values()};
}

int Term::literal_count() const { return std::popcount(mask_); }

std::vector<Literal> Term::literals() const {
  std::vector<Literal> out;
  out.reserve(static_cast<std::size_t>(literal_count()));
  std::uint32_t rest = mask_;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    out.push_back({v, (bits_ >> v & 1u) != 0});
    rest &= rest - 1;
  }
  return out;
}

std::string Term::pattern(int n) const {
  check_scope(*this, n, "term");
  std::string out(static_cast<std::size_t>(n), '*');
  for (int i = 0; i < n; ++i)
    if (mask_ >> i & 1u) out[static_cast<std::size_t>(i)] = (bits_ >> i & 1u) ? '1' : '0';
  return out;
}

bool term_less(const Term& a, const Term& b) {
  const int ca = a.literal_count(), cb = b.literal_count();
  if (ca != cb) return ca < cb;
  const auto la = a.literals(), lb = b.literals();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

bool term_subsumes(const Term& a, const Term& b) {
  return (a.mask() & b.mask()) == a.mask() && ((a.bits() ^ b.bits()) & a.mask()) == 0;
}

std::optional<Term> conjoin(const Term& a, const Term& b) {
  if (((a.bits() ^ b.bits()) & a.mask() & b.mask()) != 0) return std::nullopt;
  return Term{a.mask() | b.mask(), a.bits() | b.bits()};
}

std::uint64_t term_weakness(const Term& t, int n) {
  check_scope(t, n, "term");
  return std::uint64_t{1} << (n - t.literal_count());
}

Statement Statement::make(int n, std::vector<Term> terms) {
  if (n < 1 || n > kMaxVars)
    throw argument_error("variable count must lie in [1, " +
                         std::to_string(kMaxVars) + "], got " + std::to_string(n));
  for (const Term& t : terms) check_scope(t, n, "statement term");
  std::sort(terms.begin(), terms.end(), term_less);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  // Subsumption prune: terms are sorted by literal count, so any absorbing
  // term precedes the terms it absorbs.
  std::vector<Term> kept;
  kept.reserve(terms.size());
  for (const Term& t : terms) {
    bool absorbed = false;
    for (const Term& k : kept)
      if (term_subsumes(k, t)) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(t);
  }
  return Statement{n, std::move(kept)};
}

Statement Statement::false_(int n) { return make(n, {}); }

Statement Statement::true_(int n) { return make(n, {Term{}}); }

bool statement_less(const Statement& a, const Statement& b) {
  if (a.vars() != b.vars()) return a.vars() < b.vars();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t m = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (term_less(ta[i], tb[i])) return true;
    if (term_less(tb[i], ta[i])) return false;
  }
  return ta.size() < tb.size();
}

bool eval(const Statement& c, const PartialAssignment& z) {
  if (z.vars() != c.vars())
    throw dimension_error("evaluating a statement over " + std::to_string(c.vars()) +
                          " variables at a state over " + std::to_string(z.vars()));
  if (!z.is_complete())
    throw argument_error("statements are evaluated at complete states, got \"" +
                         z.to_text() + "\"");
  for (const Term& t : c.terms())
    if (t.matches(z.values())) return true;
  return false;
}

StateSet extension_set(const Statement& c, const Limits& limits) {
  if (c.vars() > limits.enum_cap)
    throw capacity_error("extension over n=" + std::to_string(c.vars()) +
                         " exceeds the cap of " + std::to_string(limits.enum_cap));
  StateSet out(c.vars());
  for (const Term& t : c.terms()) out.or_pattern(t.mask(), t.bits());
  return out;
}

std::vector<PartialAssignment> extension(const Statement& c, const Limits& limits) {
  return extension_set(c, limits).to_assignments();
}

std::uint64_t weakness(const Statement& c, const Limits& limits) {
  if (c.terms().size() == 1) return term_weakness(c.terms()[0], c.vars());
  if (c.is_false()) return 0;
  return extension_set(c, limits).size();
}

std::uint64_t encoding_length(const Statement& c) {
  if (c.is_false()) return 1;
  const std::uint64_t per_literal = 1 + static_cast<std::uint64_t>(index_bits(c.vars()));
  std::uint64_t total = 0;
  for (const Term& t : c.terms())
    total += 1 + per_literal * static_cast<std::uint64_t>(t.literal_count());
  return total;
}

Statement disjoin(const Statement& a, const Statement& b) {
  if (a.vars() != b.vars())
    throw dimension_error("disjoining statements over different variable counts (" +
                          std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Statement::make(a.vars(), std::move(terms));
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  Statement run() {
    skip_ws();
    if (at_word("FALSE")) {
      pos_ += 5;
      skip_ws();
      expect_end();
      return Statement::false_(n_);
    }
    std::vector<Term> terms;
    terms.push_back(parse_term());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      skip_ws();
      terms.push_back(parse_term());
      skip_ws();
    }
    expect_end();
    return Statement::make(n_, std::move(terms));
  }

 private:
  Term parse_term() {
    if (at_word("TRUE")) {
      pos_ += 4;
      return Term{};
    }
    std::uint32_t mask = 0, bits = 0;
    parse_literal(mask, bits);
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '&') {
      ++pos_;
      skip_ws();
      parse_literal(mask, bits);
      skip_ws();
    }
    return Term{mask, bits};
  }

  void parse_literal(std::uint32_t& mask, std::uint32_t& bits) {
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != 'x')
      throw parse_error(parse_error::kind::syntax, pos_,
                        "expected a literal like x0=1 at offset " + std::to_string(pos_));
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error(parse_error::kind::syntax, pos_,
                        "expected a variable index after 'x' at offset " +
                            std::to_string(pos_));
    long var = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      var = var * 10 + (text_[pos_] - '0');
      if (var > kMaxVars) break;  // avoid overflow; scope check below rejects it
      ++pos_;
    }
    if (var >= n_)
      throw parse_error(parse_error::kind::scope, start,
                        "variable x" + std::to_string(var) + " out of scope for n=" +
                            std::to_string(n_) + " at offset " + std::to_string(start));
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '=')
      throw parse_error(parse_error::kind::syntax, pos_,
                        "expected '=' in literal at offset " + std::to_string(pos_));
    ++pos_;
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1'))
      throw parse_error(parse_error::kind::syntax, pos_,
                        "expected '0' or '1' after '=' at offset " + std::to_string(pos_));
    const bool value = text_[pos_] == '1';
    ++pos_;
    const std::uint32_t bit = std::uint32_t{1} << var;
    if (mask & bit) {
      const bool prior = (bits & bit) != 0;
      throw parse_error(parse_error::kind::contradiction, start,
                        (prior != value ? "contradictory literals on x"
                                        : "duplicate literal on x") +
                            std::to_string(var) + " at offset " + std::to_string(start));
    }
    mask |= bit;
    if (value) bits |= bit;
  }

  bool at_word(const char* word) const {
    const std::size_t len = std::string_view(word).size();
    if (text_.compare(pos_, len, word) != 0) return false;
    const std::size_t after = pos_ + len;
    return after >= text_.size() ||
           !std::isalnum(static_cast<unsigned char>(text_[after]));
  }

  void expect_end() const {
    if (pos_ < text_.size())
      throw parse_error(parse_error::kind::syntax, pos_,
                        "unexpected trailing input at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Statement parse_statement(const std::string& text, int n) {
  if (n < 1 || n > kMaxVars)
    throw argument_error("variable count must lie in [1, " +
                         std::to_string(kMaxVars) + "], got " + std::to_string(n));
  return Parser(text, n).run();
}

std::string print_statement(const Statement& c) {
  if (c.is_false()) return "FALSE";
  std::string out;
  bool first_term = true;
  for (const Term& t : c.terms()) {
    if (!first_term) out += " | ";
    first_term = false;
    if (t.is_true()) {
      out += "TRUE";
      continue;
    }
    bool first_lit = true;
    for (const Literal& l : t.literals()) {
      if (!first_lit) out += " & ";
      first_lit = false;
      out += "x" + std::to_string(l.var) + "=" + (l.positive ? "1" : "0");
    }
  }
  return out;
}

std::vector<std::pair<Term, std::vector<PartialAssignment>>> split_symbols(
    const Statement& c, const Limits& limits) {
  std::vector<std::pair<Term, std::vector<PartialAssignment>>> out;
  out.reserve(c.terms().size());
  for (const Term& t : c.terms()) {
    StateSet one(c.vars());
    if (c.vars() > limits.enum_cap)
      throw capacity_error("extension over n=" + std::to_string(c.vars()) +
                           " exceeds the cap of " + std::to_string(limits.enum_cap));
    one.or_pattern(t.mask(), t.bits());
    out.emplace_back(t, one.to_assignments());
  }
  return out;
}

}  // namespace tasklab

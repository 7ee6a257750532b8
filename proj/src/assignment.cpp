#include "tasklab/assignment.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace tasklab {

namespace {

std::uint32_t var_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

void check_vars(int n) {
  if (n < 1 || n > kMaxVars)
    throw argument_error("variable count must lie in [1, " +
                         std::to_string(kMaxVars) + "], got " + std::to_string(n));
}

void check_enumerable(int n, const Limits& limits) {
  if (n > limits.enum_cap)
    throw capacity_error("enumeration over n=" + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(limits.enum_cap));
}

}  // namespace

PartialAssignment::PartialAssignment(int n, std::uint32_t defined, std::uint32_t values)
    : n_(n), defined_(defined), values_(values) {
  check_vars(n);
  if ((defined_ & ~var_mask(n_)) != 0)
    throw argument_error("defined mask uses variables beyond x" + std::to_string(n_ - 1));
  if ((values_ & ~defined_) != 0)
    throw argument_error("value bits set outside the defined mask");
}

PartialAssignment PartialAssignment::empty(int n) { return {n, 0, 0}; }

PartialAssignment PartialAssignment::complete(int n, std::uint32_t values) {
  return {n, var_mask(n), values};
}

PartialAssignment PartialAssignment::from_text(const std::string& text) {
  const int n = static_cast<int>(text.size());
  check_vars(n);
  std::uint32_t defined = 0, values = 0;
  for (int i = 0; i < n; ++i) {
    switch (text[static_cast<std::size_t>(i)]) {
      case '0': defined |= std::uint32_t{1} << i; break;
      case '1':
        defined |= std::uint32_t{1} << i;
        values |= std::uint32_t{1} << i;
        break;
      case '*': break;
      default:
        throw argument_error("assignment text may only contain '0', '1' and '*': \"" +
                             text + "\"");
    }
  }
  return {n, defined, values};
}

bool PartialAssignment::is_complete() const { return defined_ == var_mask(n_); }

int PartialAssignment::defined_count() const { return std::popcount(defined_); }

bool PartialAssignment::has(int var) const {
  return var >= 0 && var < n_ && (defined_ >> var & 1u) != 0;
}

bool PartialAssignment::value(int var) const {
  assert(has(var));
  return (values_ >> var & 1u) != 0;
}

std::string PartialAssignment::to_text() const {
  std::string out(static_cast<std::size_t>(n_), '*');
  for (int i = 0; i < n_; ++i)
    if (defined_ >> i & 1u) out[static_cast<std::size_t>(i)] = (values_ >> i & 1u) ? '1' : '0';
  return out;
}

bool operator<(const PartialAssignment& a, const PartialAssignment& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.defined_ != b.defined_) return a.defined_ < b.defined_;
  return a.values_ < b.values_;
}

bool is_subsequence(const PartialAssignment& a, const PartialAssignment& b) {
  if (a.vars() != b.vars())
    throw dimension_error("subsequence over mismatched variable counts (" +
                          std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
  return (a.defined() & b.defined()) == a.defined() &&
         ((a.values() ^ b.values()) & a.defined()) == 0;
}

std::vector<PartialAssignment> completions(const PartialAssignment& s, const Limits& limits) {
  check_enumerable(s.vars(), limits);
  const std::uint32_t free = ~s.defined() & var_mask(s.vars());
  std::vector<PartialAssignment> out;
  out.reserve(std::size_t{1} << std::popcount(free));
  std::uint32_t sub = 0;
  do {
    out.push_back(PartialAssignment::complete(s.vars(), s.values() | sub));
    sub = (sub - free) & free;  // next submask of free in ascending order
  } while (sub != 0);
  return out;
}

StateSet::StateSet(int n) : n_(n) {
  if (n < 1 || n > 26)
    throw argument_error("state sets support 1..26 variables, got " + std::to_string(n));
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

StateSet StateSet::full(int n) {
  StateSet s(n);
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (states % 64 != 0) s.words_.back() = (std::uint64_t{1} << (states % 64)) - 1;
  return s;
}

StateSet StateSet::of(int n, const std::vector<PartialAssignment>& states) {
  StateSet s(n);
  for (const auto& z : states) {
    if (z.vars() != n)
      throw dimension_error("state over " + std::to_string(z.vars()) +
                            " variables in a set over " + std::to_string(n));
    if (!z.is_complete())
      throw argument_error("state sets hold complete assignments only, got \"" +
                           z.to_text() + "\"");
    s.insert(z.values());
  }
  return s;
}

bool StateSet::contains(std::uint32_t state) const {
  return (words_[state >> 6] >> (state & 63) & 1u) != 0;
}

void StateSet::insert(std::uint32_t state) {
  assert(state < state_count());
  words_[state >> 6] |= std::uint64_t{1} << (state & 63);
}

void StateSet::erase(std::uint32_t state) {
  assert(state < state_count());
  words_[state >> 6] &= ~(std::uint64_t{1} << (state & 63));
}

std::uint64_t StateSet::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool StateSet::empty() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

void StateSet::check_same(const StateSet& o) const {
  if (n_ != o.n_)
    throw dimension_error("state sets over different variable counts (" +
                          std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
}

StateSet& StateSet::operator|=(const StateSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

bool StateSet::intersects(const StateSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & o.words_[w]) != 0) return true;
  return false;
}

bool StateSet::contains_all(const StateSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((o.words_[w] & ~words_[w]) != 0) return false;
  return true;
}

// The low 6 state bits live inside one 64-bit word, the rest select the
// word. A pattern therefore paints the same 64-bit stamp onto every word
// whose index matches the pattern's high bits.
namespace {

std::uint64_t low_stamp(std::uint32_t mask, std::uint32_t bits, int n) {
  const int low = n < 6 ? n : 6;
  const std::uint32_t lmask = mask & 63u, lbits = bits & 63u;
  std::uint64_t stamp = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << low); ++s)
    if ((s & lmask) == lbits) stamp |= std::uint64_t{1} << s;
  return stamp;
}

}  // namespace

void StateSet::or_pattern(std::uint32_t mask, std::uint32_t bits) {
  const std::uint64_t stamp = low_stamp(mask, bits, n_);
  const std::uint32_t hmask = mask >> 6, hbits = bits >> 6;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((static_cast<std::uint32_t>(w) & hmask) == hbits) words_[w] |= stamp;
}

bool StateSet::intersects_pattern(std::uint32_t mask, std::uint32_t bits) const {
  const std::uint64_t stamp = low_stamp(mask, bits, n_);
  const std::uint32_t hmask = mask >> 6, hbits = bits >> 6;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((static_cast<std::uint32_t>(w) & hmask) == hbits && (words_[w] & stamp) != 0)
      return true;
  return false;
}

std::uint64_t StateSet::count_pattern(std::uint32_t mask, std::uint32_t bits) const {
  const std::uint64_t stamp = low_stamp(mask, bits, n_);
  const std::uint32_t hmask = mask >> 6, hbits = bits >> 6;
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((static_cast<std::uint32_t>(w) & hmask) == hbits)
      total += static_cast<std::uint64_t>(std::popcount(words_[w] & stamp));
  return total;
}

std::vector<std::uint32_t> StateSet::to_states() const {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<PartialAssignment> StateSet::to_assignments() const {
  std::vector<PartialAssignment> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t s : to_states()) out.push_back(PartialAssignment::complete(n_, s));
  return out;
}

StateSet reach_set(const std::vector<PartialAssignment>& situations, int n,
                   const Limits& limits) {
  check_vars(n);
  check_enumerable(n, limits);
  StateSet out(n);
  for (const auto& s : situations) {
    if (s.vars() != n)
      throw dimension_error("situation over " + std::to_string(s.vars()) +
                            " variables, expected " + std::to_string(n));
    out.or_pattern(s.defined(), s.values());
  }
  return out;
}

std::vector<PartialAssignment> reach(const std::vector<PartialAssignment>& situations,
                                     int n, const Limits& limits) {
  return reach_set(situations, n, limits).to_assignments();
}

}  // namespace tasklab

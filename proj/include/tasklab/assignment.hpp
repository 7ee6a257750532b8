#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tasklab/errors.hpp"
#include "tasklab/limits.hpp"

namespace tasklab {

// An assignment of 0/1 to a subset of the variables x_0 .. x_{n-1}, packed
// as a (defined-mask, value-mask) pair. Text form is one character per
// variable, position i giving x_i: '0', '1', or '*' for unassigned.
// Immutable value type.
class PartialAssignment {
 public:
  PartialAssignment(int n, std::uint32_t defined, std::uint32_t values);

  static PartialAssignment empty(int n);
  static PartialAssignment complete(int n, std::uint32_t values);
  static PartialAssignment from_text(const std::string& text);

  int vars() const { return n_; }
  std::uint32_t defined() const { return defined_; }
  std::uint32_t values() const { return values_; }

  bool is_complete() const;
  int defined_count() const;
  bool has(int var) const;
  bool value(int var) const;  // precondition: has(var)
  std::string to_text() const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
  // Total order used for canonical storage; for complete states this is the
  // numeric order of the value mask.
  friend bool operator<(const PartialAssignment& a, const PartialAssignment& b);

 private:
  int n_;
  std::uint32_t defined_;
  std::uint32_t values_;
};

// True iff every variable a assigns is assigned the same way by b.
bool is_subsequence(const PartialAssignment& a, const PartialAssignment& b);

// All complete supersequences of s, in ascending numeric order.
std::vector<PartialAssignment> completions(const PartialAssignment& s,
                                           const Limits& limits = Limits{});

// Dense bit set over the 2^n complete states. Workhorse behind extensions,
// weakness counts and reachability.
class StateSet {
 public:
  explicit StateSet(int n);

  static StateSet full(int n);
  static StateSet of(int n, const std::vector<PartialAssignment>& states);

  int vars() const { return n_; }
  std::uint32_t state_count() const { return std::uint32_t{1} << n_; }

  bool contains(std::uint32_t state) const;
  void insert(std::uint32_t state);
  void erase(std::uint32_t state);

  std::uint64_t size() const;
  bool empty() const;

  StateSet& operator|=(const StateSet& o);
  StateSet& operator&=(const StateSet& o);
  StateSet& operator-=(const StateSet& o);

  bool intersects(const StateSet& o) const;
  bool contains_all(const StateSet& o) const;

  // Adds every state matching the pattern (defined-mask, value-mask).
  void or_pattern(std::uint32_t mask, std::uint32_t bits);
  // True iff some member state matches the pattern.
  bool intersects_pattern(std::uint32_t mask, std::uint32_t bits) const;
  // Number of member states matching the pattern.
  std::uint64_t count_pattern(std::uint32_t mask, std::uint32_t bits) const;

  std::vector<std::uint32_t> to_states() const;            // ascending
  std::vector<PartialAssignment> to_assignments() const;   // ascending

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  void check_same(const StateSet& o) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Union of the completions of all situations, as a set.
StateSet reach_set(const std::vector<PartialAssignment>& situations, int n,
                   const Limits& limits = Limits{});

// Same, materialized in ascending order.
std::vector<PartialAssignment> reach(const std::vector<PartialAssignment>& situations,
                                     int n, const Limits& limits = Limits{});

}  // namespace tasklab

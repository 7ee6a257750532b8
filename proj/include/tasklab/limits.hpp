#pragma once

#include <cstddef>
#include <cstdint>

namespace tasklab {

// Hard representation limit for variable counts (packed 32-bit masks).
inline constexpr int kMaxVars = 30;

// Caps for the enumerating operations. This library is a desk-scale
// instrument: anything past these limits raises capacity_error rather than
// silently approximating.
struct Limits {
  int enum_cap = 24;    // largest n for which complete-state sets are built
  int exact_cap = 20;   // largest n for exact prime implicant generation
  int oracle_cap = 4;   // largest n for exhaustive solution enumeration
  std::size_t max_cubes = std::size_t{1} << 22;  // cube budget for prime generation
  std::size_t max_closed_terms = 4096;           // meet-closure budget (one-class)
  std::uint64_t search_budget = std::uint64_t{1} << 26;  // cover search node budget
};

}  // namespace tasklab

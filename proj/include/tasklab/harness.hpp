#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tasklab/agent.hpp"

namespace tasklab {

enum class LogicOp { and_, or_, xor_, parity };

// k input variables x_0..x_{k-1} plus one output x_k; goals are the graph
// of the chosen operation, situations the 2^k input-only assignments.
Task gen_logic_task(LogicOp op, int k, const Limits& limits = Limits{});

// Binary addition with k-bit operands: variables a_0..a_{k-1}, b_0..b_{k-1},
// o_0..o_k in that order (o_0 is the low bit), n = 3k + 1, 1 <= k <= 5.
Task gen_addition_task(int k);

// Goals sampled uniformly without replacement at the given density over all
// 2^n states (n <= 12); the single situation is the full wildcard.
Task gen_uniform_task(int n, double density, std::uint64_t seed,
                      const Limits& limits = Limits{});

// Builds an ostensive definition by sampling trials: pick a situation
// uniformly, pick a completion uniformly, keep it when
// reward(completion) >= threshold. Deterministic in seed.
OstensiveDefinition reward_ostensive(
    const Task& t, const std::function<double(const PartialAssignment&)>& reward,
    double threshold, std::size_t trials, std::uint64_t seed,
    const Limits& limits = Limits{});

struct EvalRecord {
  std::uint64_t seed = 0;
  std::string task;
  int n = 0;
  double train_fraction = 0.0;
  AgentKind agent = AgentKind::intentional;
  double acc_heldout = 0.0;
  double acc_trained = 0.0;
  std::uint64_t weakness = 0;
  std::uint64_t bits = 0;
  std::size_t terms = 0;
  bool exact = true;
  std::uint64_t elapsed_ms = 0;  // measured; the CSV writer zeroes it by default
};

struct EvalOptions {
  SolveConfig solve{};
  std::size_t workers = 1;
};

// One record per (seed, agent): trains each agent on make_ostensive(t,
// fraction, seed) and scores expected-mode accuracy on held-out and trained
// situations against the full goal set.
std::vector<EvalRecord> eval_generalisation(const Task& t, const std::string& task_name,
                                            double fraction,
                                            const std::vector<std::uint64_t>& seeds,
                                            const std::vector<AgentKind>& agents,
                                            const EvalOptions& opts = EvalOptions{});

// The same sweep across several train fractions; records ordered by
// (seed, fraction, agent).
std::vector<EvalRecord> sample_efficiency_curve(const Task& t, const std::string& task_name,
                                                const std::vector<double>& fractions,
                                                const std::vector<std::uint64_t>& seeds,
                                                const std::vector<AgentKind>& agents,
                                                const EvalOptions& opts = EvalOptions{});

extern const char* const kEvalCsvHeader;

// Byte-stable CSV: floats at 6 decimal places, '\n' newlines. elapsed_ms is
// written as 0 unless include_timing is set (real timings are not
// reproducible byte for byte).
void write_csv(const std::vector<EvalRecord>& records, std::ostream& out,
               bool include_timing = false);

struct ArchiveReport {
  std::size_t valid_count = 0;
  std::uint64_t min_bits = 0;
  std::uint64_t max_weakness = 0;
  std::vector<Statement> min_length;
  std::vector<Statement> weakness_maximal;
  bool intersects = false;
};

// Enumerates every solution within the bounds and reports whether the
// minimal-length set meets the weakness-maximal set.
ArchiveReport archive_study(const Task& t, const EnumBounds& bounds = EnumBounds{},
                            const Limits& limits = Limits{});

}  // namespace tasklab

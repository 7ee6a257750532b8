#include "tasklab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "tasklab/rng.hpp"

namespace tasklab {

Task gen_logic_task(LogicOp op, int k, const Limits& limits) {
  if (k < 1)
    throw argument_error("logic tasks need at least one input, got k=" +
                         std::to_string(k));
  const int n = k + 1;
  if (n > limits.enum_cap || n > kMaxVars)
    throw capacity_error("logic task over n=" + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(limits.enum_cap));
  const std::uint32_t in_mask = (std::uint32_t{1} << k) - 1;
  std::vector<PartialAssignment> situations, goals;
  for (std::uint32_t v = 0; v <= in_mask; ++v) {
    situations.emplace_back(n, in_mask, v);
    bool out = false;
    switch (op) {
      case LogicOp::and_: out = v == in_mask; break;
      case LogicOp::or_: out = v != 0; break;
      case LogicOp::xor_:
      case LogicOp::parity: out = (std::popcount(v) & 1) != 0; break;
    }
    goals.push_back(PartialAssignment::complete(
        n, v | (out ? std::uint32_t{1} << k : 0)));
  }
  return Task(n, std::move(situations), std::move(goals));
}

Task gen_addition_task(int k) {
  if (k < 1 || k > 5)
    throw argument_error("addition tasks support operand widths 1..5, got k=" +
                         std::to_string(k));
  const int n = 3 * k + 1;
  const std::uint32_t in_mask = (std::uint32_t{1} << (2 * k)) - 1;
  std::vector<PartialAssignment> situations, goals;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << k); ++a) {
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << k); ++b) {
      const std::uint32_t inputs = a | (b << k);
      situations.emplace_back(n, in_mask, inputs);
      goals.push_back(PartialAssignment::complete(n, inputs | ((a + b) << (2 * k))));
    }
  }
  return Task(n, std::move(situations), std::move(goals));
}

Task gen_uniform_task(int n, double density, std::uint64_t seed, const Limits& limits) {
  if (n < 1 || n > 12 || n > limits.enum_cap)
    throw capacity_error("uniform tasks support 1..12 variables, got n=" +
                         std::to_string(n));
  if (!(density >= 0.0 && density <= 1.0))
    throw argument_error("goal density must lie in [0, 1], got " +
                         std::to_string(density));
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t m = static_cast<std::uint64_t>(
      std::llround(density * static_cast<double>(total)));
  if (m == 0)
    throw generation_error("density " + std::to_string(density) + " over " +
                           std::to_string(total) + " states yields an empty goal set");
  auto rng = seeded_engine(seed);
  const auto idx = sample_indices(rng, static_cast<std::size_t>(total),
                                  static_cast<std::size_t>(m));
  std::vector<PartialAssignment> goals;
  goals.reserve(idx.size());
  for (std::size_t z : idx)
    goals.push_back(PartialAssignment::complete(n, static_cast<std::uint32_t>(z)));
  return Task(n, {PartialAssignment::empty(n)}, std::move(goals));
}

OstensiveDefinition reward_ostensive(
    const Task& t, const std::function<double(const PartialAssignment&)>& reward,
    double threshold, std::size_t trials, std::uint64_t seed, const Limits& limits) {
  if (trials < 1) throw argument_error("reward sampling needs at least one trial");
  if (t.situations().empty())
    throw generation_error("reward sampling needs a task with situations");
  auto rng = seeded_engine(seed);
  std::vector<PartialAssignment> accepted;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto& s = t.situations()[static_cast<std::size_t>(
        uniform_below(rng, t.situations().size()))];
    std::uint32_t free = ~s.defined() & ((std::uint32_t{1} << t.vars()) - 1);
    const int free_count = std::popcount(free);
    if (t.vars() > limits.enum_cap)
      throw capacity_error("reward sampling over n=" + std::to_string(t.vars()) +
                           " exceeds the cap of " + std::to_string(limits.enum_cap));
    const std::uint64_t fill = uniform_below(rng, std::uint64_t{1} << free_count);
    std::uint32_t values = s.values();
    int j = 0;
    while (free != 0) {
      const std::uint32_t bit = free & (0 - free);
      if (fill >> j & 1) values |= bit;
      free &= free - 1;
      ++j;
    }
    const auto z = PartialAssignment::complete(t.vars(), values);
    if (reward(z) >= threshold) accepted.push_back(z);
  }
  if (accepted.empty())
    throw generation_error("no trial reached the reward threshold of " +
                           std::to_string(threshold));
  return OstensiveDefinition(t, std::move(accepted));
}

namespace {

double mean_score(const Agent& a, const std::vector<PartialAssignment>& situations,
                  const StateSet& goal_oracle, const Limits& limits) {
  if (situations.empty()) return 1.0;  // vacuously perfect
  double total = 0.0;
  for (const auto& s : situations) total += expected_score(a, s, goal_oracle, limits);
  return total / static_cast<double>(situations.size());
}

std::vector<EvalRecord> eval_one_seed(const Task& t, const std::string& task_name,
                                      double fraction, std::uint64_t seed,
                                      const std::vector<AgentKind>& agents,
                                      const EvalOptions& opts,
                                      const StateSet& goal_oracle) {
  const auto start = std::chrono::steady_clock::now();
  const auto o = make_ostensive(t, fraction, seed);
  const auto problem = InductionProblem::from_ostensive(o, opts.solve.limits);
  const auto heldout = o.heldout_situations();
  std::vector<EvalRecord> out;
  for (AgentKind kind : agents) {
    const Agent a = train_agent(kind, problem, opts.solve);
    EvalRecord rec;
    rec.seed = seed;
    rec.task = task_name;
    rec.n = t.vars();
    rec.train_fraction = fraction;
    rec.agent = kind;
    rec.acc_heldout = mean_score(a, heldout, goal_oracle, opts.solve.limits);
    rec.acc_trained = mean_score(a, o.situations_o(), goal_oracle, opts.solve.limits);
    const Statement& primary =
        kind == AgentKind::mimic ? a.extensional : a.intensional;
    rec.weakness = weakness(primary, opts.solve.limits);
    rec.bits = encoding_length(primary);
    rec.terms = primary.terms().size();
    rec.exact = a.exact;
    rec.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    out.push_back(std::move(rec));
  }
  return out;
}

// Runs one job per seed, possibly on several worker threads; slot-per-seed
// assembly keeps the output order identical for any worker count.
std::vector<EvalRecord> run_seed_jobs(
    const std::vector<std::uint64_t>& seeds, std::size_t workers,
    const std::function<std::vector<EvalRecord>(std::uint64_t)>& job) {
  std::vector<std::vector<EvalRecord>> slots(seeds.size());
  if (workers < 2 || seeds.size() < 2) {
    for (std::size_t i = 0; i < seeds.size(); ++i) slots[i] = job(seeds[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t count = std::min(workers, seeds.size());
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= seeds.size()) return;
          try {
            slots[i] = job(seeds[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<EvalRecord> out;
  for (auto& slot : slots)
    for (auto& rec : slot) out.push_back(std::move(rec));
  return out;
}

}  // namespace

std::vector<EvalRecord> eval_generalisation(const Task& t, const std::string& task_name,
                                            double fraction,
                                            const std::vector<std::uint64_t>& seeds,
                                            const std::vector<AgentKind>& agents,
                                            const EvalOptions& opts) {
  const StateSet goal_oracle = StateSet::of(t.vars(), t.goals());
  return run_seed_jobs(seeds, opts.workers, [&](std::uint64_t seed) {
    return eval_one_seed(t, task_name, fraction, seed, agents, opts, goal_oracle);
  });
}

std::vector<EvalRecord> sample_efficiency_curve(const Task& t, const std::string& task_name,
                                                const std::vector<double>& fractions,
                                                const std::vector<std::uint64_t>& seeds,
                                                const std::vector<AgentKind>& agents,
                                                const EvalOptions& opts) {
  const StateSet goal_oracle = StateSet::of(t.vars(), t.goals());
  return run_seed_jobs(seeds, opts.workers, [&](std::uint64_t seed) {
    std::vector<EvalRecord> rows;
    for (double fraction : fractions) {
      auto batch = eval_one_seed(t, task_name, fraction, seed, agents, opts, goal_oracle);
      for (auto& rec : batch) rows.push_back(std::move(rec));
    }
    return rows;
  });
}

const char* const kEvalCsvHeader =
    "seed,task,n,train_fraction,agent,acc_heldout,acc_trained,weakness,bits,terms,"
    "exact,elapsed_ms";

void write_csv(const std::vector<EvalRecord>& records, std::ostream& out,
               bool include_timing) {
  const auto f6 = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return std::string(buf);
  };
  out << kEvalCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << r.task << ',' << r.n << ',' << f6(r.train_fraction) << ','
        << to_string(r.agent) << ',' << f6(r.acc_heldout) << ',' << f6(r.acc_trained)
        << ',' << r.weakness << ',' << r.bits << ',' << r.terms << ','
        << (r.exact ? 1 : 0) << ',' << (include_timing ? r.elapsed_ms : 0) << '\n';
  }
}

ArchiveReport archive_study(const Task& t, const EnumBounds& bounds,
                            const Limits& limits) {
  const auto problem = InductionProblem::from_task(t, limits);
  const auto all = enumerate_all_solutions(problem, bounds, limits);
  ArchiveReport report;
  report.valid_count = all.size();
  if (all.empty()) return report;
  report.min_bits = all.front().bits;
  report.max_weakness = all.front().weakness;
  for (const auto& r : all) {
    report.min_bits = std::min(report.min_bits, r.bits);
    report.max_weakness = std::max(report.max_weakness, r.weakness);
  }
  for (const auto& r : all) {
    if (r.bits == report.min_bits) report.min_length.push_back(r.statement);
    if (r.weakness == report.max_weakness)
      report.weakness_maximal.push_back(r.statement);
  }
  for (const auto& s : report.min_length) {
    for (const auto& w : report.weakness_maximal)
      if (s == w) {
        report.intersects = true;
        break;
      }
    if (report.intersects) break;
  }
  return report;
}

}  // namespace tasklab

// Acceptance gate: nine end-to-end checks, one PASS/FAIL line each, with
// the measured numbers printed inline. The process exits with the number of
// failing checks, so the test runner reports any regression.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tasklab/agent.hpp"
#include "tasklab/harness.hpp"
#include "tasklab/induction.hpp"

using namespace tasklab;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << criterion << " — "
            << detail << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TASKLAB_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult result;
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// 1: the three-variable conjunction has one known intensional optimum, and
// the extensional form is strictly longer at equal weakness.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const auto intensional = run_cli("solve --gen and:2 --mode intensional");
  const std::string expect =
      "x0=0 & x2=0 | x1=0 & x2=0 | x0=1 & x1=1 & x2=1\tweakness=4\tbits=24\t"
      "terms=3\tvalid=yes\texact=yes\tties=1\n";
  const bool line_ok = intensional.exit_code == 0 && intensional.output == expect;

  const auto p = InductionProblem::from_task(gen_logic_task(LogicOp::and_, 2));
  const auto ext = extensional_solution(p.on());
  const bool ext_ok = ext.terms().size() == 4 && weakness(ext) == 4 &&
                      encoding_length(ext) == 40 && encoding_length(ext) > 24;
  const double elapsed = seconds_since(start);
  report(1, line_ok && ext_ok && elapsed < 1.0,
         std::string("intensional optimum ") + (line_ok ? "exact" : "WRONG") +
             ", extensional weakness " + std::to_string(weakness(ext)) + " at " +
             std::to_string(encoding_length(ext)) + " bits vs 24, " +
             fmt(elapsed) + "s");
}

// 2: on problems small enough to enumerate, the solver's answers are exactly
// the weakness-maximal (then shortest) statements the oracle finds.
void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  auto g = oracles::test_rng(1002);
  int mismatches = 0, problems = 0, compared = 0;

  auto check_problem = [&](const InductionProblem& p) {
    ++problems;
    const auto reports = intensional_solutions(p);
    const auto all = enumerate_all_solutions(p);
    std::uint64_t best_weak = 0;
    for (const auto& cand : all) best_weak = std::max(best_weak, cand.weakness);
    std::uint64_t best_bits = ~std::uint64_t{0};
    std::vector<Statement> weakest;
    for (const auto& cand : all)
      if (cand.weakness == best_weak) {
        weakest.push_back(cand.statement);
        best_bits = std::min(best_bits, cand.bits);
      }
    for (const auto& r : reports) {
      ++compared;
      const bool member = std::any_of(
          weakest.begin(), weakest.end(),
          [&](const Statement& s) { return s == r.statement; });
      if (!is_solution(r.statement, p) || r.weakness != best_weak ||
          r.bits != best_bits || !member)
        ++mismatches;
    }
  };

  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(oracles::draw(g, 3));
    check_problem(oracles::random_problem(g, n, /*dc_free=*/true));
  }
  for (const LogicOp op :
       {LogicOp::and_, LogicOp::or_, LogicOp::xor_, LogicOp::parity})
    check_problem(InductionProblem::from_task(gen_logic_task(op, 2)));

  const double elapsed = seconds_since(start);
  report(2, mismatches == 0 && elapsed < 60.0,
         std::to_string(problems) + " problems, " + std::to_string(compared) +
             " solver outputs vs the exhaustive oracle, " +
             std::to_string(mismatches) + " mismatches, " + fmt(elapsed) + "s");
}

// 3: prime implicants equal the all-patterns brute force.
void criterion_3() {
  auto g = oracles::test_rng(1003);
  int mismatches = 0;
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(oracles::draw(g, 4));
    const auto p = oracles::random_problem(g, n, /*dc_free=*/round % 2 == 0);
    if (prime_implicants(p) != oracles::naive_primes(p)) ++mismatches;
  }
  report(3, mismatches == 0,
         "500 random on/off pairs at n<=4, " + std::to_string(mismatches) +
             " prime-set mismatches");
}

// 4: on two-bit addition at train fraction 0.5, the intentional agent
// generalizes and the mimic cannot.
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const Task t = gen_addition_task(2);
  std::vector<std::uint64_t> seeds(20);
  for (std::uint64_t s = 0; s < 20; ++s) seeds[s] = s;
  const auto records = sample_efficiency_curve(
      t, "add:2", {0.5}, seeds, {AgentKind::intentional, AgentKind::mimic});

  double sum_int = 0, sum_mimic = 0;
  int positive_int = 0;
  bool mimic_zero = true, trained_one = true;
  for (const auto& r : records) {
    if (r.acc_trained != 1.0) trained_one = false;
    if (r.agent == AgentKind::intentional) {
      sum_int += r.acc_heldout;
      if (r.acc_heldout > 0.0) ++positive_int;
    } else {
      sum_mimic += r.acc_heldout;
      if (r.acc_heldout != 0.0) mimic_zero = false;
    }
  }
  const double mean_int = sum_int / 20, mean_mimic = sum_mimic / 20;
  const double elapsed = seconds_since(start);
  const bool ok = mean_int > mean_mimic && mimic_zero && positive_int >= 18 &&
                  trained_one && elapsed < 120.0;
  report(4, ok,
         "mean held-out intentional " + fmt(mean_int) + " > mimic " +
             fmt(mean_mimic) + ", mimic zero on every seed: " +
             (mimic_zero ? "yes" : "no") + ", trained exactly 1.0: " +
             (trained_one ? "yes" : "no") + ", intentional positive on " +
             std::to_string(positive_int) + "/20 seeds (need >= 18), " +
             fmt(elapsed) + "s");
}

// 5: the parity task admits no generalization: the intensional optimum is
// the extensional statement, and held-out accuracy matches the mimic's on
// every seed and fraction.
void criterion_5() {
  const Task t = gen_logic_task(LogicOp::parity, 2);
  const auto p = InductionProblem::from_task(t);
  const auto intensional = intensional_solutions(p);
  const auto ext = extensional_solution(p.on());
  const bool full_ok = intensional.size() == 1 &&
                       intensional[0].weakness == weakness(ext) &&
                       intensional[0].term_count == ext.terms().size();

  std::vector<std::uint64_t> seeds(20);
  for (std::uint64_t s = 0; s < 20; ++s) seeds[s] = s;
  const auto records = sample_efficiency_curve(
      t, "parity:2", {0.5, 0.75}, seeds, {AgentKind::intentional, AgentKind::mimic});
  int coincide = 0, pairs = 0;
  for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
    ++pairs;
    if (records[i].acc_heldout == records[i + 1].acc_heldout) ++coincide;
  }
  report(5, full_ok && coincide == pairs,
         std::string("intensional equals extensional in weakness and terms: ") +
             (full_ok ? "yes" : "no") + "; held-out agreement on " +
             std::to_string(coincide) + "/" + std::to_string(pairs) +
             " seed-fraction pairs");
}

// 6: at enumerable scale, some minimal-length solution is weakness-maximal.
void criterion_6() {
  bool all_ok = true;
  std::string detail;
  for (const std::string name : {"and:2", "or:2", "xor:2"}) {
    const auto cli = run_cli("archive --gen " + name);
    const bool cli_ok =
        cli.exit_code == 0 && cli.output.find("overlap: yes") != std::string::npos;
    if (!detail.empty()) detail += ", ";
    detail += name + (cli_ok ? " overlaps" : " FAILS to overlap");
    all_ok = all_ok && cli_ok;
  }
  report(6, all_ok, detail);
}

// 7: the statement grammar round-trips.
void criterion_7() {
  auto g = oracles::test_rng(1007);
  int canonical_bad = 0, messy_bad = 0;
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(oracles::draw(g, 10));
    const auto c = oracles::random_statement(g, n, 4, 3);
    if (parse_statement(print_statement(c), n) != c) ++canonical_bad;
  }
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(oracles::draw(g, 10));
    const auto text = oracles::random_messy_text(g, n);
    const auto once = print_statement(parse_statement(text, n));
    const auto twice = print_statement(parse_statement(once, n));
    if (once != twice) ++messy_bad;
  }
  report(7, canonical_bad == 0 && messy_bad == 0,
         "1000 canonical statements reparse identically (" +
             std::to_string(canonical_bad) + " bad), 1000 messy inputs " +
             "canonicalize idempotently (" + std::to_string(messy_bad) + " bad)");
}

// 8: one-class learning finds the shared pattern and keeps perfect recall.
void criterion_8() {
  const std::vector<PartialAssignment> positives = {
      PartialAssignment::from_text("1100"), PartialAssignment::from_text("1101"),
      PartialAssignment::from_text("1110")};
  const auto r = one_class_learn(positives);
  const bool frozen_ok = print_statement(r.statement) == "x0=1 & x1=1" &&
                         eval(r.statement, PartialAssignment::from_text("1111")) &&
                         !eval(r.statement, PartialAssignment::from_text("0111"));

  auto g = oracles::test_rng(1008);
  int recall_misses = 0;
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(oracles::draw(g, 8));
    const int count = 1 + static_cast<int>(oracles::draw(g, 10));
    std::vector<PartialAssignment> pos;
    for (int i = 0; i < count; ++i)
      pos.push_back(PartialAssignment::complete(
          n, static_cast<std::uint32_t>(oracles::draw(g, std::uint64_t{1} << n))));
    const auto learned = one_class_learn(pos);
    for (const auto& z : pos)
      if (!eval(learned.statement, z)) ++recall_misses;
  }
  report(8, frozen_ok && recall_misses == 0,
         std::string("shared-pattern classifier ") +
             (frozen_ok ? "recovered x0=1 & x1=1 with the right verdicts"
                        : "WRONG on the fixed instance") +
             ", 100 random instances with " + std::to_string(recall_misses) +
             " recall misses");
}

// 9: the benchmark command is byte-deterministic, whatever the parallelism.
void criterion_9() {
  const std::string args =
      "eval --gen add:2 --fractions 0.5 --seeds 0..19 --agents intentional,mimic";
  const auto first = run_cli(args + " --workers 1");
  const auto second = run_cli(args + " --workers 1");
  const auto parallel = run_cli(args + " --workers 4");
  const bool ok = first.exit_code == 0 && second.exit_code == 0 &&
                  parallel.exit_code == 0 && !first.output.empty() &&
                  first.output == second.output && first.output == parallel.output;
  report(9, ok,
         std::string("two serial runs ") +
             (first.output == second.output ? "identical" : "DIFFER") +
             ", four-worker run " +
             (first.output == parallel.output ? "identical" : "DIFFERS") + " (" +
             std::to_string(first.output.size()) + " bytes)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0)
    std::cout << "all acceptance checks passed\n";
  else
    std::cout << failures << " acceptance check(s) failed\n";
  return failures;
}

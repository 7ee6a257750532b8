#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tasklab/harness.hpp"

namespace {

using nlohmann::json;
using namespace tasklab;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw argument_error(what + " needs an integer, got \"" + s + "\"");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw argument_error(what + " needs a number, got \"" + s + "\"");
  }
}

Task task_from_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  const auto expect_parts = [&](std::size_t n) {
    if (parts.size() != n)
      throw argument_error("generator spec \"" + spec + "\" is malformed");
  };
  if (kind == "and" || kind == "or" || kind == "xor" || kind == "parity") {
    expect_parts(2);
    const int k = static_cast<int>(parse_int(parts[1], "generator arity"));
    const LogicOp op = kind == "and"   ? LogicOp::and_
                       : kind == "or"  ? LogicOp::or_
                       : kind == "xor" ? LogicOp::xor_
                                       : LogicOp::parity;
    return gen_logic_task(op, k);
  }
  if (kind == "add") {
    expect_parts(2);
    return gen_addition_task(static_cast<int>(parse_int(parts[1], "operand width")));
  }
  if (kind == "uniform") {
    expect_parts(4);
    return gen_uniform_task(static_cast<int>(parse_int(parts[1], "variable count")),
                            parse_double(parts[2], "goal density"),
                            static_cast<std::uint64_t>(parse_int(parts[3], "seed")));
  }
  throw argument_error("unknown generator \"" + kind +
                       "\"; expected and:k, or:k, xor:k, parity:k, add:k or "
                       "uniform:n:density:seed");
}

struct TaskSource {
  std::string gen;
  std::string path;

  Task resolve() const {
    if (gen.empty() == path.empty())
      throw argument_error("give exactly one of --gen or --task");
    return gen.empty() ? load_task_file(path) : task_from_spec(gen);
  }

  std::string name() const {
    std::string raw = gen.empty() ? path : gen;
    for (char& ch : raw)
      if (ch == ',') ch = '_';
    return raw;
  }

  std::string config_fragment() const {
    if (!gen.empty()) return " --gen " + gen;
    if (!path.empty()) return " --task " + path;
    return "";
  }
};

// Output sink: stdout unless --out names a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw argument_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string f6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& piece : split(text, ',')) {
    const auto dots = piece.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<std::uint64_t>(parse_int(piece, "seed")));
      continue;
    }
    const auto lo = parse_int(piece.substr(0, dots), "seed range start");
    const auto hi = parse_int(piece.substr(dots + 2), "seed range end");
    if (lo > hi)
      throw argument_error("seed range \"" + piece + "\" runs backwards");
    for (long long s = lo; s <= hi; ++s) out.push_back(static_cast<std::uint64_t>(s));
  }
  if (out.empty()) throw argument_error("no seeds given");
  return out;
}

std::vector<double> parse_fractions(const std::string& text) {
  std::vector<double> out;
  for (const auto& piece : split(text, ','))
    out.push_back(parse_double(piece, "train fraction"));
  if (out.empty()) throw argument_error("no train fractions given");
  return out;
}

std::vector<AgentKind> parse_agents(const std::string& text) {
  std::vector<AgentKind> out;
  for (const auto& piece : split(text, ',')) {
    const auto kind = agent_kind_from(piece);
    if (!kind)
      throw argument_error("unknown agent \"" + piece +
                           "\"; expected intentional, mimic or hybrid");
    out.push_back(*kind);
  }
  return out;
}

std::string join_seeds(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seeds[i]);
  }
  return out;
}

std::string join_fractions(const std::vector<double>& fractions) {
  std::string out;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    if (i) out += ",";
    out += f6(fractions[i]);
  }
  return out;
}

std::string join_agents(const std::vector<AgentKind>& agents) {
  std::string out;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (i) out += ",";
    out += to_string(agents[i]);
  }
  return out;
}

json report_json(const SolutionReport& r) {
  return json{{"statement", print_statement(r.statement)},
              {"weakness", r.weakness},
              {"bits", r.bits},
              {"terms", r.term_count},
              {"valid", r.valid},
              {"exact", r.exact},
              {"note", r.note}};
}

struct SolveOpts {
  TaskSource source;
  std::string mode = "intensional";
  std::size_t max_primes = 64;
  std::size_t max_results = 8;
  double fraction = 0.0;  // 0 = solve the full task
  std::uint64_t seed = 0;
  bool greedy = false;
  bool allow_tautology = false;
  bool dump_task = false;
  bool json_out = false;
  bool verbose = false;
  bool print_config = false;
  std::string out;
};

int run_solve(const SolveOpts& o) {
  if (o.print_config) {
    std::string line = "solve" + o.source.config_fragment();
    if (o.dump_task) line += " --dump-task";
    line += " --mode " + o.mode;
    line += " --max-primes " + std::to_string(o.max_primes);
    line += " --max-results " + std::to_string(o.max_results);
    if (o.greedy) line += " --greedy";
    if (o.allow_tautology) line += " --allow-tautology";
    line += " --fraction " + f6(o.fraction);
    line += " --seed " + std::to_string(o.seed);
    if (o.verbose) line += " --verbose";
    if (o.json_out) line += " --json";
    if (!o.out.empty()) line += " --out " + o.out;
    std::cout << line << "\n";
    return 0;
  }
  if (o.mode != "intensional" && o.mode != "extensional" && o.mode != "oneclass")
    throw argument_error("unknown mode \"" + o.mode +
                         "\"; expected intensional, extensional or oneclass");
  const Task task = o.source.resolve();
  Sink sink(o.out);
  if (o.dump_task) {
    sink.stream() << format_task_file(task);
    return 0;
  }

  SolveConfig cfg;
  cfg.max_primes = o.max_primes;
  cfg.max_results = o.max_results;
  cfg.greedy = o.greedy;
  cfg.forbid_tautology = !o.allow_tautology;

  std::vector<SolutionReport> reports;
  if (o.mode == "oneclass") {
    reports.push_back(one_class_learn(task.goals(), cfg));
  } else {
    InductionProblem problem = InductionProblem::from_task(task, cfg.limits);
    std::optional<OstensiveDefinition> ostensive;
    if (o.fraction != 0.0) {
      ostensive = make_ostensive(task, o.fraction, o.seed);
      problem = InductionProblem::from_ostensive(*ostensive, cfg.limits);
    }
    if (o.mode == "extensional") {
      SolutionReport r;
      r.statement = extensional_solution(problem.on());
      r.weakness = weakness(r.statement, cfg.limits);
      r.bits = encoding_length(r.statement);
      r.term_count = r.statement.terms().size();
      r.valid = is_solution(r.statement, problem, cfg.limits);
      r.exact = true;
      reports.push_back(std::move(r));
    } else {
      reports = intensional_solutions(problem, cfg);
    }
    if (o.verbose && ostensive) {
      std::cerr << "hidden goals in training reach: "
                << hidden_goal_count(*ostensive, cfg.limits) << "\n";
      const auto suff = is_sufficient(*ostensive, cfg);
      std::cerr << "ostensive definition sufficient: " << (suff.sufficient ? "yes" : "no");
      if (suff.witness)
        std::cerr << " (witness: " << print_statement(*suff.witness) << ")";
      std::cerr << "\n";
    }
  }

  if (o.json_out) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    sink.stream() << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) sink.stream() << report_line(r) << "\n";
  }
  return 0;
}

struct EvalOpts {
  TaskSource source;
  std::string fractions = "0.5";
  std::string seeds = "0..19";
  std::string agents = "intentional,mimic";
  std::size_t max_primes = 64;
  std::size_t max_results = 8;
  std::size_t workers = 1;
  bool greedy = false;
  bool timing = false;
  bool dump_task = false;
  bool verbose = false;
  bool print_config = false;
  std::string out;
};

int run_eval(const EvalOpts& o) {
  const auto fractions = parse_fractions(o.fractions);
  const auto seeds = parse_seeds(o.seeds);
  const auto agents = parse_agents(o.agents);
  if (o.print_config) {
    std::string line = "eval" + o.source.config_fragment();
    if (o.dump_task) line += " --dump-task";
    line += " --fractions " + join_fractions(fractions);
    line += " --seeds " + join_seeds(seeds);
    line += " --agents " + join_agents(agents);
    line += " --max-primes " + std::to_string(o.max_primes);
    line += " --max-results " + std::to_string(o.max_results);
    if (o.greedy) line += " --greedy";
    line += " --workers " + std::to_string(o.workers);
    if (o.timing) line += " --timing";
    if (o.verbose) line += " --verbose";
    if (!o.out.empty()) line += " --out " + o.out;
    std::cout << line << "\n";
    return 0;
  }
  const Task task = o.source.resolve();
  Sink sink(o.out);
  if (o.dump_task) {
    sink.stream() << format_task_file(task);
    return 0;
  }
  EvalOptions opts;
  opts.solve.max_primes = o.max_primes;
  opts.solve.max_results = o.max_results;
  opts.solve.greedy = o.greedy;
  opts.workers = o.workers;
  const auto records =
      sample_efficiency_curve(task, o.source.name(), fractions, seeds, agents, opts);
  write_csv(records, sink.stream(), o.timing);
  if (o.verbose) {
    for (std::uint64_t seed : seeds)
      for (double fraction : fractions) {
        const auto ostensive = make_ostensive(task, fraction, seed);
        std::cerr << "seed=" << seed << " fraction=" << f6(fraction)
                  << " goals_o=" << ostensive.goals_o().size()
                  << " heldout_situations=" << ostensive.heldout_situations().size()
                  << " hidden_goals=" << hidden_goal_count(ostensive, opts.solve.limits)
                  << "\n";
      }
  }
  return 0;
}

struct ParseOpts {
  int n = 0;
  std::string text;
  bool print_config = false;
};

int run_parse(const ParseOpts& o) {
  if (o.print_config) {
    std::cout << "parse --n " << o.n << " " << shell_quote(o.text) << "\n";
    return 0;
  }
  try {
    std::cout << print_statement(parse_statement(o.text, o.n)) << "\n";
  } catch (const parse_error& e) {
    const char* kind = e.k == parse_error::kind::syntax ? "syntax"
                       : e.k == parse_error::kind::scope ? "scope"
                                                         : "contradiction";
    std::cerr << "parse error (" << kind << ") at byte " << e.offset << ": " << e.what()
              << "\n";
    return 2;
  }
  return 0;
}

struct ArchiveOpts {
  TaskSource source;
  std::size_t max_terms = 4;
  std::size_t max_literals = 3;
  bool dump_task = false;
  bool json_out = false;
  bool print_config = false;
  std::string out;
};

int run_archive(const ArchiveOpts& o) {
  if (o.print_config) {
    std::string line = "archive" + o.source.config_fragment();
    if (o.dump_task) line += " --dump-task";
    line += " --max-terms " + std::to_string(o.max_terms);
    line += " --max-literals " + std::to_string(o.max_literals);
    if (o.json_out) line += " --json";
    if (!o.out.empty()) line += " --out " + o.out;
    std::cout << line << "\n";
    return 0;
  }
  const Task task = o.source.resolve();
  Sink sink(o.out);
  if (o.dump_task) {
    sink.stream() << format_task_file(task);
    return 0;
  }
  EnumBounds bounds;
  bounds.max_terms = o.max_terms;
  bounds.max_literals = o.max_literals;
  const auto report = archive_study(task, bounds);

  constexpr std::size_t kListCap = 64;
  if (o.json_out) {
    json j;
    j["task"] = o.source.name();
    j["n"] = task.vars();
    j["bounds"] = {{"max_terms", o.max_terms}, {"max_literals", o.max_literals}};
    j["valid_count"] = report.valid_count;
    j["min_bits"] = report.min_bits;
    j["max_weakness"] = report.max_weakness;
    json minl = json::array(), maxw = json::array();
    for (std::size_t i = 0; i < report.min_length.size() && i < kListCap; ++i)
      minl.push_back(print_statement(report.min_length[i]));
    for (std::size_t i = 0; i < report.weakness_maximal.size() && i < kListCap; ++i)
      maxw.push_back(print_statement(report.weakness_maximal[i]));
    j["min_length"] = minl;
    j["min_length_count"] = report.min_length.size();
    j["weakness_maximal"] = maxw;
    j["weakness_maximal_count"] = report.weakness_maximal.size();
    j["overlap"] = report.intersects;
    sink.stream() << j.dump(2) << "\n";
    return 0;
  }

  auto& out = sink.stream();
  out << "task " << o.source.name() << ": n=" << task.vars() << "\n";
  out << "valid solutions within bounds (terms<=" << o.max_terms << ", literals<="
      << o.max_literals << "): " << report.valid_count << "\n";
  if (report.valid_count == 0) {
    out << "overlap: no\n";
    return 0;
  }
  const auto count_str = [](std::size_t n) {
    return std::to_string(n) + (n == 1 ? " statement" : " statements");
  };
  out << "max weakness: " << report.max_weakness << " ("
      << count_str(report.weakness_maximal.size()) << ")\n";
  out << "min bits: " << report.min_bits << " (" << count_str(report.min_length.size())
      << ")\n";
  out << "overlap: " << (report.intersects ? "yes" : "no") << "\n";
  out << "minimal-length statements:\n";
  for (std::size_t i = 0; i < report.min_length.size(); ++i) {
    if (i == kListCap) {
      out << "  ... (" << report.min_length.size() - kListCap << " more)\n";
      break;
    }
    out << "  " << print_statement(report.min_length[i]) << "\n";
  }
  out << "weakness-maximal statements:\n";
  for (std::size_t i = 0; i < report.weakness_maximal.size(); ++i) {
    if (i == kListCap) {
      out << "  ... (" << report.weakness_maximal.size() - kListCap << " more)\n";
      break;
    }
    out << "  " << print_statement(report.weakness_maximal[i]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tasks, their solutions, and the agents that learn them"};
  app.require_subcommand(1);

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "construct solutions for a task");
  solve->add_option("--gen", so.source.gen, "generator spec (and:k, or:k, xor:k, parity:k, add:k, uniform:n:density:seed)");
  solve->add_option("--task", so.source.path, "task file path");
  solve->add_option("--mode", so.mode, "intensional | extensional | oneclass");
  solve->add_option("--max-primes", so.max_primes, "exact-search cap on prime implicants");
  solve->add_option("--max-results", so.max_results, "tied optima to report");
  solve->add_option("--fraction", so.fraction, "train on an ostensive subsample of the goals");
  solve->add_option("--seed", so.seed, "seed for --fraction subsampling");
  solve->add_flag("--greedy", so.greedy, "weakness-greedy cover instead of exact search");
  solve->add_flag("--allow-tautology", so.allow_tautology, "let oneclass return TRUE");
  solve->add_flag("--dump-task", so.dump_task, "print the task file and exit");
  solve->add_flag("--json", so.json_out, "machine-readable output");
  solve->add_flag("--verbose", so.verbose, "report sufficiency and hidden goals on stderr");
  solve->add_flag("--print-config", so.print_config, "print the canonical flag line and exit");
  solve->add_option("--out", so.out, "write output to a file");

  EvalOpts eo;
  auto* eval = app.add_subcommand("eval", "benchmark agents over seeded subsamples");
  eval->add_option("--gen", eo.source.gen, "generator spec");
  eval->add_option("--task", eo.source.path, "task file path");
  eval->add_option("--fractions", eo.fractions, "comma list of train fractions");
  eval->add_option("--seeds", eo.seeds, "comma list and/or a..b ranges");
  eval->add_option("--agents", eo.agents, "comma list: intentional, mimic, hybrid");
  eval->add_option("--max-primes", eo.max_primes, "exact-search cap on prime implicants");
  eval->add_option("--max-results", eo.max_results, "tied optima cap during training");
  eval->add_option("--workers", eo.workers, "worker threads (seeds are independent)");
  eval->add_flag("--greedy", eo.greedy, "weakness-greedy training");
  eval->add_flag("--timing", eo.timing, "write real elapsed_ms (breaks byte-stability)");
  eval->add_flag("--dump-task", eo.dump_task, "print the task file and exit");
  eval->add_flag("--verbose", eo.verbose, "per-seed subsample statistics on stderr");
  eval->add_flag("--print-config", eo.print_config, "print the canonical flag line and exit");
  eval->add_option("--out", eo.out, "write CSV to a file");

  ParseOpts po;
  auto* parse = app.add_subcommand("parse", "canonicalize a statement");
  parse->add_option("--n", po.n, "variable count")->required();
  parse->add_option("text", po.text, "statement text")->required();
  parse->add_flag("--print-config", po.print_config, "print the canonical flag line and exit");

  ArchiveOpts ao;
  auto* archive = app.add_subcommand("archive", "exhaustive solution-archive study");
  archive->add_option("--gen", ao.source.gen, "generator spec");
  archive->add_option("--task", ao.source.path, "task file path");
  archive->add_option("--max-terms", ao.max_terms, "statement size bound");
  archive->add_option("--max-literals", ao.max_literals, "term size bound");
  archive->add_flag("--dump-task", ao.dump_task, "print the task file and exit");
  archive->add_flag("--json", ao.json_out, "machine-readable output");
  archive->add_flag("--print-config", ao.print_config, "print the canonical flag line and exit");
  archive->add_option("--out", ao.out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(so);
    if (eval->parsed()) return run_eval(eo);
    if (parse->parsed()) return run_parse(po);
    if (archive->parsed()) return run_archive(ao);
    std::cerr << "error: no subcommand given\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

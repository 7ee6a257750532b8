#include "tasklab/task.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tasklab/rng.hpp"

namespace tasklab {

namespace {

void sort_unique(std::vector<PartialAssignment>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool covered_by(const PartialAssignment& s, const std::vector<PartialAssignment>& goals) {
  for (const auto& g : goals)
    if (is_subsequence(s, g)) return true;
  return false;
}

}  // namespace

Task::Task(int n, std::vector<PartialAssignment> situations,
           std::vector<PartialAssignment> goals)
    : n_(n), situations_(std::move(situations)), goals_(std::move(goals)) {
  if (n < 1 || n > kMaxVars)
    throw argument_error("variable count must lie in [1, " +
                         std::to_string(kMaxVars) + "], got " + std::to_string(n));
  for (const auto& s : situations_)
    if (s.vars() != n)
      throw dimension_error("situation \"" + s.to_text() + "\" is over " +
                            std::to_string(s.vars()) + " variables, expected " +
                            std::to_string(n));
  for (const auto& g : goals_)
    if (g.vars() != n)
      throw dimension_error("goal \"" + g.to_text() + "\" is over " +
                            std::to_string(g.vars()) + " variables, expected " +
                            std::to_string(n));
  sort_unique(situations_);
  sort_unique(goals_);
}

std::vector<std::string> validate_task(const Task& t) {
  std::vector<std::string> out;
  for (const auto& g : t.goals())
    if (!g.is_complete())
      out.push_back("goal \"" + g.to_text() + "\" is not a complete assignment");
  for (const auto& s : t.situations())
    if (!covered_by(s, t.goals()))
      out.push_back("situation \"" + s.to_text() + "\" has no goal supersequence");
  return out;
}

OstensiveDefinition::OstensiveDefinition(Task task, std::vector<PartialAssignment> goals_o)
    : task_(std::move(task)), goals_o_(std::move(goals_o)) {
  sort_unique(goals_o_);
  if (goals_o_.empty()) throw argument_error("ostensive goal subset is empty");
  for (const auto& g : goals_o_)
    if (!std::binary_search(task_.goals().begin(), task_.goals().end(), g))
      throw argument_error("ostensive goal \"" + g.to_text() +
                           "\" is not a goal of the task");
  if (goals_o_.size() == task_.goals().size())
    throw properness_error("ostensive goal subset must be proper (all goals selected)");
  bool uncovered = false;
  for (const auto& s : task_.situations()) {
    if (covered_by(s, goals_o_))
      situations_o_.push_back(s);
    else
      uncovered = true;
  }
  if (!uncovered)
    throw properness_error("every situation already has a supersequence in the "
                           "selected goals; nothing is held out");
}

std::vector<PartialAssignment> OstensiveDefinition::heldout_situations() const {
  std::vector<PartialAssignment> out;
  for (const auto& s : task_.situations())
    if (!covered_by(s, goals_o_)) out.push_back(s);
  return out;
}

OstensiveDefinition make_ostensive(const Task& t, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw argument_error("training fraction must lie in (0, 1), got " +
                         std::to_string(fraction));
  const std::size_t total = t.goals().size();
  if (total < 2)
    throw argument_error("drawing a proper goal subset needs at least two goals");
  // The epsilon keeps ceil from rounding up on products like 0.1 * 10 that
  // land just above an integer in floating point.
  std::size_t m = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(total) - 1e-9));
  if (m < 1) m = 1;
  if (m >= total)
    throw properness_error("fraction " + std::to_string(fraction) + " selects all " +
                           std::to_string(total) + " goals; nothing would be held out");
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    auto rng = seeded_engine(seed, static_cast<std::uint64_t>(attempt));
    const auto idx = sample_indices(rng, total, m);
    std::vector<PartialAssignment> goals_o;
    goals_o.reserve(m);
    for (std::size_t i : idx) goals_o.push_back(t.goals()[i]);
    std::sort(goals_o.begin(), goals_o.end());
    bool uncovered = false;
    for (const auto& s : t.situations())
      if (!covered_by(s, goals_o)) {
        uncovered = true;
        break;
      }
    if (uncovered) return OstensiveDefinition(t, std::move(goals_o));
  }
  throw properness_error("no proper goal subset found after " +
                         std::to_string(kAttempts) + " seeded draws");
}

Task merge_tasks(const Task& a, const Task& b) {
  if (a.vars() != b.vars())
    throw dimension_error("merging tasks over different variable counts (" +
                          std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) +
                          ")");
  std::vector<PartialAssignment> situations = a.situations();
  situations.insert(situations.end(), b.situations().begin(), b.situations().end());
  std::vector<PartialAssignment> goals = a.goals();
  goals.insert(goals.end(), b.goals().begin(), b.goals().end());
  Task merged(a.vars(), std::move(situations), std::move(goals));
  const auto violations = validate_task(merged);
  if (!violations.empty()) {
    std::string msg = "merged task is invalid:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw invalid_task_error(msg);
  }
  return merged;
}

Task subdivide_task(const Task& t,
                    const std::function<bool(const PartialAssignment&)>& keep) {
  std::vector<PartialAssignment> situations;
  for (const auto& s : t.situations())
    if (keep(s)) situations.push_back(s);
  std::vector<PartialAssignment> goals;
  for (const auto& g : t.goals())
    for (const auto& s : situations)
      if (is_subsequence(s, g)) {
        goals.push_back(g);
        break;
      }
  return Task(t.vars(), std::move(situations), std::move(goals));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail_line(std::size_t line, const std::string& msg) {
  throw invalid_task_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Task parse_task_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<PartialAssignment> situations, goals;
  std::vector<std::pair<std::size_t, PartialAssignment>> situation_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string directive, value, extra;
    fields >> directive >> value;
    if (fields >> extra) fail_line(line_no, "unexpected trailing field \"" + extra + "\"");
    if (directive == "vars") {
      if (n != -1) fail_line(line_no, "duplicate `vars` directive");
      int parsed = 0;
      try {
        std::size_t used = 0;
        parsed = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        fail_line(line_no, "`vars` needs an integer, got \"" + value + "\"");
      }
      if (parsed < 1 || parsed > kMaxVars)
        fail_line(line_no, "variable count must lie in [1, " +
                               std::to_string(kMaxVars) + "], got " + value);
      n = parsed;
      continue;
    }
    if (n == -1) fail_line(line_no, "expected `vars <n>` before any other directive");
    if (directive != "goal" && directive != "situation")
      fail_line(line_no, "unknown directive \"" + directive + "\"");
    if (value.size() != static_cast<std::size_t>(n))
      fail_line(line_no, "pattern \"" + value + "\" must have length " + std::to_string(n));
    PartialAssignment a = PartialAssignment::empty(n);
    try {
      a = PartialAssignment::from_text(value);
    } catch (const argument_error& e) {
      fail_line(line_no, e.what());
    }
    if (directive == "goal") {
      if (!a.is_complete())
        fail_line(line_no, "goal pattern \"" + value + "\" must not contain '*'");
      goals.push_back(a);
    } else {
      situations.push_back(a);
      situation_lines.emplace_back(line_no, a);
    }
  }
  if (n == -1) fail_line(1, "expected `vars <n>`");
  Task t(n, std::move(situations), std::move(goals));
  if (!validate_task(t).empty()) {
    // All goals are complete by construction here, so any violation is an
    // uncovered situation; report it with the line that introduced it.
    for (const auto& [line, s] : situation_lines)
      if (!covered_by(s, t.goals()))
        fail_line(line, "situation \"" + s.to_text() + "\" has no goal supersequence");
  }
  return t;
}

Task load_task_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw argument_error("cannot open task file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_task_text(buf.str());
}

std::string format_task_file(const Task& t) {
  std::string out = "vars " + std::to_string(t.vars()) + "\n";
  for (const auto& s : t.situations()) out += "situation " + s.to_text() + "\n";
  for (const auto& g : t.goals()) out += "goal " + g.to_text() + "\n";
  return out;
}

}  // namespace tasklab

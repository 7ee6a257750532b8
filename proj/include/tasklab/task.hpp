#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tasklab/assignment.hpp"

namespace tasklab {

// A task over n binary variables: the complete states that count as goals,
// and the partial states (situations) a decision starts from. A task is
// valid when every situation has a goal supersequence and every goal is
// complete; construction normalizes both sets (sorted, duplicates removed)
// but does not enforce validity, see validate_task.
class Task {
 public:
  Task(int n, std::vector<PartialAssignment> situations,
       std::vector<PartialAssignment> goals);

  int vars() const { return n_; }
  const std::vector<PartialAssignment>& situations() const { return situations_; }
  const std::vector<PartialAssignment>& goals() const { return goals_; }

  friend bool operator==(const Task&, const Task&) = default;

 private:
  int n_;
  std::vector<PartialAssignment> situations_;
  std::vector<PartialAssignment> goals_;
};

// Empty result means the task invariants hold; otherwise one message per
// violating element.
std::vector<std::string> validate_task(const Task& t);

// A proper subset of a task's goals presented as training data, with the
// situations it covers. Invariants: goals_o is a nonempty proper subset of
// task.goals, situations_o = situations with a supersequence in goals_o,
// and at least one situation is left uncovered (properness).
class OstensiveDefinition {
 public:
  OstensiveDefinition(Task task, std::vector<PartialAssignment> goals_o);

  const Task& task() const { return task_; }
  const std::vector<PartialAssignment>& goals_o() const { return goals_o_; }
  const std::vector<PartialAssignment>& situations_o() const { return situations_o_; }

  // Situations of the task not covered by goals_o, i.e. the held-out set.
  std::vector<PartialAssignment> heldout_situations() const;

 private:
  Task task_;
  std::vector<PartialAssignment> goals_o_;
  std::vector<PartialAssignment> situations_o_;
};

// Samples ceil(fraction * |goals|) goals without replacement (seeded,
// deterministic) and retries up to 64 reseeded draws until the result is
// proper. fraction must lie in (0, 1); the task needs at least two goals.
OstensiveDefinition make_ostensive(const Task& t, double fraction,
                                   std::uint64_t seed);

// Union of situations and goals; throws invalid_task_error if the result
// fails validation and dimension_error on mismatched n.
Task merge_tasks(const Task& a, const Task& b);

// Restriction to the situations satisfying keep; goals that no longer
// extend any kept situation are dropped.
Task subdivide_task(const Task& t,
                    const std::function<bool(const PartialAssignment&)>& keep);

// Task file format: '#' starts a comment, first directive is `vars <n>`,
// then one `goal <pattern>` or `situation <pattern>` per line. Goals must
// be '*'-free. Invalid files are rejected with line numbers.
Task parse_task_text(const std::string& text);
Task load_task_file(const std::string& path);
std::string format_task_file(const Task& t);

}  // namespace tasklab

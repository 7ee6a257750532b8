#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tasklab/errors.hpp"
#include "tasklab/task.hpp"

using namespace tasklab;

namespace {

Task demo_task() {
  // n=2, situations {0*, 1*}, goals {00, 11}.
  return Task(2,
              {PartialAssignment::from_text("0*"), PartialAssignment::from_text("1*")},
              {PartialAssignment::from_text("00"), PartialAssignment::from_text("11")});
}

Task gen_demo_wide() {
  // Four goals, each covering exactly one situation, so any proper subset
  // of the goals is a proper ostensive sample.
  return Task(3,
              {PartialAssignment::from_text("00*"), PartialAssignment::from_text("10*"),
               PartialAssignment::from_text("01*"), PartialAssignment::from_text("11*")},
              {PartialAssignment::from_text("001"), PartialAssignment::from_text("101"),
               PartialAssignment::from_text("011"), PartialAssignment::from_text("111")});
}

}  // namespace

TEST_CASE("task construction normalizes both sets") {
  const Task t(2,
               {PartialAssignment::from_text("1*"), PartialAssignment::from_text("0*"),
                PartialAssignment::from_text("1*")},
               {PartialAssignment::from_text("11"), PartialAssignment::from_text("00")});
  REQUIRE(t.situations().size() == 2);
  REQUIRE(t.goals().size() == 2);
  CHECK(t.situations()[0].to_text() == "0*");
  CHECK(t.situations()[1].to_text() == "1*");
  CHECK(t.goals()[0].to_text() == "00");
  CHECK(t.goals()[1].to_text() == "11");

  CHECK_THROWS_AS(Task(2, {PartialAssignment::from_text("0**")}, {}), dimension_error);
  CHECK_THROWS_AS(Task(2, {}, {PartialAssignment::from_text("111")}), dimension_error);
}

TEST_CASE("validation reports incomplete goals and stranded situations") {
  CHECK(validate_task(demo_task()).empty());

  const Task bad_goal(2, {}, {PartialAssignment::from_text("1*")});
  const auto m1 = validate_task(bad_goal);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0] == "goal \"1*\" is not a complete assignment");

  const Task stranded(2, {PartialAssignment::from_text("1*")},
                      {PartialAssignment::from_text("00")});
  const auto m2 = validate_task(stranded);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0] == "situation \"1*\" has no goal supersequence");

  // Random valid tasks validate cleanly by construction.
  auto g = oracles::test_rng(31);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(oracles::draw(g, 8));
    CHECK(validate_task(oracles::random_task(g, n, 6)).empty());
  }
}

TEST_CASE("ostensive definitions enforce their invariants") {
  const Task t = demo_task();

  const OstensiveDefinition o(t, {PartialAssignment::from_text("00")});
  REQUIRE(o.goals_o().size() == 1);
  REQUIRE(o.situations_o().size() == 1);
  CHECK(o.situations_o()[0].to_text() == "0*");
  const auto held = o.heldout_situations();
  REQUIRE(held.size() == 1);
  CHECK(held[0].to_text() == "1*");

  CHECK_THROWS_AS(OstensiveDefinition(t, {}), argument_error);
  CHECK_THROWS_AS(OstensiveDefinition(t, {PartialAssignment::from_text("01")}),
                  argument_error);  // not one of the task's goals
  CHECK_THROWS_AS(OstensiveDefinition(t, t.goals()), properness_error);

  // Proper goal subset whose situations still cover everything: improper.
  const Task covered(2, {PartialAssignment::from_text("**")},
                     {PartialAssignment::from_text("00"), PartialAssignment::from_text("11")});
  CHECK_THROWS_AS(OstensiveDefinition(covered, {PartialAssignment::from_text("00")}),
                  properness_error);
}

TEST_CASE("make_ostensive is deterministic and proper") {
  auto g = oracles::test_rng(32);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(oracles::draw(g, 6));
    const Task t = oracles::random_task(g, n, 10);
    if (t.goals().size() < 2) continue;
    const std::uint64_t seed = oracles::draw(g, 1000);
    OstensiveDefinition a = [&] {
      try {
        return make_ostensive(t, 0.5, seed);
      } catch (const properness_error&) {
        // Some tasks admit no proper subsample at this size; skip those.
        return OstensiveDefinition(demo_task(), {PartialAssignment::from_text("00")});
      }
    }();
    const auto b = [&] {
      try {
        return make_ostensive(t, 0.5, seed);
      } catch (const properness_error&) {
        return OstensiveDefinition(demo_task(), {PartialAssignment::from_text("00")});
      }
    }();
    CHECK(a.goals_o() == b.goals_o());
    CHECK(a.task() == b.task());
    if (a.task() == t) {
      // ceil(0.5 * |G|) goals drawn, at least one situation held out.
      CHECK(a.goals_o().size() == (t.goals().size() + 1) / 2);
      CHECK_FALSE(a.heldout_situations().empty());
      CHECK(std::includes(t.goals().begin(), t.goals().end(),
                          a.goals_o().begin(), a.goals_o().end()));
    }
  }

  const Task t = demo_task();
  CHECK_THROWS_AS(make_ostensive(t, 0.0, 1), argument_error);
  CHECK_THROWS_AS(make_ostensive(t, 1.0, 1), argument_error);
  CHECK_THROWS_AS(make_ostensive(t, -0.2, 1), argument_error);
  // ceil(0.9 * 2) = 2 would take every goal.
  CHECK_THROWS_AS(make_ostensive(t, 0.9, 1), properness_error);
  const Task single(1, {PartialAssignment::from_text("*")},
                    {PartialAssignment::from_text("1")});
  CHECK_THROWS_AS(make_ostensive(single, 0.5, 1), argument_error);

  // Different seeds eventually draw different subsets.
  const Task wide = gen_demo_wide();
  bool differs = false;
  const auto first = make_ostensive(wide, 0.5, 0).goals_o();
  for (std::uint64_t s = 1; s < 16 && !differs; ++s)
    differs = make_ostensive(wide, 0.5, s).goals_o() != first;
  CHECK(differs);
}

TEST_CASE("merge and subdivide") {
  const Task a(2, {PartialAssignment::from_text("0*")},
               {PartialAssignment::from_text("00")});
  const Task b(2, {PartialAssignment::from_text("1*")},
               {PartialAssignment::from_text("11")});
  const Task m = merge_tasks(a, b);
  CHECK(m == demo_task());

  CHECK_THROWS_AS(merge_tasks(a, Task(3, {}, {})), dimension_error);

  // Merging two valid tasks keeps every situation covered.
  const Task c(2, {PartialAssignment::from_text("11")},
               {PartialAssignment::from_text("11")});
  const Task d(2, {PartialAssignment::from_text("0*")},
               {PartialAssignment::from_text("00")});
  CHECK_NOTHROW(merge_tasks(c, d));
  // A stranded situation in the union is rejected with its message.
  const Task stranded(2, {PartialAssignment::from_text("1*")}, {});
  CHECK_THROWS_AS(merge_tasks(stranded, d), invalid_task_error);

  const Task whole = demo_task();
  const Task part = subdivide_task(whole, [](const PartialAssignment& s) {
    return s.has(0) && !s.value(0);  // keep situations fixing x0=0
  });
  REQUIRE(part.situations().size() == 1);
  CHECK(part.situations()[0].to_text() == "0*");
  REQUIRE(part.goals().size() == 1);
  CHECK(part.goals()[0].to_text() == "00");
}

TEST_CASE("task text parsing and formatting") {
  const std::string text =
      "# a demo task\n"
      "vars 2\n"
      "situation 0*   # context\n"
      "situation 1*\n"
      "goal 00\n"
      "goal 11\n";
  const Task t = parse_task_text(text);
  CHECK(t == demo_task());

  // format -> parse is the identity on random valid tasks.
  auto g = oracles::test_rng(33);
  for (int i = 0; i < 50; ++i) {
    const Task r = oracles::random_task(g, 1 + static_cast<int>(oracles::draw(g, 8)), 6);
    CHECK(parse_task_text(format_task_file(r)) == r);
  }
}

TEST_CASE("task text rejections carry line numbers") {
  auto message_of = [](const std::string& text) {
    try {
      static_cast<void>(parse_task_text(text));
      return std::string("none");
    } catch (const invalid_task_error& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("situation 0*\n") ==
        "line 1: expected `vars <n>` before any other directive");
  CHECK(message_of("vars zero\n").substr(0, 7) == "line 1:");
  CHECK(message_of("vars 2\nvars 2\n") == "line 2: duplicate `vars` directive");
  CHECK(message_of("vars 2\ngoal 0*\n") ==
        "line 2: goal pattern \"0*\" must not contain '*'");
  CHECK(message_of("vars 2\ngoal 00 extra\n") ==
        "line 2: unexpected trailing field \"extra\"");
  CHECK(message_of("vars 2\nwobble 00\n").substr(0, 7) == "line 2:");
  CHECK(message_of("vars 2\ngoal 000\n").substr(0, 7) == "line 2:");
  // A situation with no goal supersequence is reported on its own line.
  CHECK(message_of("vars 2\nsituation 1*\ngoal 00\n").substr(0, 7) == "line 2:");
  CHECK(message_of("\n# nothing here\n") == "line 1: expected `vars <n>`");
  // A header with no goals or situations is a legal (empty) task.
  CHECK(message_of("vars 2\n# only comments\n") == "none");

  CHECK_THROWS_AS(load_task_file("/nonexistent/task.txt"), argument_error);
}

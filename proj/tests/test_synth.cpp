#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "ubc/synth.hpp"

using namespace ubc;

namespace {

System agh_system() {
  System s;
  s.components = {"A", "G", "H"};
  s.connections = {{"G", "A"}, {"H", "G"}};
  s.interactive = {"A"};
  s.allowed = {{"A", {"A", "G", "H"}}};
  return s;
}

}  // namespace

TEST_CASE("synthesize the AGH system") {
  auto script = synthesize(Goal{agh_system()});
  REQUIRE(script.ok());
  CHECK(script.value().steps.size() == 7);
  auto r = replay(script.value());
  REQUIRE(r.ok());
  CHECK(r.value().judgment.system() == agh_system());
}

TEST_CASE("synthesize the empty system") {
  auto script = synthesize(Goal{axiom()});
  REQUIRE(script.ok());
  CHECK(script.value().steps.empty());
}

TEST_CASE("non-closed goals are unsatisfiable with a confirmed witness") {
  System goal = agh_system();
  goal.allowed["A"] = {"A"};  // G and H reach A ungranted
  auto script = synthesize(Goal{goal});
  REQUIRE_FALSE(script.ok());
  CHECK(script.error().code == "unsatisfiable");
  CHECK(script.error().witness == std::vector<std::string>{"G", "A"});
  // the witness is independently a closure violation
  auto violations = closure_invariant(goal);
  bool found = false;
  for (const auto& d : violations)
    if (d.witness == script.error().witness) found = true;
  CHECK(found);
}

TEST_CASE("malformed goals are rejected") {
  System bad;
  bad.components = {"g"};
  bad.interactive = {"g"};
  bad.allowed = {{"g", {}}};
  auto script = synthesize(Goal{bad});
  REQUIRE_FALSE(script.ok());
  CHECK(script.error().code == "malformed-goal");
}

TEST_CASE("goals with pure grants are still reachable") {
  // b ∈ A(i) although b does not reach i, while a -> b exists with a
  // ungranted: the pure grant must be issued after the connect.
  System goal;
  goal.components = {"a", "b", "i"};
  goal.connections = {{"a", "b"}};
  goal.interactive = {"i"};
  goal.allowed = {{"i", {"i", "b"}}};
  REQUIRE(closure_invariant(goal).empty());
  auto script = synthesize(Goal{goal});
  REQUIRE(script.ok());
  auto r = replay(script.value());
  REQUIRE(r.ok());
  CHECK(r.value().judgment.system() == goal);
}

TEST_CASE("round-trip on random closed goals") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    System goal = testing::random_closed_system(rng, 10);
    auto script = synthesize(Goal{goal});
    REQUIRE(script.ok());
    auto r = replay(script.value());
    REQUIRE(r.ok());
    CHECK(r.value().judgment.system() == goal);
  }
}

TEST_CASE("synthesized scripts are deterministic and phase-ordered") {
  std::mt19937 rng(59);
  System goal = testing::random_closed_system(rng, 8);
  auto s1 = synthesize(Goal{goal});
  auto s2 = synthesize(Goal{goal});
  REQUIRE(s1.ok());
  CHECK(s1.value() == s2.value());
  // creates come first, and within the create phase interactive before
  // general; every delete-free kind only
  bool seen_non_create = false;
  for (const auto& step : s1.value().steps) {
    bool is_create = step.kind == StepKind::CreateGeneral ||
                     step.kind == StepKind::CreateInteractive;
    if (!is_create) seen_non_create = true;
    CHECK_FALSE((is_create && seen_non_create));
    CHECK(step.kind != StepKind::Delete);
    CHECK(step.kind != StepKind::Disconnect);
    CHECK(step.kind != StepKind::Revoke);
    CHECK(step.kind != StepKind::Split);
  }
}

TEST_CASE("explain") {
  Script script{{
      {StepKind::CreateInteractive, {"A"}},
      {StepKind::CreateGeneral, {"G"}},
      {StepKind::Allow, {"A", "G"}},
      {StepKind::Connect, {"G", "A"}},
  }};
  auto doc = explain(script);
  REQUIRE(doc.ok());
  // narrative entries: one per step plus the axiom
  CHECK(std::count(doc.value().begin(), doc.value().end(), '\n') ==
        static_cast<long>(script.steps.size()) + 2);  // + contract line
  CHECK(doc.value().find("axiom") != std::string::npos);
  CHECK(doc.value().find("connect G -> A") != std::string::npos);
  CHECK(doc.value().find("contract:") != std::string::npos);

  auto empty = explain(Script{});
  REQUIRE(empty.ok());
  CHECK(empty.value().find("axiom") != std::string::npos);

  Script bad{{{StepKind::Connect, {"G", "A"}}}};
  CHECK_FALSE(explain(bad).ok());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ubc/core.hpp"

using namespace ubc;

namespace {

System agh() {
  System s;
  s.components = {"A", "G", "H"};
  s.connections = {{"G", "A"}, {"H", "G"}};
  s.interactive = {"A"};
  s.allowed = {{"A", {"A", "G", "H"}}};
  return s;
}

}  // namespace

TEST_CASE("well_formed") {
  CHECK(well_formed(System{}));
  CHECK(well_formed(agh()));

  System bad;
  bad.components = {"g"};
  bad.interactive = {"g"};
  bad.allowed = {{"g", {}}};  // violates g ∈ A(g)
  CHECK_FALSE(well_formed(bad));

  System stray = agh();
  stray.allowed["G"] = {"G"};  // domain(A) must be exactly I
  CHECK_FALSE(well_formed(stray));

  System dangling = agh();
  dangling.connections.insert({"G", "Z"});
  CHECK_FALSE(well_formed(dangling));

  System badname;
  badname.components = {"1abc"};
  CHECK_FALSE(well_formed(badname));
}

TEST_CASE("reaches is the strict transitive closure") {
  System s = agh();
  CHECK(reaches(s, "H", "A"));  // H -> G -> A
  CHECK(reaches(s, "H", "G"));
  CHECK(reaches(s, "G", "A"));
  CHECK_FALSE(reaches(s, "A", "H"));
  CHECK_FALSE(reaches(s, "A", "A"));  // no self loop, not reflexive
  CHECK_FALSE(reaches(s, "G", "H"));
}

TEST_CASE("downstream and upstream include the endpoint") {
  System s = agh();
  CHECK(downstream(s, "H") == IdSet{"H", "G", "A"});
  CHECK(downstream(s, "A") == IdSet{"A"});
  CHECK(upstream(s, "A") == IdSet{"A", "G", "H"});
  CHECK(upstream(s, "H") == IdSet{"H"});

  System iso;
  iso.components = {"x"};
  CHECK(downstream(iso, "x") == IdSet{"x"});
  CHECK(upstream(iso, "x") == IdSet{"x"});
}

TEST_CASE("closure_invariant") {
  CHECK(closure_invariant(System{}).empty());
  CHECK(closure_invariant(agh()).empty());

  System missing = agh();
  missing.allowed["A"] = {"A", "G"};  // H reaches A via G but is not granted
  auto violations = closure_invariant(missing);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].witness == std::vector<std::string>{"H", "A"});
}

TEST_CASE("closure_invariant is relaxed by enhancers") {
  System s = agh();
  s.allowed["A"] = {"A", "G"};
  CHECK(closure_invariant(s).size() == 1);
  s.enhancers = {"G"};  // the only H ⇝ A path goes through G
  CHECK(closure_invariant(s).empty());
}

TEST_CASE("reaches agrees with the brute-force oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    System s = testing::random_system(rng, 6);
    for (const auto& a : s.components)
      for (const auto& b : s.components)
        CHECK(reaches(s, a, b) == testing::oracle_reaches(s, a, b));
  }
}

TEST_CASE("downstream/upstream duality") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    System s = testing::random_system(rng, 6);
    for (const auto& c : s.components) {
      auto down = downstream(s, c);
      for (const auto& d : down) {
        if (d == c) continue;
        auto up = upstream(s, d);
        CHECK(up.contains(c));
      }
    }
  }
}

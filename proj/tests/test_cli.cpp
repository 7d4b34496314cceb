#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidyn/dot_export.hpp"
#include "semidyn/fixtures.hpp"
#include "semidyn/generate.hpp"
#include "semidyn/germ_groupoid.hpp"
#include "semidyn/suite.hpp"

using namespace semidyn;

TEST_CASE("catalog prints and parses back to itself") {
  InstanceBundle cat = fixture_catalog();
  std::string text = print_instances(cat);
  InstanceBundle back = parse_instances(text);
  CHECK(back == cat);
  CHECK(print_instances(back) == text);
}

TEST_CASE("a generated semigroup file parses to a validated instance") {
  InstanceBundle b;
  b.semigroups.emplace_back("I2", symmetric_inverse(2).sg);
  InstanceBundle back = parse_instances(print_instances(b));
  const FiniteInverseSemigroup* sg = back.find_semigroup("I2");
  REQUIRE(sg != nullptr);
  CHECK(sg->size() == 7);
  CHECK(sg->idempotents().size() == 4);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_instances("[semigroup S]\nelements a b\nmul a : a\nmul b : b a\n");
    FAIL("short row must not parse");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }

  try {
    parse_instances("elements a b\n");
    FAIL("content before a header must not parse");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }

  try {
    parse_instances("[semigroup S]\nelements a b\nmul a : a q\nmul b : b a\n");
    FAIL("unknown label must not parse");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 1);
  }

  CHECK_THROWS_AS(parse_instances("[frobnicate X]\n"), ParseError);
}

TEST_CASE("semantic validation failures surface as validation errors") {
  // well-formed file, left-zero table
  std::string text =
      "[semigroup LZ]\nelements a b\nmul a : a a\nmul b : b b\n";
  CHECK_THROWS_WITH_AS(parse_instances(text),
                       doctest::Contains("NonUniqueInverse"), Error);
}

TEST_CASE("restriction generator") {
  PartialAction global = wagner_preston_action(symmetric_inverse(2).sg);

  CHECK(generate_restricted_action(global, 5, 0) == global);

  PartialAction r1 = generate_restricted_action(global, 1);
  PartialAction r1again = generate_restricted_action(global, 1);
  CHECK(r1 == r1again);  // deterministic in the seed
  for (int s = 0; s < global.sg().size(); ++s)
    CHECK(r1.theta(s).restriction_of(global.theta(s)));

  CHECK_THROWS_WITH_AS(generate_restricted_action(global, 1, 50, 0),
                       doctest::Contains("GenerationExhausted"), Error);

  // a run of seeds over the group bases used by the verification batteries
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    for (const auto& base :
         {cyclic_group(2), cyclic_group(3),
          direct_product(semilattice_chain(2), cyclic_group(2))}) {
      PartialAction r = generate_restricted_action(
          wagner_preston_action(base), seed);
      CHECK(r.space().size() == base.size());
    }
  }
}

TEST_CASE("dot exports are stable and well-formed") {
  std::string d1 = groupoid_dot(pair_groupoid(2), "P2");
  CHECK(d1 == groupoid_dot(pair_groupoid(2), "P2"));
  CHECK(d1.find("digraph \"P2\"") == 0);
  CHECK(d1.find("label=\"(2,1)\"") != std::string::npos);

  GermGroupoid g = germ_groupoid(fixture_K());
  std::string d2 = germ_dot(g, "K");
  CHECK(d2.find("n0 -> n1") != std::string::npos);
  CHECK(d2.find("label=\"2-\"") != std::string::npos);
}

TEST_CASE("suite runner") {
  CHECK_THROWS_WITH_AS(run_suite(InstanceBundle{}, "frobnicate", 0),
                       doctest::Contains("UnknownSuite"), Error);
  CHECK(run_suite(InstanceBundle{}, "all", 0).empty());

  InstanceBundle small;
  small.semigroups.emplace_back("Z2", cyclic_group(2));
  small.spaces.emplace_back("xy", fixture_PZ2().space());
  small.actions.emplace_back(
      "PZ2", InstanceBundle::NamedAction{"Z2", "xy", fixture_PZ2()});

  std::vector<CheckReport> germ = run_suite(small, "germ", 7);
  CHECK(all_pass(germ));
  bool aha = false, bucuros = false, ohanesian = false, cuci = false;
  for (const auto& r : germ) {
    aha = aha || r.check == "aha";
    bucuros = bucuros || r.check == "bucuros";
    ohanesian = ohanesian || r.check == "ohanesian";
    cuci = cuci || r.check == "cuci";
  }
  CHECK((aha && bucuros && ohanesian && cuci));

  std::string once = render_reports(run_suite(small, "all", 7));
  std::string twice = render_reports(run_suite(small, "all", 7));
  CHECK(once == twice);
}

TEST_CASE("reports render one sorted line each") {
  CheckReport a("beta", "inst");
  CheckReport b("alfa", "inst", "sigma=x");
  b.require(false, "w");
  b.seed = 7;
  std::string text = render_reports({a, b});
  CHECK(text.find("check=alfa") == 0);  // sorted ahead of beta
  CHECK(text.find("verdict=fail") != std::string::npos);
  CHECK(text.find("seed=7") != std::string::npos);
  CHECK(text.find("witnesses[w]") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

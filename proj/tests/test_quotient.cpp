#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidyn/fixtures.hpp"
#include "semidyn/quotient_action.hpp"

using namespace semidyn;

TEST_CASE("induced action along the minimum group congruence") {
  PartialAction a4 = fixture_A4();
  InducedAction ind = induced_action(a4, min_group_congruence(a4.sg()));
  REQUIRE(ind.quot.quotient.size() == 2);
  CHECK(is_group(ind.quot.quotient));
  // identity class acts as the identity everywhere, the other swaps x and y
  CHECK(ind.action.theta(ind.quot.projection[a4.sg().index_of_label("(c1,e)")]) ==
        PartialBijection::identity_on(3, {0, 1, 2}));
  CHECK(ind.action.theta(ind.quot.projection[a4.sg().index_of_label("(c1,g)")]) ==
        PartialBijection::from_images({1, 0, -1}));
}

TEST_CASE("induced action along the equality congruence is the action itself") {
  for (const PartialAction& a : {fixture_PZ2(), fixture_A4(), fixture_K()}) {
    InducedAction ind = induced_action(a, equality_congruence(a.sg()));
    CHECK(ind.action.space() == a.space());
    for (int s = 0; s < a.sg().size(); ++s)
      CHECK(ind.action.theta(ind.quot.projection[s]) == a.theta(s));
  }
}

TEST_CASE("congruences that are not idempotent pure are rejected") {
  PartialAction k = fixture_K();
  CHECK_THROWS_WITH_AS(induced_action(k, min_group_congruence(k.sg())),
                       doctest::Contains("NotIdempotentPure"), Error);
}

TEST_CASE("quotient transfer checks") {
  PartialAction a4 = fixture_A4();
  InducedAction mg = induced_action(a4, min_group_congruence(a4.sg()));
  CHECK(check_gramada(a4, mg, 0, {1}, "A4").pass);
  CHECK(check_gramada(a4, mg, 2, {2}, "A4").pass);
  CHECK(check_gramada(a4, mg, 1, {}, "A4").pass);

  for (const PartialAction& a : {fixture_PZ2(), fixture_A4(), fixture_K()}) {
    InducedAction eq = induced_action(a, equality_congruence(a.sg()));
    for (int sigma = 0; sigma < a.space().size(); ++sigma)
      CHECK(check_gramada(a, eq, sigma, full_set(a.space().size()), "x").pass);
  }
}

TEST_CASE("group quotient bijection for E-unitary bases") {
  CHECK(check_hazard(fixture_A4(), 7, "A4").pass);
  CHECK(check_hazard(fixture_PZ2(), 7, "PZ2").pass);
  CHECK(check_hazard(fixture_z2_trivial(), 7, "Z2tr").pass);
  CHECK(check_hazard(wagner_preston_action(direct_product(
                         semilattice_chain(2), cyclic_group(2))),
                     7, "wpE2xZ2")
            .pass);

  CHECK_THROWS_WITH_AS(check_hazard(fixture_K(), 7, "K"),
                       doctest::Contains("PreconditionNotEUnitary"), Error);
}

TEST_CASE("hazard class counts on the swap fixture") {
  PartialAction a4 = fixture_A4();
  InducedAction mg = induced_action(a4, min_group_congruence(a4.sg()));
  // at x both classes apply: two pointwise classes against {e-bar, g-bar}
  CHECK(germ_classes(a4, 0).size() == 2);
  CHECK(applicable(mg.action, 0).size() == 2);
  // at z only the identity class applies
  CHECK(germ_classes(a4, 2).size() == 1);
  CHECK(applicable(mg.action, 2) == IndexSet{0});
}

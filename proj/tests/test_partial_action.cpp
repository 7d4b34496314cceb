#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidyn/fixtures.hpp"
#include "semidyn/partial_action.hpp"

using namespace semidyn;

TEST_CASE("fixture validation and kinds") {
  PartialAction k = fixture_K();
  CHECK(k.genuine());
  CHECK(k.space().size() == 2);

  PartialAction pz2 = fixture_PZ2();
  CHECK_FALSE(pz2.genuine());  // theta_g o theta_g is a proper restriction

  PartialAction a4 = fixture_A4();
  CHECK_FALSE(a4.genuine());
  CHECK(is_e_unitary(a4.sg()));

  CHECK(fixture_z2_trivial().genuine());
}

TEST_CASE("axiom violations carry witnesses") {
  FiniteInverseSemigroup z2 = cyclic_group(2);
  FiniteSpace space = make_space({"x", "y"});

  // (i) broken: g acts as a non-involution restriction whose inverse is not
  // itself assigned to g# = g
  std::vector<PartialBijection> bad(2);
  bad[0] = PartialBijection::identity_on(2, {0, 1});
  bad[1] = PartialBijection::from_images({1, -1});  // x -> y, undefined at y
  CHECK_THROWS_WITH_AS(validate_partial_action(z2, space, bad),
                       doctest::Contains("AxiomViolation"), Error);

  // (iv) broken: nothing covers y
  std::vector<PartialBijection> uncov(2);
  uncov[0] = PartialBijection::identity_on(2, {0});
  uncov[1] = PartialBijection::identity_on(2, {0});
  CHECK_THROWS_WITH_AS(validate_partial_action(z2, space, uncov),
                       doctest::Contains("NotNondegenerate"), Error);
}

TEST_CASE("applicable sets") {
  PartialAction k = fixture_K();
  IndexSet app1 = applicable(k, 0);  // point "1"
  CHECK(app1.size() == 4);
  for (int s : app1) {
    auto l = k.sg().label(s);
    CHECK((l == "1-" || l == "12" || l == "21" || l == "2-"));
  }

  PartialAction pz2 = fixture_PZ2();
  CHECK(applicable(pz2, 1) == IndexSet{0});  // only e applies to y
  CHECK(applicable(pz2, 0) == IndexSet{0, 1});
}

TEST_CASE("orbits") {
  PartialAction k = fixture_K();
  CHECK(orbits(k) == std::vector<IndexSet>{{0, 1}});
  CHECK(orbit(k, 0) == IndexSet{0, 1});

  PartialAction a4 = fixture_A4();
  CHECK(orbits(a4) == std::vector<IndexSet>{{0, 1}, {2}});

  PartialAction pz2 = fixture_PZ2();
  CHECK(orbits(pz2) == std::vector<IndexSet>{{0}, {1}});
}

TEST_CASE("invariant subsets") {
  PartialAction a4 = fixture_A4();
  CHECK(is_invariant(a4, {2}));
  CHECK(is_invariant(a4, {0, 1}));
  CHECK_FALSE(is_invariant(a4, {0}));
  CHECK(is_invariant(a4, {0, 1, 2}));
  CHECK(is_invariant(a4, {}));

  PartialAction k = fixture_K();
  CHECK_FALSE(is_invariant(k, {0}));
  CHECK(is_invariant(k, {0, 1}));
}

TEST_CASE("pointwise equivalence") {
  PartialAction k = fixture_K();
  int e1 = k.sg().index_of_label("1-");
  int id = k.sg().index_of_label("12");
  int up = k.sg().index_of_label("2-");
  int swap = k.sg().index_of_label("21");

  CHECK(point_equiv(k, 0, e1, id));
  CHECK(point_equiv(k, 0, up, swap));
  CHECK_FALSE(point_equiv(k, 0, e1, up));
  CHECK(point_equiv(k, 0, id, id));

  int zero = k.sg().index_of_label("--");
  CHECK_THROWS_WITH_AS(point_equiv(k, 0, zero, id),
                       doctest::Contains("NotApplicable"), Error);
}

TEST_CASE("pointwise equivalence is finer than equal values") {
  PartialAction tr = fixture_z2_trivial();
  CHECK(tr.theta(0).apply(0) == tr.theta(1).apply(0));
  CHECK_FALSE(point_equiv(tr, 0, 0, 1));
}

TEST_CASE("germ class tables") {
  PartialAction k = fixture_K();
  GermClassTable g1 = germ_classes(k, 0);
  CHECK(g1.size() == 2);
  CHECK(g1.classes[0] == IndexSet{k.sg().index_of_label("1-"),
                                  k.sg().index_of_label("12")});
  CHECK(g1.classes[1] == IndexSet{k.sg().index_of_label("2-"),
                                  k.sg().index_of_label("21")});

  PartialAction pz2 = fixture_PZ2();
  CHECK(germ_classes(pz2, 0).size() == 2);  // trivial order in a group
  CHECK(germ_classes(pz2, 1).size() == 1);

  // members of one class agree at the base point
  for (const PartialAction& a : {fixture_K(), fixture_PZ2(), fixture_A4()})
    for (int sigma = 0; sigma < a.space().size(); ++sigma) {
      GermClassTable g = germ_classes(a, sigma);
      for (const IndexSet& cl : g.classes)
        for (int s : cl)
          CHECK(a.theta(s).apply(sigma) == a.theta(cl[0]).apply(sigma));
    }
}

TEST_CASE("domain and image bookkeeping") {
  for (const PartialAction& a : {fixture_K(), fixture_PZ2(), fixture_A4()}) {
    const auto& s = a.sg();
    for (int t = 0; t < s.size(); ++t) {
      CHECK(a.theta(t).domain() == a.theta(s.inv(t)).image());
      CHECK(is_subset(a.theta(t).domain(),
                      a.theta(s.mul(s.inv(t), t)).domain()));
      CHECK(is_subset(a.theta(t).image(),
                      a.theta(s.mul(t, s.inv(t))).image()));
    }
  }
}

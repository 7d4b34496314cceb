#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidyn/bisection.hpp"
#include "semidyn/builtins.hpp"
#include "semidyn/recurrence.hpp"

using namespace semidyn;

TEST_CASE("canonical and self actions validate") {
  FiniteGroupoid p2 = pair_groupoid(2);
  GroupoidAction can = canonical_action(p2);
  CHECK(can.space().size() == 2);
  GroupoidAction self = self_action(p2);
  CHECK(self.space().size() == 4);
  CHECK(canonical_action(group_groupoid(cyclic_group(1))).space().size() == 1);
}

TEST_CASE("anchors must cover the units") {
  FiniteGroupoid p2 = pair_groupoid(2);
  int u1 = p2.index_of_label("(1,1)");
  std::vector<std::vector<int>> act(4, std::vector<int>(1, -1));
  for (int x = 0; x < 4; ++x)
    if (p2.d(x) == u1) act[x][0] = 0;
  CHECK_THROWS_WITH_AS(
      validate_groupoid_action(p2, make_space({"pt"}), {u1}, act),
      doctest::Contains("AnchorNotSurjective"), Error);
}

TEST_CASE("arrow recurrence sets") {
  FiniteGroupoid p2 = pair_groupoid(2);
  GroupoidAction can = canonical_action(p2);
  CHECK(tilde_recurrence(can, {0}, {1}) ==
        IndexSet{p2.index_of_label("(2,1)")});
  CHECK(tilde_recurrence(can, {0}, {}).empty());
  // for the canonical action this is exactly the unit restriction
  for (int mm = 0; mm < 4; ++mm)
    for (int nn = 0; nn < 4; ++nn) {
      IndexSet m, n, mu, nu;
      for (int p = 0; p < 2; ++p) {
        if (mm & (1 << p)) {
          m.push_back(p);
          insert_sorted(mu, can.anchor(p));
        }
        if (nn & (1 << p)) {
          n.push_back(p);
          insert_sorted(nu, can.anchor(p));
        }
      }
      CHECK(tilde_recurrence(can, m, n) == restriction(p2, mu, nu));
    }

  GroupoidAction self = self_action(p2);
  int a11 = p2.index_of_label("(1,1)"), a21 = p2.index_of_label("(2,1)");
  CHECK(tilde_recurrence(self, {a11}, {a21}) == IndexSet{a21});
}

TEST_CASE("orbits of groupoid actions") {
  FiniteGroupoid p2 = pair_groupoid(2);
  CHECK(orbits_gaction(canonical_action(p2)) ==
        std::vector<IndexSet>{{0, 1}});
  // left translation preserves the source: two orbits
  CHECK(orbits_gaction(self_action(p2)) ==
        std::vector<IndexSet>{{0, 2}, {1, 3}});
  CHECK(is_invariant_gaction(self_action(p2), full_set(4)));
  CHECK_FALSE(is_invariant_gaction(canonical_action(p2), {0}));
}

TEST_CASE("bisection semigroups") {
  BisectionSemigroup b2 = bisections(pair_groupoid(2));
  CHECK(b2.sg.size() == 7);
  CHECK(b2.sg.idempotents().size() == 4);

  BisectionSemigroup b3 = bisections(pair_groupoid(3));
  CHECK(b3.sg.size() == 34);  // same size as the symmetric inverse monoid

  BisectionSemigroup bz3 = bisections(group_groupoid(cyclic_group(3)));
  CHECK(bz3.sg.size() == 4);  // empty set and three singletons

  BisectionSemigroup b1 = bisections(group_groupoid(cyclic_group(1)));
  CHECK(b1.sg.size() == 2);

  CHECK_THROWS_WITH_AS(bisections(pair_groupoid(4)),
                       doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("bisections of the two-point pair groupoid match partial bijections") {
  FiniteGroupoid p2 = pair_groupoid(2);
  BisectionSemigroup b2 = bisections(p2);
  auto i2 = symmetric_inverse(2);
  // match each bisection with the partial bijection its arrows trace on the
  // unit space, then compare multiplication tables through that matching
  std::vector<int> unit_point(p2.size(), -1);
  for (int i = 0; i < 2; ++i) unit_point[p2.units()[i]] = i;
  std::vector<int> to_i2(b2.sg.size(), -1);
  for (int i = 0; i < b2.sg.size(); ++i) {
    std::vector<int> img(2, -1);
    for (int x : b2.bisections[i])
      img[unit_point[p2.d(x)]] = unit_point[p2.r(x)];
    PartialBijection pb = PartialBijection::from_images(img);
    for (int j = 0; j < i2.sg.size(); ++j)
      if (i2.maps[j] == pb) to_i2[i] = j;
    REQUIRE(to_i2[i] >= 0);
  }
  IndexSet image(to_i2.begin(), to_i2.end());
  canonicalize(image);
  CHECK(image.size() == 7);  // bijective
  for (int x = 0; x < b2.sg.size(); ++x)
    for (int y = 0; y < b2.sg.size(); ++y)
      CHECK(to_i2[b2.sg.mul(x, y)] == i2.sg.mul(to_i2[x], to_i2[y]));
}

TEST_CASE("attached bisection action") {
  FiniteGroupoid p2 = pair_groupoid(2);
  BisectionSemigroup b2 = bisections(p2);
  GroupoidAction can = canonical_action(p2);
  PartialAction act = bis_action(b2, can);
  CHECK(act.genuine());

  int a21 = p2.index_of_label("(2,1)");
  int only21 = b2.index_of(IndexSet{a21});
  CHECK(act.theta(only21) == PartialBijection::from_images({1, -1}));
  CHECK(act.theta(b2.index_of({})) == PartialBijection::empty_map(2));
  IndexSet diag{p2.index_of_label("(1,1)"), p2.index_of_label("(2,2)")};
  CHECK(act.theta(b2.index_of(diag)) == PartialBijection::identity_on(2, {0, 1}));
}

TEST_CASE("orbit and invariance transfer to the bisection action") {
  for (int npts : {2, 3}) {
    FiniteGroupoid p = pair_groupoid(npts);
    BisectionSemigroup b = bisections(p);
    for (const GroupoidAction& ga : {canonical_action(p), self_action(p)}) {
      PartialAction act = bis_action(b, ga);
      CHECK(check_oneon(b, ga, act, 7, "x").pass);
    }
  }
  FiniteGroupoid z1 = group_groupoid(cyclic_group(1));
  GroupoidAction triv = canonical_action(z1);
  CHECK(check_oneon(bisections(z1), triv, bis_action(bisections(z1), triv), 7,
                    "triv")
            .pass);
}

TEST_CASE("pointwise classes evaluate onto the arrow fiber") {
  FiniteGroupoid p2 = pair_groupoid(2);
  BisectionSemigroup b2 = bisections(p2);
  GroupoidAction can = canonical_action(p2);
  PartialAction act = bis_action(b2, can);

  CheckReport r = check_vertij(b2, can, act, 0, {1}, "canP2");
  CHECK(r.pass);
  CHECK(applicable(act, 0).size() == 4);
  CHECK(germ_classes(act, 0).size() == 2);
  CHECK(check_vertij(b2, can, act, 0, {0, 1}, "canP2").pass);
  CHECK(check_vertij(b2, can, act, 1, {}, "canP2").pass);

  GroupoidAction self = self_action(p2);
  PartialAction sact = bis_action(b2, self);
  for (int sigma = 0; sigma < 4; ++sigma)
    CHECK(check_vertij(b2, self, sact, sigma, {0, 2}, "selfP2").pass);
}

TEST_CASE("recurrent bisections are those meeting the arrow recurrence set") {
  FiniteGroupoid p2 = pair_groupoid(2);
  BisectionSemigroup b2 = bisections(p2);
  GroupoidAction can = canonical_action(p2);
  PartialAction act = bis_action(b2, can);

  CheckReport r = check_onegsion(b2, can, act, 0, {0}, {1}, 7, "canP2");
  CHECK(r.pass);
  int a21 = p2.index_of_label("(2,1)");
  IndexSet expect{b2.index_of(IndexSet{a21}),
                  b2.index_of(IndexSet{p2.index_of_label("(1,2)"), a21})};
  canonicalize(expect);
  CHECK(naive_recurrence(act, {0}, {1}) == expect);

  GroupoidAction self = self_action(p2);
  PartialAction sact = bis_action(b2, self);
  CHECK(check_onegsion(b2, self, sact, 1, {1}, {3}, 7, "selfP2").pass);
  CHECK(check_onegsion(b2, self, sact, 2, full_set(4), full_set(4), 7,
                       "selfP2")
            .pass);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidyn/fixtures.hpp"
#include "semidyn/germ_groupoid.hpp"

using namespace semidyn;

namespace {

PartialAction trivial_point_action() {
  FiniteInverseSemigroup one = cyclic_group(1);
  return validate_partial_action(one, make_space({"pt"}),
                                 {PartialBijection::identity_on(1, {0})});
}

}  // namespace

TEST_CASE("pair groupoids validate") {
  FiniteGroupoid p2 = pair_groupoid(2);
  CHECK(p2.size() == 4);
  CHECK(p2.units().size() == 2);
  FiniteGroupoid p3 = pair_groupoid(3);
  CHECK(p3.size() == 9);
  CHECK(p3.units().size() == 3);

  int a21 = p2.index_of_label("(2,1)");
  int a12 = p2.index_of_label("(1,2)");
  CHECK(p2.compose(a12, a21) == p2.index_of_label("(1,1)"));
  CHECK(p2.inverse(a21) == a12);
}

TEST_CASE("groups are one-unit groupoids") {
  FiniteGroupoid g = group_groupoid(cyclic_group(4));
  CHECK(g.size() == 4);
  CHECK(g.units().size() == 1);
}

TEST_CASE("range violations are reported as BadUnit") {
  FiniteGroupoid p2 = pair_groupoid(2);
  std::vector<int> d(4), r(4);
  std::vector<std::vector<int>> comp(4, std::vector<int>(4, -1));
  for (int x = 0; x < 4; ++x) {
    d[x] = p2.d(x);
    r[x] = p2.r(x);
    for (int y = 0; y < 4; ++y) comp[x][y] = p2.compose(x, y);
  }
  int a12 = p2.index_of_label("(1,2)");
  int a21 = p2.index_of_label("(2,1)");
  comp[a12][a21] = p2.index_of_label("(2,2)");  // wrong range
  CHECK_THROWS_WITH_AS(validate_groupoid(p2.units(), d, r, comp),
                       doctest::Contains("BadUnit"), Error);
}

TEST_CASE("groupoid restriction") {
  FiniteGroupoid p2 = pair_groupoid(2);
  int u1 = p2.index_of_label("(1,1)"), u2 = p2.index_of_label("(2,2)");
  CHECK(restriction(p2, {u1}, {u2}) == IndexSet{p2.index_of_label("(2,1)")});
  CHECK(restriction(p2, {u1}, {u1}) == IndexSet{u1});
  CHECK(restriction(p2, p2.units(), p2.units()).size() == 4);
}

TEST_CASE("germ groupoid shapes") {
  GermGroupoid gk = germ_groupoid(fixture_K());
  CHECK(gk.size() == 4);
  CHECK(gk.gpd.units().size() == 2);

  GermGroupoid gp = germ_groupoid(fixture_PZ2());
  CHECK(gp.size() == 3);  // a two-element bundle over x, a unit over y
  CHECK(gp.gpd.units().size() == 2);

  CHECK(germ_groupoid(trivial_point_action()).size() == 1);
}

TEST_CASE("endpoint maps") {
  PartialAction k = fixture_K();
  GermGroupoid g = germ_groupoid(k);
  int up = k.sg().index_of_label("2-");
  int swap = k.sg().index_of_label("21");
  CHECK(theta_pair(k, up, 0) == std::pair<int, int>{1, 0});
  for (int e : k.sg().idempotents())
    for (int sigma : k.theta(e).domain())
      CHECK(theta_pair(k, e, sigma) == std::pair<int, int>{sigma, sigma});
  CHECK(g.germ_index(up, 0) == g.germ_index(swap, 0));
  CHECK(theta_hat(g, g.germ_index(up, 0)) == std::pair<int, int>{1, 0});
}

TEST_CASE("arrow sets against naive recurrence") {
  GermGroupoid g = germ_groupoid(fixture_K());
  CheckReport r1 = check_aha(g, {0}, {1}, "K");
  CHECK(r1.pass);
  CHECK(!r1.notes.empty());  // the section image is a proper subset here
  CHECK(check_aha(g, {0, 1}, {0, 1}, "K").pass);
  CHECK(check_aha(g, {0}, {}, "K").pass);

  for (const PartialAction& a : {fixture_PZ2(), fixture_A4()}) {
    GermGroupoid gg = germ_groupoid(a);
    for (int mask = 0; mask < (1 << a.space().size()); ++mask) {
      IndexSet m;
      for (int p = 0; p < a.space().size(); ++p)
        if (mask & (1 << p)) m.push_back(p);
      CHECK(check_aha(gg, m, full_set(a.space().size()), "x").pass);
      CHECK(check_aha(gg, full_set(a.space().size()), m, "x").pass);
    }
  }
}

TEST_CASE("canonical action has the same orbits and invariant sets") {
  for (const PartialAction& a :
       {fixture_K(), fixture_PZ2(), fixture_A4(), fixture_z2_trivial()})
    CHECK(check_enoeno(germ_groupoid(a), 7, "x").pass);
}

TEST_CASE("arrows out of a point against pointwise recurrence classes") {
  GermGroupoid g = germ_groupoid(fixture_K());
  CHECK(check_bucuros(g, 0, {1}, "K").pass);
  CHECK(check_bucuros(g, 0, {0, 1}, "K").pass);
  CHECK(check_bucuros(g, 0, {}, "K").pass);
  GermGroupoid gp = germ_groupoid(fixture_PZ2());
  for (int sigma = 0; sigma < 2; ++sigma)
    for (const IndexSet& n :
         std::vector<IndexSet>{{}, {0}, {1}, {0, 1}})
      CHECK(check_bucuros(gp, sigma, n, "PZ2").pass);
}

TEST_CASE("germ closure inclusion, equality at a single source point") {
  GermGroupoid g = germ_groupoid(fixture_K());
  CheckReport eq = check_ohanesian(g, {0}, {1}, "K");
  CHECK(eq.pass);

  CheckReport strict = check_ohanesian(g, {0, 1}, {0}, "K");
  CHECK(strict.pass);
  CHECK(!strict.notes.empty());  // proper inclusion with a witness

  CHECK(check_ohanesian(g, {}, {0}, "K").pass);
  for (const PartialAction& a : {fixture_PZ2(), fixture_A4()}) {
    GermGroupoid gg = germ_groupoid(a);
    CHECK(check_ohanesian(gg, full_set(a.space().size()),
                          full_set(a.space().size()), "x")
              .pass);
  }
}

TEST_CASE("subset transfer maps agree") {
  CHECK(check_cuci(germ_groupoid(fixture_K()), 0, 7, "K").pass);
  CHECK(check_cuci(germ_groupoid(fixture_K()), 1, 7, "K").pass);
  CHECK(check_cuci(germ_groupoid(fixture_PZ2()), 0, 7, "PZ2").pass);
  CHECK(check_cuci(germ_groupoid(fixture_A4()), 2, 7, "A4").pass);
}

TEST_CASE("global class map") {
  GammaGlobal k = gamma_global(germ_groupoid(fixture_K()), "K");
  CHECK(k.report.pass);
  CHECK(k.onto);
  CHECK(k.congruence.size() == 1);

  GammaGlobal a4 = gamma_global(germ_groupoid(fixture_A4()), "A4");
  CHECK(a4.report.pass);
  CHECK(a4.onto);
  CHECK(a4.congruence.size() == 2);

  CHECK(gamma_global(germ_groupoid(fixture_PZ2()), "PZ2").onto);
}

TEST_CASE("group actions have singleton germs") {
  for (const PartialAction& a : {fixture_PZ2(), fixture_z2_trivial()}) {
    GermGroupoid g = germ_groupoid(a);
    for (int sigma = 0; sigma < a.space().size(); ++sigma)
      CHECK(g.tables[sigma].size() ==
            static_cast<int>(g.tables[sigma].applicable.size()));
  }
}

TEST_CASE("E-unitary germ equivalence is source equality plus global relation") {
  PartialAction a4 = fixture_A4();
  GermGroupoid g = germ_groupoid(a4);
  Congruence mg = min_group_congruence(a4.sg());
  for (int sigma = 0; sigma < a4.space().size(); ++sigma)
    for (int s : g.tables[sigma].applicable)
      for (int t : g.tables[sigma].applicable)
        CHECK((g.germ_index(s, sigma) == g.germ_index(t, sigma)) ==
              (mg.class_of[s] == mg.class_of[t]));
}

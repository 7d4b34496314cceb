#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidyn/expansion.hpp"
#include "semidyn/fixtures.hpp"
#include "semidyn/recurrence.hpp"

using namespace semidyn;

namespace {

NormalForm nf(IndexSet prefix, int anchor) { return NormalForm{prefix, anchor}; }

}  // namespace

TEST_CASE("expansion element counts") {
  CHECK(expansion(cyclic_group(1)).elements.size() == 1);
  CHECK(expansion(cyclic_group(2)).elements.size() == 3);
  CHECK(expansion(cyclic_group(3)).elements.size() == 8);

  // for a group of order n the count has a closed form
  for (int n = 1; n <= 4; ++n) {
    size_t expect = (n == 1) ? 1
                             : (1u << (n - 1)) +
                                   static_cast<size_t>(n - 1) * (1u << (n - 2));
    CHECK(expansion(cyclic_group(n)).elements.size() == expect);
  }

  auto ez = direct_product(semilattice_chain(2), cyclic_group(2));
  CHECK(expansion(ez).elements.size() == 6);
}

TEST_CASE("expansion of the two-element group lists the expected forms") {
  ExpansionSemigroup ex = expansion(cyclic_group(2));
  REQUIRE(ex.elements.size() == 3);
  CHECK(ex.index_of(nf({0}, 0)) >= 0);
  CHECK(ex.index_of(nf({0, 1}, 0)) >= 0);
  CHECK(ex.index_of(nf({0, 1}, 1)) >= 0);

  CHECK(ex.iota(1) == nf({0, 1}, 1));
  CHECK(ex.q(ex.index_of(nf({0, 1}, 0))) == 0);
}

TEST_CASE("normalize") {
  FiniteInverseSemigroup z2 = cyclic_group(2);
  CHECK(normalize(z2, {1, 1}) == nf({0, 1}, 0));
  CHECK(normalize(z2, {1}) == nf({0, 1}, 1));
  CHECK(normalize(z2, {0}) == nf({0}, 0));

  auto i2 = symmetric_inverse(2);
  for (int x = 0; x < i2.sg.size(); ++x) {
    NormalForm ix = normalize(i2.sg, {x});
    CHECK(ix.anchor == x);
    // regularity relation collapses back to the generator
    CHECK(normalize(i2.sg, {x, i2.sg.inv(x), x}) == ix);
  }
}

TEST_CASE("anchor projection undoes the embedding on a non-group base") {
  auto i2 = symmetric_inverse(2);
  ExpansionSemigroup ex = expansion(i2.sg, 7);
  CHECK(ex.elements.size() == 10);
  for (int x = 0; x < i2.sg.size(); ++x) CHECK(ex.q(ex.iota_of[x]) == x);
  CHECK_FALSE(is_e_unitary(ex.sg));  // the base is not E-unitary either
  CHECK(is_e_unitary(expansion(cyclic_group(2)).sg));
}

TEST_CASE("default cap rejects larger bases") {
  auto i2 = symmetric_inverse(2);
  CHECK_THROWS_WITH_AS(expansion(i2.sg), doctest::Contains("CapExceeded"),
                       Error);
}

TEST_CASE("oracle congruence class counts") {
  CHECK(oracle_congruence(cyclic_group(2), 6).class_count() == 3);
  CHECK(oracle_congruence(cyclic_group(1), 4).class_count() == 1);
  CHECK(oracle_congruence(cyclic_group(3), 8).class_count() == 8);

  CHECK(oracle_stable_count(cyclic_group(2), 5) == 3);
  CHECK(oracle_stable_count(cyclic_group(3), 7) == 8);
}

TEST_CASE("expansion of a four-element group passes the oracle gate") {
  ExpansionSemigroup ex = expansion(cyclic_group(4));
  CHECK(ex.elements.size() == 20);
}

TEST_CASE("expansion action of the partial two-element-group fixture") {
  PartialAction pz2 = fixture_PZ2();
  ExpansionSemigroup ex = expansion(pz2.sg());
  PartialAction act = expansion_action(ex, pz2);
  CHECK(act.genuine());

  int ie = ex.iota_of[0], ig = ex.iota_of[1];
  CHECK(act.theta(ie) == PartialBijection::identity_on(2, {0, 1}));
  CHECK(act.theta(ig) == PartialBijection::identity_on(2, {0}));
  int eps_g = ex.sg.mul(ig, ex.sg.inv(ig));
  CHECK(act.theta(eps_g) == PartialBijection::identity_on(2, {0}));

  // same invariant sets
  for (int mask = 0; mask < 4; ++mask) {
    IndexSet m;
    for (int p = 0; p < 2; ++p)
      if (mask & (1 << p)) m.push_back(p);
    CHECK(is_invariant(pz2, m) == is_invariant(act, m));
  }
}

TEST_CASE("expansion action of a global group action is total on generators") {
  PartialAction wz3 = wagner_preston_action(cyclic_group(3));
  ExpansionSemigroup ex = expansion(cyclic_group(3));
  PartialAction act = expansion_action(ex, wz3);
  for (int g = 0; g < 3; ++g)
    CHECK(act.theta(ex.iota_of[g]).domain().size() == 3);
}

TEST_CASE("recurrence transfer along the expansion") {
  PartialAction pz2 = fixture_PZ2();
  ExpansionSemigroup ex = expansion(pz2.sg());
  PartialAction act = expansion_action(ex, pz2);

  CHECK(check_fusirat(ex, pz2, act, {0}, {0}, "PZ2").pass);
  CHECK(check_fusirat(ex, pz2, act, {1}, {0}, "PZ2").pass);
  CHECK(check_fusirat(ex, pz2, act, {0, 1}, {}, "PZ2").pass);

  CheckReport pot = check_potrivire(ex, pz2, act, 0, {0}, "PZ2");
  CHECK(pot.pass);
  // two applicable classes at x, matching {e, g}
  CHECK(recurrence(act, 0, {0}).classes.size() == 2);
  CHECK(check_potrivire(ex, pz2, act, 1, {1}, "PZ2").pass);
  CHECK(recurrence(act, 1, {1}).classes.size() == 1);
}

TEST_CASE("recurrence transfer for a non-group base") {
  // the anchor projection is monotone but not constant along the order here:
  // the embedded chain identity sits above the embedded small idempotent, so
  // at z the two applicable embedded idempotents share one pointwise class,
  // matching the single pointwise class of their anchors downstairs
  PartialAction a4 = fixture_A4();
  ExpansionSemigroup ex = expansion(a4.sg());
  PartialAction act = expansion_action(ex, a4);

  int i_top = ex.iota_of[a4.sg().index_of_label("(c1,e)")];
  int i_low = ex.iota_of[a4.sg().index_of_label("(c0,e)")];
  CHECK(ex.sg.leq(i_low, i_top));
  CHECK(ex.q(i_low) != ex.q(i_top));
  CHECK(point_equiv(act, 2, i_low, i_top));

  CHECK(germ_classes(act, 2).size() == 1);
  CHECK(germ_classes(a4, 2).size() == 1);

  for (int sigma = 0; sigma < 3; ++sigma)
    for (int mask = 0; mask < 8; ++mask) {
      IndexSet n;
      for (int p = 0; p < 3; ++p)
        if (mask & (1 << p)) n.push_back(p);
      CHECK(check_potrivire(ex, a4, act, sigma, n, "A4").pass);
      CHECK(check_fusirat(ex, a4, act, n, full_set(3), "A4").pass);
    }
}

TEST_CASE("recurrence transfer for a global group action") {
  PartialAction wz2 = wagner_preston_action(cyclic_group(2));
  ExpansionSemigroup ex = expansion(cyclic_group(2));
  PartialAction act = expansion_action(ex, wz2);
  for (int sigma = 0; sigma < 2; ++sigma) {
    CheckReport rep = check_potrivire(ex, wz2, act, sigma, {0, 1}, "wpZ2");
    CHECK(rep.pass);
    CHECK(recurrence(act, sigma, {0, 1}).classes.size() == 2);  // |G|
  }
  CHECK(check_fusirat(ex, wz2, act, {0}, {1}, "wpZ2").pass);
}

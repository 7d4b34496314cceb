#include "semidyn/fixtures.hpp"

#include "semidyn/groupoid_action.hpp"

namespace semidyn {

PartialAction fixture_K() {
  SymmetricInverseMonoid i2 = symmetric_inverse(2);
  return validate_partial_action(i2.sg, i2.points, i2.maps);
}

PartialAction fixture_PZ2() {
  FiniteInverseSemigroup z2 = cyclic_group(2);
  FiniteSpace space = make_space({"x", "y"});
  std::vector<PartialBijection> theta(2);
  theta[0] = PartialBijection::identity_on(2, {0, 1});
  theta[1] = PartialBijection::identity_on(2, {0});
  return validate_partial_action(z2, space, theta);
}

PartialAction fixture_A4() {
  FiniteInverseSemigroup s = direct_product(semilattice_chain(2), cyclic_group(2));
  FiniteSpace space = make_space({"x", "y", "z"});
  std::vector<PartialBijection> theta(4);
  theta[s.index_of_label("(c1,e)")] = PartialBijection::identity_on(3, {0, 1, 2});
  theta[s.index_of_label("(c1,g)")] = PartialBijection::from_images({1, 0, -1});
  theta[s.index_of_label("(c0,e)")] = PartialBijection::identity_on(3, {2});
  theta[s.index_of_label("(c0,g)")] = PartialBijection::empty_map(3);
  return validate_partial_action(s, space, theta);
}

PartialAction fixture_z2_trivial() {
  FiniteInverseSemigroup z2 = cyclic_group(2);
  FiniteSpace space = make_space({"pt"});
  std::vector<PartialBijection> theta(2, PartialBijection::identity_on(1, {0}));
  return validate_partial_action(z2, space, theta);
}

namespace {

void add_action(InstanceBundle& b, const std::string& name,
                const std::string& sg_name, const std::string& space_name,
                PartialAction action) {
  if (!b.find_semigroup(sg_name))
    b.semigroups.emplace_back(sg_name, action.sg());
  if (!b.find_space(space_name)) b.spaces.emplace_back(space_name, action.space());
  b.actions.emplace_back(
      name, InstanceBundle::NamedAction{sg_name, space_name, std::move(action)});
}

void add_gaction(InstanceBundle& b, const std::string& name,
                 const std::string& gpd_name, const std::string& space_name,
                 GroupoidAction action) {
  if (!b.find_groupoid(gpd_name)) b.groupoids.emplace_back(gpd_name, action.gpd());
  if (!b.find_space(space_name)) b.spaces.emplace_back(space_name, action.space());
  b.groupoid_actions.emplace_back(
      name,
      InstanceBundle::NamedGroupoidAction{gpd_name, space_name, std::move(action)});
}

}  // namespace

InstanceBundle fixture_catalog() {
  InstanceBundle b;

  b.semigroups.emplace_back("Z1", cyclic_group(1));
  b.semigroups.emplace_back("Z3", cyclic_group(3));
  b.semigroups.emplace_back("E2", semilattice_chain(2));
  b.semigroups.emplace_back("I3", symmetric_inverse(3).sg);

  add_action(b, "K", "I2", "two_points", fixture_K());
  add_action(b, "PZ2", "Z2", "xy", fixture_PZ2());
  add_action(b, "A4", "E2xZ2", "xyz", fixture_A4());
  add_action(b, "Z2tr", "Z2", "one_point", fixture_z2_trivial());

  add_action(b, "wpZ2", "Z2", "wpZ2_pts",
             wagner_preston_action(cyclic_group(2)));
  add_action(b, "wpZ3", "Z3", "wpZ3_pts",
             wagner_preston_action(cyclic_group(3)));
  add_action(b, "wpE2xZ2", "E2xZ2", "wpE2xZ2_pts",
             wagner_preston_action(
                 direct_product(semilattice_chain(2), cyclic_group(2))));
  add_action(b, "wpI2", "I2", "wpI2_pts",
             wagner_preston_action(symmetric_inverse(2).sg));
  add_action(b, "wpI3", "I3", "wpI3_pts",
             wagner_preston_action(symmetric_inverse(3).sg));

  // one idempotent pure congruence, usable with the A4 fixture
  {
    const FiniteInverseSemigroup* s = b.find_semigroup("E2xZ2");
    Congruence mg = min_group_congruence(*s);
    b.congruences.emplace_back(
        "E2xZ2_min_group", InstanceBundle::NamedCongruence{"E2xZ2", mg});
  }

  FiniteGroupoid p2 = pair_groupoid(2);
  FiniteGroupoid p3 = pair_groupoid(3);
  FiniteGroupoid z2g = group_groupoid(cyclic_group(2));
  FiniteGroupoid z1g = group_groupoid(cyclic_group(1));
  add_gaction(b, "P2can", "P2", "P2_units", canonical_action(p2));
  add_gaction(b, "P2self", "P2", "P2_arrows", self_action(p2));
  add_gaction(b, "P3can", "P3", "P3_units", canonical_action(p3));
  add_gaction(b, "P3self", "P3", "P3_arrows", self_action(p3));
  add_gaction(b, "Z2gcan", "Z2g", "Z2g_unit", canonical_action(z2g));
  add_gaction(b, "Z2gself", "Z2g", "Z2g_arrows", self_action(z2g));
  add_gaction(b, "Z1gcan", "Z1g", "Z1g_unit", canonical_action(z1g));
  return b;
}

}  // namespace semidyn

#pragma once

#include "semidyn/groupoid.hpp"
#include "semidyn/space.hpp"

namespace semidyn {

/// Continuous action of a finite groupoid on a finite discrete space: a
/// surjective anchor from points to units and an action map defined exactly
/// on the pairs whose arrow source matches the anchor of the point.
class GroupoidAction {
 public:
  GroupoidAction() = default;

  const FiniteGroupoid& gpd() const { return gpd_; }
  const FiniteSpace& space() const { return space_; }

  int anchor(int point) const { return anchor_[point]; }

  /// xi acting on sigma; -1 when d(xi) != anchor(sigma)
  int apply(int xi, int sigma) const {
    return act_[static_cast<size_t>(xi) * space_.size() + sigma];
  }

  bool defined(int xi, int sigma) const { return apply(xi, sigma) >= 0; }

  bool operator==(const GroupoidAction& o) const {
    return gpd_ == o.gpd_ && space_ == o.space_ && anchor_ == o.anchor_ &&
           act_ == o.act_;
  }

 private:
  FiniteGroupoid gpd_;
  FiniteSpace space_;
  std::vector<int> anchor_;
  std::vector<int> act_;

  friend GroupoidAction validate_groupoid_action(
      FiniteGroupoid gpd, FiniteSpace space, const std::vector<int>& anchor,
      const std::vector<std::vector<int>>& act);
};

/// act[xi][sigma] must be -1 exactly off the matched pairs. Checks that
/// units act as identities and that composition is respected; the derived
/// identity anchor(xi . sigma) = r(xi) is re-checked as a consequence.
/// Errors: AnchorNotSurjective, AxiomViolation, BadTable.
GroupoidAction validate_groupoid_action(FiniteGroupoid gpd, FiniteSpace space,
                                        const std::vector<int>& anchor,
                                        const std::vector<std::vector<int>>& act);

/// Arrows moving some point of M into N. The containment in the
/// unit-restriction of the groupoid along the anchored endpoints is
/// asserted, with equality when the anchor is injective.
IndexSet tilde_recurrence(const GroupoidAction& ga, const IndexSet& m,
                          const IndexSet& n);

std::vector<IndexSet> orbits_gaction(const GroupoidAction& ga);
bool is_invariant_gaction(const GroupoidAction& ga, const IndexSet& m);

/// Canonical action on the unit space: an arrow sends its source to its
/// range. Points are the units.
GroupoidAction canonical_action(const FiniteGroupoid& g);

/// Left translation action on the arrow set, anchored by the range map.
GroupoidAction self_action(const FiniteGroupoid& g);

}  // namespace semidyn

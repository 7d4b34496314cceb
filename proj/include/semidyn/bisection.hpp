#pragma once

#include "semidyn/groupoid_action.hpp"
#include "semidyn/partial_action.hpp"
#include "semidyn/report.hpp"

namespace semidyn {

inline constexpr int kDefaultBisectionCap = 12;

/// All bisections of a finite groupoid (arrow sets on which source and range
/// are injective; every subset is open here), as an inverse semigroup under
/// the set product. Construction asserts closure, validates the table,
/// checks that the idempotents are exactly the unit subsets (2^|X| of them)
/// and that A#A and AA# are the source and range unit sets of A.
struct BisectionSemigroup {
  FiniteGroupoid gpd;
  std::vector<IndexSet> bisections;  // ordered by arrow bitmask
  FiniteInverseSemigroup sg;

  int index_of(const IndexSet& arrows) const;
};

BisectionSemigroup bisections(const FiniteGroupoid& g,
                              int cap = kDefaultBisectionCap);

/// Genuine action of the bisection semigroup attached to a groupoid action:
/// a bisection moves sigma by its unique arrow sourced at the anchor.
PartialAction bis_action(const BisectionSemigroup& bis,
                         const GroupoidAction& ga);

/// Orbits and invariant sets of the groupoid action coincide with those of
/// the attached bisection action (exhaustive over subsets up to 6 points,
/// sampled above).
CheckReport check_oneon(const BisectionSemigroup& bis, const GroupoidAction& ga,
                        const PartialAction& attached, uint64_t seed,
                        const std::string& instance_id);

/// At a point sigma: two applicable bisections agree at sigma iff they are
/// pointwise equivalent, the induced class map bijects the pointwise classes
/// onto the arrows sourced at the anchor, and it carries the pointwise
/// recurrence classes onto the arrow recurrence set.
CheckReport check_vertij(const BisectionSemigroup& bis,
                         const GroupoidAction& ga,
                         const PartialAction& attached, int sigma,
                         const IndexSet& n, const std::string& instance_id);

/// Bisections meeting an arrow set.
IndexSet meeting_bisections(const BisectionSemigroup& bis, const IndexSet& e);

/// The recurrent bisections are exactly those meeting the arrow recurrence
/// set; and on subsets of the arrows sourced at one anchor, taking meeting
/// bisections agrees with pulling back along the evaluation map (exhaustive
/// when that arrow fiber has at most 12 arrows, 4096 seeded samples above).
CheckReport check_onegsion(const BisectionSemigroup& bis,
                           const GroupoidAction& ga,
                           const PartialAction& attached, int sigma,
                           const IndexSet& m, const IndexSet& n, uint64_t seed,
                           const std::string& instance_id);

}  // namespace semidyn

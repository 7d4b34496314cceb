#pragma once

#include "semidyn/partial_action.hpp"
#include "semidyn/recurrence.hpp"
#include "semidyn/report.hpp"

namespace semidyn {

/// Partial action of a quotient semigroup induced along an idempotent pure
/// congruence: a class acts on the union of the domains of its members, by
/// whichever member is defined there. Well-definedness is verified, not
/// trusted (WellDefinednessFailure carries a witness).
struct InducedAction {
  Congruence congruence;
  QuotientResult quot;   // quotient semigroup and projection
  PartialAction action;  // of the quotient, on the same space
};

InducedAction induced_action(const PartialAction& base, const Congruence& c);

/// The base and induced actions share orbits and invariant sets, the
/// projection maps applicable sets onto applicable sets and naive recurrence
/// sets onto naive recurrence sets, and the induced class map is a
/// well-defined surjection carrying pointwise recurrence classes onto
/// pointwise recurrence classes.
CheckReport check_gramada(const PartialAction& base, const InducedAction& ind,
                          int sigma, const IndexSet& n,
                          const std::string& instance_id);

/// E-unitary case, quotient by the minimum group congruence (a group): the
/// class map is a bijection, pointwise equivalence on the quotient is
/// equality, and pointwise recurrence class counts agree exactly, over a
/// deterministic battery of target sets (exhaustive when the space has at
/// most 6 points, all singletons plus the full space plus one seeded random
/// subset per size otherwise).
CheckReport check_hazard(const PartialAction& base, uint64_t seed,
                         const std::string& instance_id);

}  // namespace semidyn

#pragma once

#include "semidyn/partial_action.hpp"
#include "semidyn/report.hpp"

namespace semidyn {

/// Elements whose map sends some point of M into N. Upward closure in the
/// natural order is asserted, and for M = N = {sigma} closure under products
/// and inverses (an inverse subsemigroup) is asserted.
IndexSet naive_recurrence(const PartialAction& a, const IndexSet& m,
                          const IndexSet& n);

/// Classes (at sigma) of the elements recurrent from sigma into N: the
/// redundancy-free recurrence set.
struct PointRecurrence {
  GermClassTable germs;
  IndexSet classes;  // class ids within germs
};

PointRecurrence recurrence(const PartialAction& a, int sigma, const IndexSet& n);

/// Classes of the naive set under the global common-lower-bound congruence.
/// For an E-unitary semigroup this is asserted to match the union over
/// sigma in M of the pointwise recurrence classes, via the class map.
struct SetRecurrence {
  Congruence congruence;
  IndexSet classes;  // congruence class ids
};

SetRecurrence set_recurrence(const PartialAction& a, const IndexSet& m,
                             const IndexSet& n);

/// For an E-unitary semigroup the pointwise equivalence on applicable
/// elements agrees with the global congruence (both directions); the
/// pointwise-implies-global direction holds for every action and is checked
/// by check_point_equiv_implies_global.
CheckReport check_lemma_e_unitary(const PartialAction& a,
                                  const std::string& instance_id);

CheckReport check_point_equiv_implies_global(const PartialAction& a,
                                             const std::string& instance_id);

}  // namespace semidyn

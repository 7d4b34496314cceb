#pragma once

#include <vector>

#include "semidyn/inverse_semigroup.hpp"
#include "semidyn/partial_bijection.hpp"
#include "semidyn/space.hpp"

namespace semidyn {

/// Partial action of a finite inverse semigroup on a finite discrete space:
/// one partial bijection per element, subject to
///   (i)   theta[s#] = theta[s]^-1
///   (ii)  theta[s] o theta[t] restricts theta[st]
///   (iii) s <= t implies theta[s] restricts theta[t]
///   (iv)  the idempotent images cover the space.
/// "genuine" is derived: composition in (ii) is an equality for all pairs.
class PartialAction {
 public:
  PartialAction() = default;

  const FiniteInverseSemigroup& sg() const { return sg_; }
  const FiniteSpace& space() const { return space_; }
  const PartialBijection& theta(int s) const { return theta_[s]; }
  bool genuine() const { return genuine_; }

  bool operator==(const PartialAction& o) const {
    return sg_ == o.sg_ && space_ == o.space_ && theta_ == o.theta_;
  }

 private:
  FiniteInverseSemigroup sg_;
  FiniteSpace space_;
  std::vector<PartialBijection> theta_;
  bool genuine_ = false;

  friend PartialAction validate_partial_action(FiniteInverseSemigroup sg,
                                               FiniteSpace space,
                                               std::vector<PartialBijection> theta);
};

/// Errors: AxiomViolation (with axiom id and witness), NotNondegenerate
/// (uncovered point). Also asserts the derived facts: idempotents act as
/// partial identities, dom theta_s = im theta_s#, and
/// im theta_t ∩ theta_t(dom theta_s) ⊆ im theta_ts.
PartialAction validate_partial_action(FiniteInverseSemigroup sg,
                                      FiniteSpace space,
                                      std::vector<PartialBijection> theta);

/// Elements applicable to sigma, i.e. with sigma in their domain. Closure
/// under composition (t at sigma, s at theta_t(sigma) => st at sigma) is
/// asserted.
IndexSet applicable(const PartialAction& a, int sigma);

/// Orbit of sigma under the reachability relation; verified to be an
/// equivalence relation on the instance.
IndexSet orbit(const PartialAction& a, int sigma);
std::vector<IndexSet> orbits(const PartialAction& a);

/// Union-of-orbits test; also checked against the direct predicate
/// theta_s(M ∩ dom) ⊆ M for all s.
bool is_invariant(const PartialAction& a, const IndexSet& m);

/// Same predicate without the orbit cross-check; used inside sampled
/// batteries where is_invariant would re-derive orbits on every call.
bool is_invariant_direct(const PartialAction& a, const IndexSet& m);

/// True iff s and t admit a common lower bound applicable to sigma. Both s
/// and t must be applicable to sigma (error NotApplicable). When true,
/// theta_s(sigma) = theta_t(sigma) is asserted.
bool point_equiv(const PartialAction& a, int sigma, int s, int t);

/// Partition of applicable(a, sigma) by point_equiv; classes are keyed by
/// minimal representative. Members of one class agree at sigma (asserted);
/// the converse is not assumed.
struct GermClassTable {
  int base_point = -1;
  IndexSet applicable;
  std::vector<int> class_of_element;  // size n, -1 when not applicable
  std::vector<IndexSet> classes;

  int size() const { return static_cast<int>(classes.size()); }
  int class_of(int s) const { return class_of_element[s]; }
};

GermClassTable germ_classes(const PartialAction& a, int sigma);

}  // namespace semidyn

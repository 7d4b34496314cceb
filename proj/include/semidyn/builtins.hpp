#pragma once

#include <string>

#include "semidyn/inverse_semigroup.hpp"
#include "semidyn/partial_action.hpp"
#include "semidyn/partial_bijection.hpp"

namespace semidyn {

/// Symmetric inverse monoid on npoints points: all partial bijections under
/// composition, together with the map each element represents. Point labels
/// are "1".."n"; element labels spell the image row, '-' for undefined
/// (e.g. on 2 points: "--", "1-", "-2", "12", "21", "2-", "-1").
struct SymmetricInverseMonoid {
  FiniteInverseSemigroup sg;
  std::vector<PartialBijection> maps;
  FiniteSpace points;
};

SymmetricInverseMonoid symmetric_inverse(int npoints, int cap = 4);

FiniteInverseSemigroup cyclic_group(int n);

/// Chain semilattice c0 < c1 < ... < c(n-1), product = minimum.
FiniteInverseSemigroup semilattice_chain(int n);

FiniteInverseSemigroup direct_product(const FiniteInverseSemigroup& s,
                                      const FiniteInverseSemigroup& t);

/// Family dispatcher for the generator CLI:
/// symmetric_inverse | cyclic_group | semilattice_chain.
FiniteInverseSemigroup builtin(const std::string& family, int n);

/// Left regular representation by partial bijections on the element set:
/// theta_s(x) = sx on {x : s#sx = x}. Always validates and is genuine.
PartialAction wagner_preston_action(const FiniteInverseSemigroup& s);

}  // namespace semidyn

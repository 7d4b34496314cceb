#pragma once

#include "semidyn/builtins.hpp"
#include "semidyn/instance_format.hpp"
#include "semidyn/partial_action.hpp"

namespace semidyn {

/// Canonical action of the symmetric inverse monoid on 2 points: every
/// element acts as the partial bijection it is. Genuine.
PartialAction fixture_K();

/// Z2 = {e,g} acting on {x,y}: e as the identity, g as the identity on {x}
/// only. Partial, not genuine.
PartialAction fixture_PZ2();

/// Chain2 x Z2 acting on {x,y,z}: (c1,e) identity everywhere, (c1,g) swaps
/// x and y, (c0,e) identity on {z}, (c0,g) empty. Partial; E-unitary base.
PartialAction fixture_A4();

/// Z2 acting trivially on one point: both elements act identically but are
/// not pointwise equivalent (no common lower bound in a group). Witnesses
/// that pointwise equivalence is strictly finer than equal values.
PartialAction fixture_z2_trivial();

/// The shipped instance catalog: semigroups Z1, Z2, Z3, E2, E2xZ2, I2, I3;
/// actions K, PZ2, A4, Z2tr and the left regular actions of Z2, Z3, E2xZ2,
/// I2, I3; pair groupoids P2, P3 and one-unit group groupoids, each with
/// canonical and self actions; one sample congruence. Everything validates
/// at load time by construction.
InstanceBundle fixture_catalog();

}  // namespace semidyn

#pragma once

#include <string>

#include "semidyn/germ_groupoid.hpp"
#include "semidyn/groupoid.hpp"

namespace semidyn {

/// GraphViz rendering: one node per unit, one directed edge per non-unit
/// arrow from its source to its range, labeled by the arrow. Node and edge
/// order follow the arrow indices, so output is stable.
std::string groupoid_dot(const FiniteGroupoid& g, const std::string& name);

/// Germ groupoid rendering over the points of the space: one edge per germ,
/// labeled by its minimal representative element.
std::string germ_dot(const GermGroupoid& g, const std::string& name);

}  // namespace semidyn

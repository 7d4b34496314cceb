#pragma once

#include <string>
#include <vector>

#include "semidyn/instance_format.hpp"
#include "semidyn/report.hpp"

namespace semidyn {

/// Runs one family of checks over every instance in the bundle it applies
/// to. Suites: axioms, recurrence, expansion, quotient, germ, gaction, all.
/// One report per (check, instance, parameter tuple); deterministic given
/// the bundle and the seed.
std::vector<CheckReport> run_suite(const InstanceBundle& bundle,
                                   const std::string& suite, uint64_t seed);

bool known_suite(const std::string& suite);

}  // namespace semidyn

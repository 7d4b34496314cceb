#pragma once

#include "semidyn/partial_action.hpp"

namespace semidyn {

/// Randomly restricted copy of a genuine action: idempotents keep their full
/// domains, each inverse-pair of non-idempotents keeps its domain whole or
/// drops points with the given percentage, domains of inverses stay mirrored,
/// and self-inverse elements shrink to a symmetric part. Candidates are
/// validated and resampled on failure; shrink_percent = 0 returns the input.
/// Errors: GenerationExhausted after max_retries failed candidates.
PartialAction generate_restricted_action(const PartialAction& global,
                                         uint64_t seed, int shrink_percent = 50,
                                         int max_retries = 200);

}  // namespace semidyn

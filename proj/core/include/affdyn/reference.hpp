#pragma once

#include <cstddef>
#include <stdexcept>

#include "affdyn/orbits.hpp"

namespace affdyn::reference {

// Plain brute-force answers used only to validate the decision procedure.
// Nothing in this namespace is called by orbits; keeping the second route
// separate is what makes the agreement checks meaningful.

enum class OrbitOutcome {
    periodic,
    finite_not_permuted,
    exceeds_cap,
};

// A coordinate grew past the configured bit guard; the instance is too
// large for brute force.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumerates all words of the monoid breadth-first with memoization of the
// points reached. Returns exceeds_cap as soon as more than `cap` distinct
// points exist; otherwise the closure is complete and each generator is
// tested for being a bijection of it. coordinate_bit_guard = 0 disables the
// size guard; otherwise GuardExceeded is thrown when any numerator or
// denominator passes that many bits.
OrbitOutcome orbit_verdict_by_words(const AffineSystem& sys, const Point& start,
                                    std::size_t cap, std::size_t coordinate_bit_guard = 0);

}  // namespace affdyn::reference

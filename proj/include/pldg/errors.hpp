#pragma once

#include <stdexcept>
#include <string>

namespace pldg {

// Input violates the general-position assumption (three collinear or
// four cocircular points).
class GeneralPositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An instance sits too close to a decision threshold (near-tie in a
// nearest-point query, point near a carrier circle) to be resolved
// reliably. Callers regenerate the instance.
class DegenerateInstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two circles with the same center and radius: infinitely many
// boundary intersections.
class CoincidentCirclesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructed empty-disk witness failed its own postcondition.
// This signals a geometry bug, not a legal input state.
class WitnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The instance generator exhausted its retry budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pldg

#pragma once

#include <stdexcept>
#include <string>

namespace spin7 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exactness guard failed: a division that must be exact did not divide,
// a parity check failed, or computed values contradict each other.
// The CLI maps this to exit code 2.
struct InconsistencyError : Error {
    using Error::Error;
};

// A-genus outside the admissible range for a simply-connected manifold.
struct ClassificationError : InconsistencyError {
    using InconsistencyError::InconsistencyError;
};

// Degree preconditions of exterior-algebra operations.
struct DegreeError : Error {
    using Error::Error;
};

// A pipeline operation received a block at the wrong stage.
struct StageError : Error {
    using Error::Error;
};

// Point counting is only supported on strata with at most two variables.
struct UnsupportedStratumError : Error {
    using Error::Error;
};

// A partial derivative of the defining polynomial would have negative degree,
// so the Jacobian-ring route does not apply.
struct DegeneratePartialError : Error {
    using Error::Error;
};

// A series coefficient beyond the truncation order was requested.
struct SeriesRangeError : Error {
    using Error::Error;
};

// Bad scenario file or malformed input values. The CLI maps this to exit code 1.
struct ParseError : Error {
    using Error::Error;
};

} // namespace spin7

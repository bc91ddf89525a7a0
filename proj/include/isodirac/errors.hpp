#pragma once

#include <stdexcept>
#include <string>

namespace isodirac {

// Bad user/config input: wrong parameter ranges, malformed options, indices
// outside the bound-state range. CLI exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : UsageError {
    using UsageError::UsageError;
};

struct IndexError : UsageError {
    using UsageError::UsageError;
};

// Numerical failure: non-convergence or an evaluation at a genuinely singular
// point. CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureError : NumericalError {
    using NumericalError::NumericalError;
};

struct ConvergenceError : NumericalError {
    ConvergenceError(const std::string& what, double moved_by, double limit)
        : NumericalError(what), moved(moved_by), tolerance(limit) {}
    double moved;      // how far the worst level drifted between resolutions
    double tolerance;  // the consistency bound it violated (relative)
};

struct SingularityError : NumericalError {
    SingularityError(const std::string& what, double where)
        : NumericalError(what), location(where) {}
    double location;
};

}  // namespace isodirac

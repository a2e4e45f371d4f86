#pragma once

#include <stdexcept>
#include <string>

namespace tfrd {

/// Base class for runtime numerical failures (coefficient sign violations,
/// iterative-solver breakdown). Precondition violations on API arguments
/// throw std::invalid_argument instead.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sampled coefficient violated its sign requirement, or problem data is
/// inconsistent (e.g. initial condition incompatible with boundary data).
class coefficient_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

/// An iterative solver failed to reach its tolerance within the iteration
/// budget. The message reports the achieved residual.
class convergence_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

} // namespace tfrd

#pragma once

#include <stdexcept>
#include <string>

namespace ennea {

// A block was requested that would share two or more points with an
// existing block (four collinear points are outside the universe).
struct SharedPairError : std::runtime_error {
    explicit SharedPairError(const std::string& what) : std::runtime_error(what) {}
};

// A structure that cannot be relabeled onto the standard two-block frame
// was passed to an operation that requires the frame.
struct FrameMissingError : std::runtime_error {
    explicit FrameMissingError(const std::string& what) : std::runtime_error(what) {}
};

// A univariate polynomial whose irreducible factors all have degree >= 3:
// no root is reachable in Q or a quadratic extension.
struct NoSolvableRootError : std::runtime_error {
    explicit NoSolvableRootError(const std::string& what) : std::runtime_error(what) {}
};

// A search exhausted its budget without either finding a witness or
// proving that none exists.  Always reported, never silently swallowed.
struct InconclusiveError : std::runtime_error {
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

// Point data that violates the preconditions of a rank/Hilbert computation
// (coincident points, nine points on a conic, ...).
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed persistent data (catalog files, witness strings, CLI input).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ennea

#ifndef SYNCMAP_ERRORS_HPP
#define SYNCMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syncmap {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Contract violation: invalid parameters, non-finite input, bad knobs.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A point was passed to an operation that requires membership in a region.
struct OutOfRegionError : DomainError {
    explicit OutOfRegionError(const std::string& what) : DomainError(what) {}
};

/// The requested region is not supported by this operation.
struct UnsupportedRegionError : DomainError {
    explicit UnsupportedRegionError(const std::string& what) : DomainError(what) {}
};

/// An orbit-based quantity is undefined for this initial condition.
struct DegenerateOrbitError : DomainError {
    explicit DegenerateOrbitError(const std::string& what) : DomainError(what) {}
};

/// An iterative solve failed to reach its tolerance within the iteration cap.
struct NonConvergenceError : Error {
    explicit NonConvergenceError(const std::string& what) : Error(what) {}
};

/// An orbit expected to converge did not.
struct NotConvergingError : NonConvergenceError {
    explicit NotConvergingError(const std::string& what) : NonConvergenceError(what) {}
};

/// A root bracket could not be established. Signals an implementation bug.
struct BracketFailureError : Error {
    explicit BracketFailureError(const std::string& what) : Error(what) {}
};

} // namespace syncmap

#endif

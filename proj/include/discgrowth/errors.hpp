#ifndef DISCGROWTH_ERRORS_HPP
#define DISCGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace discgrowth {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument or violated domain invariant (point outside the disc,
// bad family parameters, zero at the origin, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A statistic was queried beyond the realized range of a generator-backed
// sequence; the finite realization would silently undercount.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// Truncation tail bound exceeds the requested tolerance; the caller must
// extend the realization.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& what) : Error(what) {}
};

// Adaptive quadrature could not meet its tolerance (depth cap reached) or
// was asked to integrate across an exact zero of the integrand's argument.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

// The evaluation circle passes exactly through a stored zero.  The caller
// perturbs r and retries.
class SingularConfigError : public QuadratureError {
public:
    explicit SingularConfigError(const std::string& what) : QuadratureError(what) {}
};

// Regression/extrapolation failure: too few samples, degenerate window,
// or an inconsistent (non-monotone) ladder.
class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error(what) {}
};

} // namespace discgrowth

#endif

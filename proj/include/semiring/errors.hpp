#pragma once

#include <stdexcept>
#include <string>

namespace semiring {

// Root of the library's error hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element was used with a semiring it does not belong to.
struct MismatchError : Error { using Error::Error; };

// Division or divisibility query against the zero element.
struct DivisionByZero : Error { using Error::Error; };

// gcd of (0, 0) requested.
struct ZeroInputs : Error { using Error::Error; };

// A set failed the closure requirements of a multiplicatively closed set.
struct NotMCSet : Error { using Error::Error; };

// Enumeration order above the configured cap.
struct CapExceeded : Error { using Error::Error; };

// Operands live over different base semirings.
struct BaseMismatch : Error { using Error::Error; };

// Factorization requested for zero or a unit.
struct NotFactorable : Error { using Error::Error; };

// Strict-descent guard tripped: the input family does not satisfy ACCP.
struct DepthExceeded : Error { using Error::Error; };

// No greatest common divisor exists at this input.
struct NoGcd : Error { using Error::Error; };

// Every input element is zero.
struct AllZero : Error { using Error::Error; };

// The family has no registered spectrum procedure.
struct UnregisteredSpectrum : Error { using Error::Error; };

// The family is not registered as a principal ideal semidomain.
struct NotPISD : Error { using Error::Error; };

// Exact minimization over an infinite carrier with no registered minimizer.
struct UnboundedSearch : Error { using Error::Error; };

// A family's division procedure failed its own postcondition.
struct NoDecomposition : Error { using Error::Error; };

// A remainder chain failed to strictly descend.
struct NonTermination : Error { using Error::Error; };

// Localization collapsed 0 and 1 into a single class.
struct ZeroSemiring : Error { using Error::Error; };

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

}  // namespace semiring

#ifndef RSCONN_ERRORS_HPP
#define RSCONN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsconn {

// Base class for every library error.  Subclasses mark the obstruction so the
// CLI can map them to distinct exit codes; messages name the obstruction in
// mathematical terms (offending entry, eigenvalue pair, polynomial factor).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: JSON schema violations, bad rational/monomial syntax,
// duplicate keys, degree overflow.  Messages carry a path-style location.
struct ParseError : Error {
    using Error::Error;
};

// The system has a pole at x = 0 beyond first order (some matrix entry has
// negative valuation), so residue/exponent computations do not apply.
struct NotLogarithmicError : Error {
    using Error::Error;
};

// Two exponents differ by a nonzero integer; the Euler recursion hits a
// singular operator at that integer.
struct ResonanceError : Error {
    using Error::Error;
};

// The characteristic polynomial of the residue does not split over Q; the
// exact engine only handles rational exponents.
struct UnsupportedExponentFieldError : Error {
    using Error::Error;
};

// Division by a non-unit: zero rational, local element with vanishing
// constant term, series whose leading coefficient is not a unit, or a
// singular matrix.
struct NonInvertibleError : Error {
    using Error::Error;
};

// An operation was called outside its stated precondition (mismatched
// coefficient algebras, eigenvalue not present, size mismatch, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Internal invariant violation or exhausted step budget.
struct InternalError : Error {
    using Error::Error;
};

} // namespace rsconn

#endif

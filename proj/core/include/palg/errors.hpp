#ifndef PALG_ERRORS_HPP
#define PALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palg {

/// Base class for all library errors. Mathematical check failures are not
/// errors; they are reported through CheckReport values. Exceptions signal
/// malformed input or misuse of an operation's contract.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error or unknown identifier while parsing an expression.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Operands live in different rings (variables, coefficient field or
/// monomial order differ).
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// Division by an element that is zero modulo the active ideal context.
class ZeroDivisorError : public Error {
public:
    using Error::Error;
};

/// A fraction-field operation was requested on an algebra whose
/// claimed_domain flag is not set.
class NonDomainError : public Error {
public:
    using Error::Error;
};

/// Truncated-series operands have different variables or truncation orders,
/// or a composition argument has a nonzero constant term.
class SeriesError : public Error {
public:
    using Error::Error;
};

/// The residue polynomial handed to generator adjustment is not
/// separable-minimal (P'(x̄) = 0), which cannot happen for a genuine
/// minimal polynomial in characteristic zero.
class InseparableInputError : public Error {
public:
    using Error::Error;
};

} // namespace palg

#endif

#ifndef PALG_RATIONAL_HPP
#define PALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace palg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and positive
/// denominator, always stored in lowest terms (gcd 1, zero is 0/1). The
/// backing type maintains those invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return numerator(r); }
inline BigInt rational_den(const Rational& r) { return denominator(r); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline int sign_of(const Rational& r) { return r.sign(); }

/// r^e for a non-negative integer exponent.
Rational rational_pow(const Rational& r, unsigned e);

/// Renders as "n" or "n/d"; matches the literal syntax accepted by the
/// expression parser in coefficient positions.
std::string to_string(const Rational& r);

} // namespace palg

#endif

#ifndef PALG_COEFFICIENT_HPP
#define PALG_COEFFICIENT_HPP

#include "palg/rational.hpp"

#include <string>
#include <vector>

namespace palg {

/// Element of the coefficient field, stored as the residue of a univariate
/// polynomial in the field generator: c[0] + c[1]*g + c[2]*g^2 + ...
/// Canonical form has no trailing zero entries; the zero element is the
/// empty vector. Over the plain rationals the vector has at most one entry.
struct Coeff {
    std::vector<Rational> c;

    bool is_zero() const { return c.empty(); }
    bool is_rational() const { return c.size() <= 1; }
    Rational rational_part() const { return c.empty() ? Rational(0) : c[0]; }

    bool operator==(const Coeff& o) const { return c == o.c; }
};

/// The base field k of the computation: either Q or a number field
/// Q(g)/(m(g)) presented by a monic minimal polynomial. All coefficient
/// arithmetic is exact; number-field elements are reduced modulo the
/// minimal polynomial after every multiplication.
class CoefficientField {
public:
    enum class Kind { Rationals, NumberField };

    /// The rationals.
    CoefficientField();

    /// Number field with the given generator name and monic minimal
    /// polynomial m(g) = g^d + minpoly[d-1]*g^(d-1) + ... + minpoly[0],
    /// supplied as the full coefficient list including the leading 1.
    CoefficientField(std::string generator_name, std::vector<Rational> minimal_polynomial);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    const std::string& generator_name() const { return generator_; }
    /// Full coefficient list of the minimal polynomial, constant term first.
    const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }
    /// Degree of the extension (1 for the rationals).
    std::size_t degree() const;

    Coeff zero() const { return Coeff{}; }
    Coeff one() const { return from_rational(1); }
    Coeff from_rational(const Rational& r) const;
    /// The field generator as an element; invalid over the plain rationals.
    Coeff generator() const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff mul_rational(const Coeff& a, const Rational& r) const;
    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// Q[g]; throws ZeroDivisorError on zero.
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const;
    Coeff pow(const Coeff& a, unsigned e) const;

    /// Sign used when joining printed terms: the sign of the highest-degree
    /// rational coefficient (sign of the value itself over Q).
    int print_sign(const Coeff& a) const;

    /// Univariate-polynomial rendering in the generator, e.g. "2*a^2 + a/3 - 1".
    std::string to_string(const Coeff& a) const;

    bool operator==(const CoefficientField& o) const;

private:
    Coeff reduce(std::vector<Rational> raw) const;

    Kind kind_;
    std::string generator_;
    std::vector<Rational> minpoly_; // constant term first; monic
};

} // namespace palg

#endif

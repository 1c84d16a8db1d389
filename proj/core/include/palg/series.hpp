#ifndef PALG_SERIES_HPP
#define PALG_SERIES_HPP

#include "palg/coefficient.hpp"
#include "palg/polynomial.hpp"

#include <string>
#include <vector>

namespace palg {

/// One-variable truncated power series: coefficients of u^0 .. u^(N-1) over
/// the coefficient field, all arithmetic performed exactly modulo u^N.
class TruncatedSeries {
public:
    TruncatedSeries(CoefficientField field, std::string variable, unsigned order);

    static TruncatedSeries zero(const CoefficientField& f, const std::string& var, unsigned order);
    static TruncatedSeries constant(const CoefficientField& f, const std::string& var,
                                    unsigned order, const Coeff& value);
    /// The series "u".
    static TruncatedSeries uniformizer(const CoefficientField& f, const std::string& var,
                                       unsigned order);
    /// Truncates a univariate polynomial in the series variable. The
    /// polynomial's ring must have exactly one variable with a matching name.
    static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);

    const CoefficientField& field() const { return field_; }
    const std::string& variable() const { return var_; }
    unsigned order() const { return order_; }
    const std::vector<Coeff>& coefficients() const { return c_; }
    const Coeff& coefficient(unsigned k) const { return c_.at(k); }
    void set_coefficient(unsigned k, Coeff v);

    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scale(const Coeff& k) const;
    TruncatedSeries scale(const Rational& k) const;
    TruncatedSeries pow(unsigned e) const;

    /// Substitutes o for the variable; o must have zero constant term.
    TruncatedSeries compose(const TruncatedSeries& o) const;

    /// d/du, term by term.
    TruncatedSeries derivative() const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    /// Ascending-power rendering, e.g. "alpha + 2*pi + pi^3".
    std::string to_string() const;

private:
    void check_compatible(const TruncatedSeries& o) const;

    CoefficientField field_;
    std::string var_;
    unsigned order_;
    std::vector<Coeff> c_; // size == order_
};

std::string to_string(const TruncatedSeries& s);

} // namespace palg

#endif

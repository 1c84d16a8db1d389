#ifndef PALG_POLYNOMIAL_HPP
#define PALG_POLYNOMIAL_HPP

#include "palg/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace palg {

/// Exact multivariate polynomial in canonical form: terms sorted in strictly
/// decreasing monomial order, no zero coefficients stored. Two equal
/// mathematical values always have identical representations.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Coeff coeff;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring);
    static Polynomial one(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& value);
    static Polynomial constant(RingPtr ring, const Coeff& value);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, Coeff c);
    /// Builds canonical form from an arbitrary term list (merges duplicates,
    /// drops zeros, sorts).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t degree() const; // 0 for the zero polynomial

    const Term& leading_term() const; // requires non-zero

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned e) const;

    Polynomial scale(const Coeff& c) const;
    Polynomial scale(const Rational& r) const;
    /// Multiplies by c * x^m.
    Polynomial mul_term(const Monomial& m, const Coeff& c) const;

    /// Formal partial derivative with respect to the given variable.
    Polynomial derivative(std::size_t var_index) const;

    /// Evaluates the polynomial at images of the variables, which live in
    /// a (possibly different) ring over the same coefficient field.
    Polynomial substitute(const RingPtr& target,
                          const std::vector<Polynomial>& images) const;

    /// Same polynomial re-sorted under another monomial order.
    Polynomial with_order(MonomialOrder order) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Renders in the expression grammar; the output re-parses to the same
    /// canonical value.
    std::string to_string() const;

private:
    void normalize(); // sort + merge + drop zeros

    RingPtr ring_;
    std::vector<Term> terms_; // strictly decreasing monomials
};

/// Shared entry point for the arity checks of binary operations.
void require_same_ring(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p);

} // namespace palg

#endif

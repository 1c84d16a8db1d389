#include "palg/coefficient.hpp"

#include "palg/errors.hpp"

#include <algorithm>
#include <cassert>

namespace palg {

namespace {

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Dense univariate helpers over Q, constant term first.
std::vector<Rational> uni_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

std::vector<Rational> uni_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::vector<Rational> uni_scale(std::vector<Rational> a, const Rational& k) {
    if (k.is_zero()) return {};
    for (auto& x : a) x *= k;
    return a;
}

// Remainder and quotient of dense division; divisor need not be monic.
void uni_divmod(std::vector<Rational> num, const std::vector<Rational>& den,
                std::vector<Rational>& quot, std::vector<Rational>& rem) {
    assert(!den.empty());
    quot.assign(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] += c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
        if (num.size() < den.size()) break;
    }
    trim(quot);
    rem = std::move(num);
}

} // namespace

CoefficientField::CoefficientField() : kind_(Kind::Rationals) {}

CoefficientField::CoefficientField(std::string generator_name,
                                   std::vector<Rational> minimal_polynomial)
    : kind_(Kind::NumberField),
      generator_(std::move(generator_name)),
      minpoly_(std::move(minimal_polynomial)) {
    trim(minpoly_);
    if (minpoly_.size() < 2)
        throw Error("number-field minimal polynomial must have degree >= 1");
    if (minpoly_.back() != Rational(1))
        throw Error("number-field minimal polynomial must be monic");
    if (generator_.empty())
        throw Error("number-field generator needs a name");
}

std::size_t CoefficientField::degree() const {
    return kind_ == Kind::Rationals ? 1 : minpoly_.size() - 1;
}

Coeff CoefficientField::from_rational(const Rational& r) const {
    if (r.is_zero()) return {};
    return Coeff{{r}};
}

Coeff CoefficientField::generator() const {
    if (kind_ == Kind::Rationals)
        throw Error("the rationals have no field generator");
    if (degree() == 1) {
        // Degree-one extension: the generator is the rational root itself.
        return from_rational(-minpoly_[0]);
    }
    return Coeff{{Rational(0), Rational(1)}};
}

Coeff CoefficientField::reduce(std::vector<Rational> raw) const {
    trim(raw);
    if (kind_ == Kind::NumberField && raw.size() >= minpoly_.size()) {
        std::vector<Rational> q, r;
        uni_divmod(std::move(raw), minpoly_, q, r);
        raw = std::move(r);
    }
    if (kind_ == Kind::Rationals && raw.size() > 1)
        throw Error("rational coefficient with generator terms");
    return Coeff{std::move(raw)};
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
    std::vector<Rational> out = a.c;
    if (out.size() < b.c.size()) out.resize(b.c.size(), Rational(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    trim(out);
    return Coeff{std::move(out)};
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
    return Coeff{uni_sub(a.c, b.c)};
}

Coeff CoefficientField::neg(const Coeff& a) const {
    return Coeff{uni_scale(a.c, Rational(-1))};
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
    return reduce(uni_mul(a.c, b.c));
}

Coeff CoefficientField::mul_rational(const Coeff& a, const Rational& r) const {
    return Coeff{uni_scale(a.c, r)};
}

Coeff CoefficientField::inv(const Coeff& a) const {
    if (a.is_zero())
        throw ZeroDivisorError("division by zero in the coefficient field");
    if (a.is_rational())
        return Coeff{{Rational(1) / a.c[0]}};
    // Extended Euclid in Q[g]: s*a + t*m = gcd = nonzero rational, so
    // a^{-1} = s / gcd modulo the minimal polynomial.
    std::vector<Rational> r0 = minpoly_, r1 = a.c;
    std::vector<Rational> s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        std::vector<Rational> q, r2;
        uni_divmod(r0, r1, q, r2);
        std::vector<Rational> s2 = uni_sub(s0, uni_mul(q, s1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // r0 is the gcd; for a minimal polynomial it is a nonzero constant.
    if (r0.size() != 1)
        throw ZeroDivisorError("coefficient is a zero divisor modulo the minimal polynomial");
    return reduce(uni_scale(std::move(s0), Rational(1) / r0[0]));
}

Coeff CoefficientField::div(const Coeff& a, const Coeff& b) const {
    return mul(a, inv(b));
}

Coeff CoefficientField::pow(const Coeff& a, unsigned e) const {
    Coeff acc = one();
    Coeff base = a;
    while (e > 0) {
        if (e & 1u) acc = mul(acc, base);
        e >>= 1u;
        if (e) base = mul(base, base);
    }
    return acc;
}

int CoefficientField::print_sign(const Coeff& a) const {
    if (a.is_zero()) return 0;
    return a.c.back().sign();
}

std::string CoefficientField::to_string(const Coeff& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = a.c.size(); k-- > 0;) {
        const Rational& r = a.c[k];
        if (r.is_zero()) continue;
        Rational mag = abs(r);
        std::string body;
        if (k == 0) {
            body = palg::to_string(mag);
        } else {
            std::string power = generator_;
            if (k > 1) power += "^" + std::to_string(k);
            body = (mag == Rational(1)) ? power : palg::to_string(mag) + "*" + power;
        }
        if (first) {
            if (r.sign() < 0) {
                // "-g" is not in the grammar, so spell the coefficient out.
                if (k > 0 && mag == Rational(1))
                    body = "-1*" + body;
                else
                    body = "-" + body;
            }
            out = body;
            first = false;
        } else {
            out += (r.sign() < 0) ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

bool CoefficientField::operator==(const CoefficientField& o) const {
    return kind_ == o.kind_ && generator_ == o.generator_ && minpoly_ == o.minpoly_;
}

} // namespace palg

#include "palg/ring.hpp"

#include "palg/errors.hpp"

#include <algorithm>

namespace palg {

std::optional<MonomialOrder> monomial_order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::Grevlex;
    if (name == "grlex") return MonomialOrder::Grlex;
    if (name == "lex") return MonomialOrder::Lex;
    return std::nullopt;
}

std::string monomial_order_name(MonomialOrder order) {
    switch (order) {
        case MonomialOrder::Grevlex: return "grevlex";
        case MonomialOrder::Grlex: return "grlex";
        case MonomialOrder::Lex: return "lex";
    }
    return "?";
}

std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool monomial_is_one(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

int compare_monomials_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
    switch (order) {
        case MonomialOrder::Lex:
            return compare_monomials_lex(a, b);
        case MonomialOrder::Grlex: {
            auto da = total_degree(a), db = total_degree(b);
            if (da != db) return da > db ? 1 : -1;
            return compare_monomials_lex(a, b);
        }
        case MonomialOrder::Grevlex: {
            auto da = total_degree(a), db = total_degree(b);
            if (da != db) return da > db ? 1 : -1;
            // Equal degree: the smaller exponent in the last differing
            // position wins.
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

std::optional<std::size_t> Ring::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables, CoefficientField field,
                  MonomialOrder order) {
    for (const auto& v : variables) {
        if (v.empty()) throw Error("ring variable with empty name");
        if (std::count(variables.begin(), variables.end(), v) != 1)
            throw Error("duplicate ring variable '" + v + "'");
        if (!field.is_rationals() && v == field.generator_name())
            throw Error("ring variable '" + v + "' collides with the field generator");
    }
    auto r = std::make_shared<Ring>();
    r->variables = std::move(variables);
    r->field = std::move(field);
    r->order = order;
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace palg

#ifndef PALG_RING_HPP
#define PALG_RING_HPP

#include "palg/coefficient.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace palg {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

enum class MonomialOrder { Grevlex, Grlex, Lex };

std::optional<MonomialOrder> monomial_order_from_name(const std::string& name);
std::string monomial_order_name(MonomialOrder order);

std::uint64_t total_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b); // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomial_is_one(const Monomial& m);

/// Three-way comparison under the given order: negative if a < b, zero if
/// equal, positive if a > b.
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Plain lexicographic comparison of exponent vectors, used as the
/// deterministic tie-break in Buchberger pair selection.
int compare_monomials_lex(const Monomial& a, const Monomial& b);

/// Polynomial ring descriptor: named variables over a coefficient field,
/// with a fixed monomial order (graded reverse lexicographic by default).
/// Rings are immutable and shared by the values built over them.
struct Ring {
    std::vector<std::string> variables;
    CoefficientField field;
    MonomialOrder order = MonomialOrder::Grevlex;

    std::size_t arity() const { return variables.size(); }
    std::optional<std::size_t> variable_index(const std::string& name) const;

    bool operator==(const Ring& o) const {
        return variables == o.variables && field == o.field && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables,
                  CoefficientField field = CoefficientField(),
                  MonomialOrder order = MonomialOrder::Grevlex);

/// Structural ring equality (pointer equality short-circuits).
bool same_ring(const RingPtr& a, const RingPtr& b);

} // namespace palg

#endif

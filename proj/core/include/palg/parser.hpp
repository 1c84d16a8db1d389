#ifndef PALG_PARSER_HPP
#define PALG_PARSER_HPP

#include "palg/polynomial.hpp"

#include <string>

namespace palg {

/// Parses an expression in the grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-integer)?
///   base   := integer | identifier | '(' expr ')'
///
/// where an integer literal may carry a leading '-' sign and may be followed
/// by '/' and a positive integer to form an exact rational literal in
/// coefficient position. Identifiers resolve to ring variables or to the
/// coefficient-field generator. Implicit multiplication is not accepted.
///
/// Throws ParseError with the offending position for anything outside the
/// grammar and for unknown identifiers.
Polynomial parse_expression(const std::string& text, const RingPtr& ring);

} // namespace palg

#endif

#ifndef NOETHER_PARSER_HPP
#define NOETHER_PARSER_HPP

#include <string>

#include "polynomial.hpp"

namespace noether {

// Grammar: integer and rational literals, variable names, + - * ^ and
// parentheses; '/' is only allowed with a constant divisor (rational
// literals such as 3/2). Implicit multiplication is a syntax error.
// Whitespace is insignificant. Errors carry the offending position.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

// Canonical rendering: terms in descending canonical order, exponents > 1 as
// ^k, unit coefficients omitted. parse(print(p)) == p for every p, and
// print(parse(s)) == s for strings already in canonical form.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const VariableContext& ctx);

}  // namespace noether

#endif

#pragma once

#include <string_view>

#include "motivic/ring.hpp"

namespace motivic {

// Grammar: integer literals, L with an optional ^ rational exponent of
// denominator 1 or 2, [name] atoms, U(name) units, + - * ( ).
// `*` is the smash product; UnsupportedSmash propagates from evaluation.
MotivicClass parse(std::string_view text, const AtomTable& table);

// Laurent polynomials in q with integer or half-integer exponents, for the
// poincare field of atom tables: "q^{2} - 2*q + 1", "q^{-1}", "3".
LaurentQ parse_laurent(std::string_view text);

} // namespace motivic

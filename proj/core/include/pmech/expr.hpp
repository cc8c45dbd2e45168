#pragma once

/**
 * Expression language for observables and coefficients.
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/')? factor)*
 *   factor := '-' factor | base ('^' uint)?
 *   base   := int | 'i' | var | hbar | '(' expr ')'
 *   var    := ('q' | 'p') sector-digit ('_' index)?
 *   hbar   := 'h1' | 'h2' | 'h'            ('h' is h1)
 *
 * Juxtaposition multiplies ("q1 p2"). The right operand of '/' must be a
 * nonzero expression in h1, h2 and constants only, so "3/2" and
 * "h1/(h1+h2)" are fine but "1/q1" is rejected. Symbol::to_string output
 * parses back to the same symbol.
 */

#include <string>
#include <string_view>
#include <vector>

#include "pmech/symbol.hpp"

namespace pmech {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct ExprNode {
    enum class Type { rational, imaginary, variable, hbar, add, sub, mul, div, pow, neg, paren };

    Type type = Type::rational;
    SourcePos pos;
    Rational value;            // rational
    VarId var;                 // variable
    Hbar hbar = Hbar::h1;      // hbar
    unsigned exponent = 0;     // pow
    std::vector<ExprNode> children;
};

/// Throws ParseError with the position and the set of expected tokens.
ExprNode parse(std::string_view input);

/// Lowers to a canonical symbol with `n` degrees of freedom per sector.
/// Throws IndexOutOfRange for variable indices above n, ParseError for division
/// by an expression containing phase variables or by zero.
Symbol lower(const ExprNode& ast, unsigned n);

inline Symbol parse_symbol(std::string_view text, unsigned n = 1) { return lower(parse(text), n); }

/// Parses an expression without phase variables, e.g. "(h1+h2)/(i*h1*h2)".
RationalFunction parse_coefficient(std::string_view text);

}  // namespace pmech

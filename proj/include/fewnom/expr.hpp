#pragma once

#include <string>

#include "fewnom/bivar.hpp"
#include "fewnom/intpoly.hpp"

namespace fewnom {

/// Parse a plain integer polynomial in x.
///
/// Grammar (whitespace ignored):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor | factor)*      juxtaposition multiplies
///             when the next factor starts with a variable or '('
///   factor := ['-'] base ['^' ['-'|'+'] digits]
///   base   := digits | variable | '(' expr ')'
/// Variables are single letters; only x is known here.  Exponents must be
/// non-negative (a negative one throws SyntaxError) and at most 10^6.
/// Integer literals are arbitrary precision.  Throws SyntaxError with the
/// 0-based byte offset of the problem, UnknownVariable for any letter other
/// than x.  parse_univariate(render_univariate(p)) == p.
IntPoly parse_univariate(const std::string& text);

/// Parse a two-variable Laurent polynomial in x and y: the same grammar with
/// both variables and negative exponents allowed.  A negative power needs an
/// invertible base, i.e. a single monomial with coefficient +-1 (so
/// "y^-1" and "-(x^-2)" parse, "(x+1)^-1" does not).
/// parse_bivariate(render_bivariate(p)) == p.
BivarPoly parse_bivariate(const std::string& text);

/// Canonical descending-degree text form, e.g. "2*x^3-x+5"; "0" for zero.
std::string render_univariate(const IntPoly& p);

/// Canonical text form matching to_string(BivarPoly).
std::string render_bivariate(const BivarPoly& p);

} // namespace fewnom

#ifndef STRINGY_TEXT_HPP
#define STRINGY_TEXT_HPP

#include <string>

#include "stringy/bipoly.hpp"
#include "stringy/stringy_rational.hpp"

namespace stringy {

// Parsers for the canonical text rendering produced by to_string. Both throw
// DomainError(MalformedInput) on anything they cannot read.
//
// Grammar (whitespace-insensitive):
//   bipoly  := ['-'] term (('+'|'-') term)*
//   term    := coeff ['*' monomial] | monomial
//   monomial:= factor ('*' factor)*
//   factor  := 'u' ['^' int] | 'v' ['^' int] | '(uv)' ['^' int]
//   coeff   := int ['/' int]
//   stringy := bipoly
//            | '(' bipoly ')' ['/' denom ('*' denom)*] ['*' '(uv)' '^' int]
//   denom   := '(' '(uv)' '^' int '-' '1' ')'
BiPoly parseBiPoly(const std::string& text);
StringyRational parseStringyRational(const std::string& text);

}  // namespace stringy

#endif

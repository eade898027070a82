#pragma once

// Text form of cohomology classes:
//
//   expr   := term (('+' | '-') term)*        leading sign allowed; "0" is the zero class
//   term   := factor ('*' factor)*
//   factor := p | p/q | eta | eta^k | xi[i,j,...] | sigma | sigma^k | sigma[j] | sigma[j]^k
//
// Factors multiply left to right, so xi[3,1] = -xi[1,3]. Output is canonical: terms in
// descending monomial order, unit coefficients omitted, e.g. "2*eta^3 - 1/2*eta*xi[1,3]".

#include "vortexmod/symring.hpp"

#include <string>
#include <string_view>

namespace vortexmod::symring {

std::string to_string(const Monomial& m);
std::string to_string(const Terms& terms);
std::string to_string(const FreeClass& a);
std::string to_string(const CohomologyClass& a);

/// Parses an expression into the free algebra (no reduction applied). Throws ParseError.
FreeClass parse_class(RingParams p, std::string_view text);

}  // namespace vortexmod::symring

#pragma once

#include <string>
#include <string_view>

#include "qcpoly/poly.hpp"

namespace qcpoly {

// Wire format over prime fields, bit-exact and shared by every consumer:
// monomials in strictly decreasing degree joined by " + ", coefficient 1
// suppressed, "x" (not "x^1") at degree one, residues printed as decimal
// integers in [0, p). The zero polynomial prints as "0".
//   x^12 + x^11 + x^10 + x^9 + x^8 + x^6 + x^4 + x + 1
//   x^36 + 3x^31 + 4x^26 + 4x^25 + 4x^11 + 2x^10 + 4x^6 + 3x^5 + 2x + 4
std::string format_poly(const Poly& f);

// Inverse of format_poly, tolerant on input: arbitrary whitespace, '-' terms
// (normalized mod p), optional '*' between coefficient and x, repeated degrees
// summed. strict additionally rejects integer literals >= p; lenient reduces
// them. Malformed input is a domain error naming the offset.
Poly parse_poly(const FieldCtx& ctx, std::string_view text, bool strict = false);

// Human-readable form for any tower level; not a wire format.
std::string describe_element(const FieldElement& a);
std::string describe_poly(const Poly& f);

} // namespace qcpoly

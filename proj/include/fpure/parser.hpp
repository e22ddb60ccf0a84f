#pragma once

#include <string_view>
#include <vector>

#include "fpure/polynomial.hpp"
#include "fpure/rational.hpp"

namespace fpure {

// Text grammars. Every entry point either returns a value or throws
// ParseError carrying a byte offset into `text`; nothing else escapes.
//
//   ring      := "p" "=" INT ";" "vars" "=" IDENT ("," IDENT)*
//   poly      := ["+"|"-"] product (("+"|"-") product)*
//   product   := power ("*" power)*
//   power     := atom ["^" INT]
//   atom      := INT | IDENT | "(" poly ")"
//   rational  := INT | INT "/" INT
//
// IDENT matches [a-z][a-zA-Z0-9_]*; juxtaposition is not multiplication, so
// "xy" is one identifier. Whitespace is ignored between tokens.

using RingSpec = RingPtr;

RingSpec parse_ring(std::string_view text);
SparsePolynomial parse_poly(std::string_view text, const RingPtr& ring);
// Comma separated generators; "0" alone or an empty string gives no generators.
std::vector<SparsePolynomial> parse_poly_list(std::string_view text, const RingPtr& ring);
// Fixture format: one polynomial per line, '#' starts a comment, blank lines skipped.
std::vector<SparsePolynomial> parse_poly_file(std::string_view text, const RingPtr& ring);
// With require_positive the value must be > 0 (pair exponents); otherwise >= 0.
ExactRational parse_rational(std::string_view text, bool require_positive = true);

}  // namespace fpure

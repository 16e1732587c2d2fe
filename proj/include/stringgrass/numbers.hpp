#pragma once

#include <gmpxx.h>

#include <string>

namespace stringgrass {

// Subrepresentation counts: arbitrary precision, they outgrow 64 bits quickly.
using BigInt = mpz_class;

// Matrix entries: exact rationals, canonical (coprime, positive denominator).
using Rational = mpq_class;

// Accepts "p", "-p" or "p/q" in base 10; canonicalizes. Throws Error{ParseError}
// on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

}  // namespace stringgrass

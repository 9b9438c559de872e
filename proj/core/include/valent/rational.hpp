#pragma once

#include <gmpxx.h>

#include <string>

namespace valent {

/// Arbitrary-precision rational. mpq_class keeps values in canonical form
/// (reduced fraction, positive denominator), so == is structural equality.
using Rational = mpq_class;

/// Rational from a numerator/denominator pair, canonicalized.
/// Throws DomainError when `den` is zero.
Rational makeRational(long num, long den = 1);

/// Parses "p", "-p", "p/q" with an optional leading sign.
/// Throws ParseError on bad syntax or a zero denominator.
Rational parseRational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string formatRational(const Rational& value);

}  // namespace valent

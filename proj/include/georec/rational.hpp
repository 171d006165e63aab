#pragma once

#include <gmpxx.h>

#include <string>

namespace georec {

// All exact quantities live in Q, represented as canonical GMP rationals:
// reduced fraction, positive denominator. gmpxx arithmetic preserves the
// canonical form, so only hand-built fractions need make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k) as an exact integer; 0 outside 0 <= k <= n. Requires n >= 0.
Integer binomial(long n, long k);

// Canonical rational from a possibly unreduced numerator/denominator pair.
// Throws std::invalid_argument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// a^e for e >= 0.
Rational pow_rational(const Rational& a, unsigned long e);

// Accepts "a/b", an integer literal, or a finite decimal ("0.25"); all three
// convert exactly. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Canonical text form: "a/b", or plain "a" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace georec

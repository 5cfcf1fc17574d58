#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mimick {

/// Exact cost type. mpq_class keeps values canonical (lowest terms, positive
/// denominator) as long as every construction from a raw pair goes through
/// make_rational().
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num/den" or a plain integer. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Always "num/den", also for integers ("7/1").
std::string format_rational(const Rational& value);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace mimick

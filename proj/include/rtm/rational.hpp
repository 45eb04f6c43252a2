#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rtm {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every constructor path canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Accepts "n", "n/d", and decimal/scientific literals such as "0.25" or
/// "1e-30". Decimal literals are converted exactly.
Rational parse_rational(std::string_view text);
/// Decimal integer with optional leading minus sign.
Integer parse_integer(std::string_view text);

Rational pow2(int n);

}  // namespace rtm

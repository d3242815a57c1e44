#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace waveset {

/// Exact rational scalar. mpq_class keeps values reduced with a positive
/// denominator as long as every construction goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "n" or "-p/q" (ASCII minus or U+2212). Throws InputError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, "n" for integers.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Fractional part in [0,1).
Rational frac(const Rational& q);

/// 2^e for any integer e.
Rational pow2(long e);

/// Largest integer n with n*n <= q (q >= 0).
Integer floor_sqrt(const Rational& q);

/// True when q is the square of a rational; root receives |sqrt(q)|.
bool rational_sqrt(const Rational& q, Rational& root);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace waveset

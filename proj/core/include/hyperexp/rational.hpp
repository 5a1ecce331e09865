#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperexp {

/// Exact rational number, always reduced, denominator > 0. Backed by GMP;
/// mpq_class maintains both invariants after every operation.
using Rational = mpq_class;

/// q = n/d reduced to lowest terms. d must be nonzero.
Rational make_rational(long n, long d = 1);

/// Parses "n", "n/d" or a decimal literal like "0.25" (converted exactly,
/// 25/100 -> 1/4). Throws Error(parse) on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// q^e for integer e (negative allowed when q != 0).
Rational pow_rational(const Rational& q, long e);

bool is_integer(const Rational& q);

/// True iff q is an integer <= 0.
bool is_nonpositive_integer(const Rational& q);

/// For integral q within long range, the value as long.
long to_long(const Rational& q);

/// Denominator of q as long (q already reduced). Throws Error(domain) when it
/// does not fit.
long denominator_long(const Rational& q);

}  // namespace hyperexp

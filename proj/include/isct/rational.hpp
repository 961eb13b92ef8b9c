#pragma once

#include <gmpxx.h>

#include <string>

namespace isct {

// Exact scalars. GMP keeps rationals canonical (positive denominator,
// gcd(|num|, den) = 1) through every arithmetic operation, which is the
// invariant all equality tests in this project rely on.
using Integer = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long constructors; long is 64-bit on every platform
// this project targets.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

// num/den with canonicalization; den must be nonzero.
Rational make_rational(long long num, long long den);
Rational make_rational(const Integer& num, const Integer& den);

// "p/q" with the denominator always spelled out ("5/1", "-2/3"). This is
// the wire format used for rationals in JSON reports.
std::string to_fraction_string(const Rational& q);

}  // namespace isct

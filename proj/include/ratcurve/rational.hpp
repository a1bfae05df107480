#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ratcurve {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// Largest multiple of 2^-bits that is <= q, and the smallest that is >= q.
Rational dyadic_floor(const Rational& q, long bits);
Rational dyadic_ceil(const Rational& q, long bits);
Rational from_double(double d);
double to_double(const Rational& q);
Rational pow(const Rational& q, unsigned long n);
// floor(log2 |q|) for q != 0.
long floor_log2(const Rational& q);
// Bits needed to bound numerator and denominator.
long bit_size(const Rational& q);

}  // namespace ratcurve

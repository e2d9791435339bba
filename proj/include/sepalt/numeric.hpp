#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace sepalt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Arbitrary-precision binary float for asymptotic evaluation.
/// Default working precision is 80 decimal digits (~266 bits); override
/// with the SEPALT_PRECISION environment variable (decimal digits).
using Real = boost::multiprecision::mpfr_float;

/// Reads SEPALT_PRECISION and sets the default Real precision.
/// Idempotent; call once at program / test start.
void init_precision();

Real to_real(const Rational& q);
Real to_real(const BigInt& z);

/// "p/q", or plain "p" when the denominator is 1.
std::string rat_str(const Rational& q);

/// Decimal rendering with explicit significant-digit count.
std::string real_str(const Real& x, unsigned sig_digits = 30);

}  // namespace sepalt

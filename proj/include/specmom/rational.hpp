#pragma once

#include <gmpxx.h>

#include <string>

namespace specmom {

// Exact arbitrary-precision arithmetic. Walk counts grow like k^k, so every
// quantity derived from the recurrence is kept as a GMP integer/rational and
// only converted to double at the output boundary.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt int_pow(const BigInt& base, unsigned long exponent);
BigRat rat_pow(const BigRat& base, unsigned long exponent);

/// Canonical textual form: "3" for integers, "21/8" otherwise.
std::string rat_to_string(const BigRat& value);

/// Accepts "3", "-3", "21/8" and plain decimals like "0.5" or "2.75".
/// Throws std::invalid_argument on anything else.
BigRat parse_rational(const std::string& text);

double rat_to_double(const BigRat& value);

}  // namespace specmom

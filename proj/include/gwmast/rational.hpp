#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwmast {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "p" or a terminating decimal such as "0.25"; throws ParseError.
Rational parse_rational(std::string_view text);

// Always "num/den", including integers ("3/1").
std::string to_fraction_string(const Rational& q);

// Value rounded to 12 significant digits.
double to_decimal12(const Rational& q);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace gwmast

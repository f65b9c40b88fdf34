#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace recurquot {

using Integer = mpz_class;
/// Always kept canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "[-+]?digits" or "[-+]?digits/digits" with no interior spaces.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);
Rational abs(const Rational& x);
int sign(const Rational& x);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm_of_denominators(std::span<const Rational> xs);

/// p-adic valuation; x must be non-zero.
long valuation(const Integer& x, const Integer& p);
long valuation(const Rational& x, const Integer& p);

bool is_probable_prime(const Integer& n);

/// Converts with a range check; throws InvalidArgument on overflow.
long to_long(const Integer& x);

}  // namespace recurquot

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace steintile {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// num/den in lowest terms. Throws ValidationError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q > 0).
Rational parse_rational(std::string_view text);

/// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

bool is_integer(const Rational& q);

/// Exact value as a signed 64-bit integer; throws ValidationError when not representable.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace steintile

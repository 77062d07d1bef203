#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace kkbounds {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p", or a plain decimal such as "-0.25" into an exact rational.
/// Throws FormatError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

double to_double(const Rational& value);

/// Exact binary value of a finite double.
Rational from_double(double value);

Integer binomial(int n, int k);

int sign(const Rational& value);

}  // namespace kkbounds

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pal/errors.hpp"

namespace pal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" or "p". Throws DomainError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when q = 1), matching parse_rational.
std::string format_rational(const Rational& value);

// Decimal rendering with the given number of fraction digits, half-up.
std::string format_decimal(const Rational& value, int digits);

// Binary entropy of p, in bits. Domain [0, 1]; H(0) = H(1) = 0.
double entropy(const Rational& p);

// Smallest k with 2^k >= n. Domain n >= 1.
int ceil_log2(long n);

}  // namespace pal

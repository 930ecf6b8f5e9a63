#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetmat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// binom(n, k); zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

}  // namespace posetmat

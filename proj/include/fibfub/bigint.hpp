#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibfub::exact {

// Arbitrary-precision integers and rationals. Rationals are kept in lowest
// terms with a positive denominator by the backend.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// base^exponent for exponent >= 0.
BigInt ipow(const BigInt& base, int exponent);

}  // namespace fibfub::exact

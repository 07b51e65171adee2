#pragma once

#include "eulerpoly/rational.hpp"

namespace eulerpoly {

/// C(n, k), extended by zero outside 0 <= k <= n. Negative n is a usage
/// error (std::invalid_argument).
BigInt binomial(long n, long k);

/// n (n-1) ... (n-q+1); equals q! C(n, q) and is 1 for q = 0.
BigInt falling_factorial(long n, long q);

BigInt factorial(long n);

/// Exact power with base^0 = 1, including 0^0.
Rational int_pow(const Rational& base, unsigned long e);

/// (-1)^e as an int.
constexpr int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace eulerpoly

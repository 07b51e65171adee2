#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the Euler recurrence, the series path in the library, or the
// polynomial composition code it is used to check.

#include "eulerpoly/rational.hpp"

#include <cstdint>
#include <vector>

namespace eulerpoly::oracle {

/// Rows 0..max_n of Pascal's triangle by additive recurrence.
inline std::vector<std::vector<BigInt>> pascal(int max_n) {
    std::vector<std::vector<BigInt>> rows;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(1));
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                rows.back()[static_cast<std::size_t>(k - 1)] + rows.back()[static_cast<std::size_t>(k)];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Rational power(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

inline BigInt fact(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

/// Euler numbers E_0..E_max as n! [t^n] 1/cosh(t), by truncated series division.
inline std::vector<Rational> euler_numbers_sech(int max_n) {
    const auto len = static_cast<std::size_t>(max_n) + 1;
    std::vector<Rational> cosh(len);
    for (std::size_t n = 0; n < len; n += 2) {
        cosh[n] = Rational(BigInt(1), fact(static_cast<int>(n)));
    }
    std::vector<Rational> q(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = n == 0 ? Rational(1) : Rational(0);
        for (std::size_t k = 1; k <= n; ++k) {
            acc -= cosh[k] * q[n - k];
        }
        q[n] = acc;  // cosh[0] == 1
    }
    std::vector<Rational> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        out[n] = q[n] * Rational(fact(static_cast<int>(n)));
    }
    return out;
}

/// E_n(x) = sum_k C(n,k) E_k / 2^k (x - 1/2)^{n-k}, with Euler numbers from
/// the sech series.
inline Rational euler_value_explicit(int n, const Rational& x) {
    const auto numbers = euler_numbers_sech(n);
    const auto rows = pascal(n);
    Rational sum;
    for (int k = 0; k <= n; ++k) {
        sum += Rational(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) *
               numbers[static_cast<std::size_t>(k)] / power(Rational(2), k) *
               power(x - Rational(1, 2), n - k);
    }
    return sum;
}

/// Smallest r in [0, modulus) with d * r == 1 (mod modulus), by search.
inline std::int64_t inverse_by_search(std::int64_t d, std::int64_t modulus) {
    for (std::int64_t r = 0; r < modulus; ++r) {
        if (((d % modulus) * r) % modulus == 1) {
            return r;
        }
    }
    return -1;
}

}  // namespace eulerpoly::oracle

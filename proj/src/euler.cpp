#include "eulerpoly/euler.hpp"

#include "eulerpoly/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace eulerpoly {

namespace {

std::size_t checked_index(int n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(n));
    }
    return static_cast<std::size_t>(n);
}

void require_positive_count(int m, int n, const char* what) {
    if (m < 1 || n < 0) {
        throw std::invalid_argument(std::string(what) + ": need m >= 1 and n >= 0");
    }
}

}  // namespace

const RatPoly& EulerCache::euler(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (euler_.size() <= n) {
        const std::size_t r = euler_.size();
        RatPoly acc;
        for (std::size_t k = 0; k < r; ++k) {
            acc += *euler_[k] * Rational(binomial(static_cast<long>(r), static_cast<long>(k)));
        }
        auto next = RatPoly::monomial(Rational(1), r) - acc * Rational(1, 2);
        euler_.push_back(std::make_unique<const RatPoly>(std::move(next)));
    }
    return *euler_[n];
}

const RatPoly& EulerCache::bernoulli(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (bernoulli_.size() <= n) {
        const std::size_t r = bernoulli_.size();
        RatPoly acc;
        for (std::size_t k = 0; k < r; ++k) {
            acc += *bernoulli_[k] * Rational(binomial(static_cast<long>(r + 1), static_cast<long>(k)));
        }
        auto next = RatPoly::monomial(Rational(1), r) - acc * Rational(1, static_cast<long>(r + 1));
        bernoulli_.push_back(std::make_unique<const RatPoly>(std::move(next)));
    }
    return *bernoulli_[n];
}

EulerCache& EulerCache::global() {
    static EulerCache cache;
    return cache;
}

const RatPoly& euler_poly(int n) {
    return EulerCache::global().euler(checked_index(n, "euler_poly"));
}

const RatPoly& bernoulli_poly(int n) {
    return EulerCache::global().bernoulli(checked_index(n, "bernoulli_poly"));
}

Rational euler_value(int n, const Rational& t) { return euler_poly(n)(t); }

Rational euler_number(int n) {
    const Rational value =
        int_pow(Rational(2), static_cast<unsigned long>(checked_index(n, "euler_number"))) *
        euler_value(n, Rational(1, 2));
    if (!value.is_integer()) {
        throw std::logic_error("Euler number E_" + std::to_string(n) + " is not an integer");
    }
    return value;
}

RatPoly euler_poly_shifted(int n, const Rational& u, const Rational& v) {
    const RatPoly& base = euler_poly(n);
    if (u == Rational(1) && v.is_zero()) {
        return base;
    }
    if (u == Rational(-1) && v.is_zero()) {
        // E_n(-a): flip odd-degree coefficients.
        std::vector<Rational> c = base.coeffs();
        for (std::size_t i = 1; i < c.size(); i += 2) {
            c[i] = -c[i];
        }
        return RatPoly(std::move(c));
    }
    return compose_affine(base, u, v);
}

Rational alt_power_sum(int m, int n) {
    require_positive_count(m, n, "alt_power_sum");
    Rational sum;
    for (int j = 1; j <= m; ++j) {
        const Rational term = int_pow(Rational(j), static_cast<unsigned long>(n));
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational alt_power_sum_closed(int m, int n) {
    require_positive_count(m, n, "alt_power_sum_closed");
    const Rational shifted = euler_value(n, Rational(m + 1));
    const Rational signed_shift = sign_pow(m) == 1 ? shifted : -shifted;
    return (signed_shift + euler_value(n, Rational(0))) * Rational(1, 2);
}

Rational power_sum(int m, int n) {
    require_positive_count(m, n, "power_sum");
    Rational sum;
    for (int j = 1; j <= m; ++j) {
        sum += int_pow(Rational(j), static_cast<unsigned long>(n));
    }
    return sum;
}

Rational power_sum_closed(int m, int n) {
    require_positive_count(m, n, "power_sum_closed");
    const RatPoly& b = bernoulli_poly(n + 1);
    return (b(Rational(m + 1)) - b(Rational(0))) / Rational(n + 1);
}

std::vector<RatPoly> euler_polys_by_series(int max_n) {
    const std::size_t len = checked_index(max_n, "euler_polys_by_series") + 1;
    // numerator 2 e^{at}: coefficient of t^n is 2 a^n / n!
    // denominator e^t + 1: 2 at t^0, 1/n! after
    std::vector<Rational> inv_fact(len);
    for (std::size_t n = 0; n < len; ++n) {
        inv_fact[n] = Rational(BigInt(1), factorial(static_cast<long>(n)));
    }
    std::vector<RatPoly> quotient(len);
    for (std::size_t n = 0; n < len; ++n) {
        RatPoly acc = RatPoly::monomial(Rational(2) * inv_fact[n], n);
        for (std::size_t k = 1; k <= n; ++k) {
            acc -= quotient[n - k] * inv_fact[k];
        }
        quotient[n] = acc * Rational(1, 2);
    }
    std::vector<RatPoly> out;
    out.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        out.push_back(quotient[n] * Rational(factorial(static_cast<long>(n))));
    }
    return out;
}

}  // namespace eulerpoly

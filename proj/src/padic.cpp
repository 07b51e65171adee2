#include "eulerpoly/padic.hpp"

#include "eulerpoly/combinatorics.hpp"
#include "eulerpoly/euler.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace eulerpoly {

namespace {

long remove_factor(BigInt& value, long p) {
    if (value == 0) {
        return 0;
    }
    const BigInt prime(p);
    return static_cast<long>(
        mpz_remove(value.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t term_count(long p, int precision, std::int64_t budget) {
    require_odd_prime(p);
    if (precision < 1) {
        throw std::invalid_argument("precision must be >= 1");
    }
    const BigInt count = prime_power(p, precision);
    if (count > BigInt(static_cast<long>(budget))) {
        throw BudgetExceeded("p^N = " + count.get_str() + " exceeds the naive-sum budget " +
                             std::to_string(budget));
    }
    return count.get_si();
}

void require_p_integral(const RatPoly& f, long p) {
    for (const auto& c : f.coeffs()) {
        if (c.denominator() % p == 0) {
            throw DenominatorNotInvertible("coefficient " + c.to_string() + " is not " +
                                           std::to_string(p) + "-integral");
        }
    }
}

/// Splits [0, count) into `workers` contiguous chunks, sums each with
/// `partial(lo, hi)`, and adds the partials in chunk order.
template <typename T, typename Partial>
T chunked_sum(std::int64_t count, unsigned workers, Partial partial) {
    workers = std::max(1U, workers);
    if (workers == 1 || count < static_cast<std::int64_t>(workers) * 64) {
        return partial(0, count);
    }
    std::vector<T> partials(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        const std::int64_t step = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t lo = std::min<std::int64_t>(count, w * step);
            const std::int64_t hi = std::min<std::int64_t>(count, lo + step);
            threads.emplace_back([&partials, &partial, w, lo, hi] { partials[w] = partial(lo, hi); });
        }
    }
    T total{};
    for (const auto& part : partials) {
        total += part;
    }
    return total;
}

}  // namespace

void require_odd_prime(long p) {
    if (p == 2) {
        throw InvalidPrime("p = 2 is not supported; p must be an odd prime");
    }
    if (p < 3 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0) {
        throw InvalidPrime(std::to_string(p) + " is not an odd prime");
    }
}

BigInt prime_power(long p, int precision) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(precision));
    return out;
}

long Valuation::value() const {
    if (!value_) {
        throw std::logic_error("valuation is +infinity");
    }
    return *value_;
}

std::string Valuation::to_string() const { return value_ ? std::to_string(*value_) : "+inf"; }

std::strong_ordering operator<=>(const Valuation& lhs, const Valuation& rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) {
        return lhs.is_infinite() <=> rhs.is_infinite();
    }
    return *lhs.value_ <=> *rhs.value_;
}

Valuation valuation(const Rational& r, long p) {
    require_odd_prime(p);
    if (r.is_zero()) {
        return Valuation::infinite();
    }
    BigInt num = abs(r.numerator());
    BigInt den = r.denominator();
    return Valuation(remove_factor(num, p) - remove_factor(den, p));
}

PadicInt::PadicInt(long p, int precision, const BigInt& residue) : p_(p), precision_(precision) {
    require_odd_prime(p);
    if (precision < 1) {
        throw std::invalid_argument("precision must be >= 1");
    }
    modulus_ = prime_power(p, precision);
    mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
}

PadicInt PadicInt::from_rational(const Rational& r, long p, int precision) {
    require_odd_prime(p);
    if (r.denominator() % p == 0) {
        throw DenominatorNotInvertible(r.to_string() + " is not in Z_" + std::to_string(p));
    }
    const BigInt modulus = prime_power(p, std::max(precision, 1));
    BigInt inverse;
    mpz_invert(inverse.get_mpz_t(), r.denominator().get_mpz_t(), modulus.get_mpz_t());
    return PadicInt(p, precision, BigInt(r.numerator() * inverse));
}

void PadicInt::require_compatible(const PadicInt& rhs) const {
    if (p_ != rhs.p_ || precision_ != rhs.precision_) {
        throw PrecisionMismatch("p-adic operands differ in prime or precision");
    }
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, precision_, BigInt(-residue_)); }

PadicInt& PadicInt::operator+=(const PadicInt& rhs) {
    require_compatible(rhs);
    residue_ += rhs.residue_;
    if (residue_ >= modulus_) {
        residue_ -= modulus_;
    }
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& rhs) {
    require_compatible(rhs);
    residue_ -= rhs.residue_;
    if (residue_ < 0) {
        residue_ += modulus_;
    }
    return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& rhs) {
    require_compatible(rhs);
    residue_ *= rhs.residue_;
    mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
    return *this;
}

Rational fermionic_sum_naive(const std::function<Rational(std::int64_t)>& f, long p, int precision,
                             const NaiveSumOptions& options) {
    const std::int64_t count = term_count(p, precision, options.budget);
    return chunked_sum<Rational>(count, options.workers, [&f](std::int64_t lo, std::int64_t hi) {
        Rational sum;
        for (std::int64_t x = lo; x < hi; ++x) {
            if (x % 2 == 0) {
                sum += f(x);
            } else {
                sum -= f(x);
            }
        }
        return sum;
    });
}

Rational fermionic_sum_naive(const RatPoly& f, long p, int precision,
                             const NaiveSumOptions& options) {
    const std::int64_t count = term_count(p, precision, options.budget);
    BigInt common = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<BigInt> scaled;
    scaled.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        scaled.emplace_back(c.numerator() * (common / c.denominator()));
    }
    const BigInt total =
        chunked_sum<BigInt>(count, options.workers, [&scaled](std::int64_t lo, std::int64_t hi) {
            BigInt sum = 0;
            BigInt value;
            for (std::int64_t x = lo; x < hi; ++x) {
                value = 0;
                const BigInt bx(static_cast<long>(x));
                for (auto it = scaled.rbegin(); it != scaled.rend(); ++it) {
                    value = value * bx + *it;
                }
                if (x % 2 == 0) {
                    sum += value;
                } else {
                    sum -= value;
                }
            }
            return sum;
        });
    return Rational(total, common);
}

PadicInt fermionic_sum_mod(const RatPoly& f, long p, int precision, std::int64_t budget) {
    const std::int64_t count = term_count(p, precision, budget);
    require_p_integral(f, p);
    std::vector<PadicInt> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(PadicInt::from_rational(c, p, precision));
    }
    const BigInt modulus = prime_power(p, precision);
    BigInt sum = 0;
    BigInt value;
    for (std::int64_t x = 0; x < count; ++x) {
        value = 0;
        const BigInt bx(static_cast<long>(x));
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            value = value * bx + it->residue();
            mpz_mod(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
        }
        if (x % 2 == 0) {
            sum += value;
        } else {
            sum -= value;
        }
    }
    return PadicInt(p, precision, sum);
}

Rational fermionic_sum_closed(int n, const Rational& a, const BigInt& q) {
    if (n < 0 || q < 1) {
        throw std::invalid_argument("fermionic_sum_closed: need n >= 0 and q >= 1");
    }
    const RatPoly& e = euler_poly(n);
    const Rational far = e(a + Rational(q));
    const bool q_odd = mpz_odd_p(q.get_mpz_t()) != 0;
    return ((q_odd ? far : -far) + e(a)) * Rational(1, 2);
}

Valuation witt_defect(int n, const Rational& a, long p, int precision) {
    require_odd_prime(p);
    if (precision < 1) {
        throw std::invalid_argument("precision must be >= 1");
    }
    if (a.denominator() % p == 0) {
        throw DenominatorNotInvertible(a.to_string() + " is not in Z_" + std::to_string(p));
    }
    const Rational truncated = fermionic_sum_closed(n, a, prime_power(p, precision));
    return valuation(truncated - euler_value(n, a), p);
}

Valuation Lem1Defect::overall() const {
    Valuation out = std::min(shift, reflect);
    if (even) {
        out = std::min(out, *even);
    }
    return out;
}

bool is_even_poly(const RatPoly& f) {
    const auto& c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) {
        if (!c[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Lem1Defect lem1_defect(const RatPoly& f, long p, int precision, std::int64_t budget) {
    require_odd_prime(p);
    require_p_integral(f, p);
    const NaiveSumOptions options{budget, 1};
    const Rational s = fermionic_sum_naive(f, p, precision, options);
    const Rational s_shift =
        fermionic_sum_naive(compose_affine(f, Rational(1), Rational(1)), p, precision, options);
    const Rational s_reflect =
        fermionic_sum_naive(compose_affine(f, Rational(-1), Rational(0)), p, precision, options);
    const Rational f0 = f.coeff(0);
    const Rational target = Rational(2) * f0 - s;

    Lem1Defect out{valuation(s_shift - target, p), valuation(s_reflect - target, p), std::nullopt};
    if (is_even_poly(f)) {
        out.even = valuation(s - f0, p);
    }
    return out;
}

}  // namespace eulerpoly

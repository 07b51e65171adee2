#pragma once

#include "eulerpoly/poly.hpp"
#include "eulerpoly/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace eulerpoly {

struct InvalidPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The rational is not in Z_p: p divides its reduced denominator.
struct DenominatorNotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct BudgetExceeded : std::length_error {
    using std::length_error::length_error;
};

/// Operands carry different (p, N).
struct PrecisionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kDefaultNaiveBudget = 10'000'000;

/// Throws InvalidPrime unless p is an odd prime.
void require_odd_prime(long p);

BigInt prime_power(long p, int precision);

/// p-adic valuation with +infinity for zero.
class Valuation {
public:
    explicit Valuation(long value) : value_(value) {}
    static Valuation infinite() { return Valuation(); }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::logic_error for +infinity.
    long value() const;
    bool at_least(long bound) const { return is_infinite() || *value_ >= bound; }

    /// Decimal value, or "+inf".
    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& lhs, const Valuation& rhs);

private:
    Valuation() = default;
    std::optional<long> value_;
};

/// v_p(numerator) - v_p(denominator).
Valuation valuation(const Rational& r, long p);

/// Residue modulo p^N for an odd prime p.
class PadicInt {
public:
    /// Reduces `residue` into [0, p^N). Throws InvalidPrime / std::invalid_argument.
    PadicInt(long p, int precision, const BigInt& residue);

    /// numerator * denominator^{-1} mod p^N; throws DenominatorNotInvertible
    /// when p divides the denominator.
    static PadicInt from_rational(const Rational& r, long p, int precision);

    long prime() const { return p_; }
    int precision() const { return precision_; }
    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& rhs);
    PadicInt& operator-=(const PadicInt& rhs);
    PadicInt& operator*=(const PadicInt& rhs);

    friend PadicInt operator+(PadicInt lhs, const PadicInt& rhs) { return lhs += rhs; }
    friend PadicInt operator-(PadicInt lhs, const PadicInt& rhs) { return lhs -= rhs; }
    friend PadicInt operator*(PadicInt lhs, const PadicInt& rhs) { return lhs *= rhs; }

    friend bool operator==(const PadicInt& lhs, const PadicInt& rhs) {
        return lhs.p_ == rhs.p_ && lhs.precision_ == rhs.precision_ && lhs.residue_ == rhs.residue_;
    }

private:
    void require_compatible(const PadicInt& rhs) const;

    long p_;
    int precision_;
    BigInt modulus_;
    BigInt residue_;
};

inline PadicInt padic_from_rational(const Rational& r, long p, int precision) {
    return PadicInt::from_rational(r, p, precision);
}

struct NaiveSumOptions {
    std::int64_t budget = kDefaultNaiveBudget;
    /// Number of threads the p^N terms are split across; results are
    /// recombined in a fixed order.
    unsigned workers = 1;
};

/// Exact sum_{x=0}^{p^N-1} f(x) (-1)^x.
Rational fermionic_sum_naive(const std::function<Rational(std::int64_t)>& f, long p, int precision,
                             const NaiveSumOptions& options = {});

/// Same sum for a polynomial f, evaluated term by term over Z after clearing
/// denominators.
Rational fermionic_sum_naive(const RatPoly& f, long p, int precision,
                             const NaiveSumOptions& options = {});

/// The sum for a polynomial f computed entirely modulo p^N. f must have
/// p-integral coefficients.
PadicInt fermionic_sum_mod(const RatPoly& f, long p, int precision,
                           std::int64_t budget = kDefaultNaiveBudget);

/// ((-1)^{q-1} E_n(a+q) + E_n(a)) / 2, i.e. sum_{i<q} (-1)^i (a+i)^n.
Rational fermionic_sum_closed(int n, const Rational& a, const BigInt& q);

/// v_p(fermionic_sum_closed(n, a, p^N) - E_n(a)); at least N when the
/// truncated integral converges as expected.
Valuation witt_defect(int n, const Rational& a, long p, int precision);

struct Lem1Defect {
    /// v_p(S_1 - (2 f(0) - S)) with S_1 = sum f(x+1)(-1)^x.
    Valuation shift;
    /// v_p(S_- - (2 f(0) - S)) with S_- = sum f(-x)(-1)^x.
    Valuation reflect;
    /// v_p(S - f(0)), present only when f is even.
    std::optional<Valuation> even;

    /// Minimum over the defects that apply.
    Valuation overall() const;
};

Lem1Defect lem1_defect(const RatPoly& f, long p, int precision,
                       std::int64_t budget = kDefaultNaiveBudget);

/// True when every odd-degree coefficient vanishes.
bool is_even_poly(const RatPoly& f);

}  // namespace eulerpoly

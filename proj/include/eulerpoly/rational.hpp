#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eulerpoly {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Canonical form is established on every construction, so two values are
/// equal exactly when their numerators and denominators are equal.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}

    Rational(const BigInt& value) : value_(value) {}

    /// Throws std::domain_error when `denominator` is zero.
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "-3/4", "7", "0". Rejects a zero denominator, stray signs,
    /// whitespace, and empty fields with std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return from_raw(-value_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    static Rational from_raw(mpq_class value);

    mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace eulerpoly

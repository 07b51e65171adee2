#pragma once

#include "eulerpoly/combinatorics.hpp"
#include "eulerpoly/rational.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eulerpoly {

namespace detail {
template <typename T>
bool coeff_is_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over a commutative ring C.
///
/// coeffs()[i] is the coefficient of x^i. The highest stored coefficient is
/// always nonzero; the zero polynomial stores no coefficients and has no
/// degree. Nesting (Poly<Poly<Rational>>) gives polynomials in x whose
/// coefficients are polynomials in a second indeterminate.
template <typename C>
class Poly {
public:
    using coefficient_type = C;

    Poly() = default;

    explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    explicit Poly(C constant) {
        if (!detail::coeff_is_zero(constant)) {
            coeffs_.push_back(std::move(constant));
        }
    }

    /// Constant from anything the coefficient ring can be built from, e.g. a
    /// Rational constant inside Poly<Poly<Rational>>.
    template <typename S>
        requires(!std::same_as<std::remove_cvref_t<S>, C> &&
                 !std::same_as<std::remove_cvref_t<S>, Poly> && std::constructible_from<C, S>)
    explicit Poly(S&& constant) : Poly(C(std::forward<S>(constant))) {}

    /// c * x^degree.
    static Poly monomial(C c, std::size_t degree) {
        if (detail::coeff_is_zero(c)) {
            return {};
        }
        std::vector<C> coeffs(degree + 1, C{});
        coeffs[degree] = std::move(c);
        return Poly(std::move(coeffs));
    }

    /// The indeterminate x.
    static Poly variable() { return monomial(C(1), 1); }

    /// u*x + v.
    static Poly linear(C u, C v) { return Poly(std::vector<C>{std::move(v), std::move(u)}); }

    const std::vector<C>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    /// Coefficient of x^i, zero past the degree.
    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C{}; }

    C leading() const { return coeffs_.empty() ? C{} : coeffs_.back(); }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    Poly& operator+=(const Poly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size(), C{});
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size(), C{});
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] -= rhs.coeffs_[i];
        }
        normalize();
        return *this;
    }

    Poly& operator*=(const Poly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    /// Coefficientwise scaling.
    Poly& operator*=(const C& c) {
        if (detail::coeff_is_zero(c)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) {
            x *= c;
        }
        normalize();
        return *this;
    }

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }

    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) {
            return {};
        }
        std::vector<C> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, C{});
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(lhs.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(Poly lhs, const C& c) { return lhs *= c; }
    friend Poly operator*(const C& c, Poly rhs) { return rhs *= c; }

    /// Scaling by a Rational when the coefficient ring is itself a polynomial ring.
    template <typename R>
        requires(std::same_as<R, Rational> && !std::same_as<C, Rational>)
    friend Poly operator*(Poly lhs, const R& r) {
        if (r.is_zero()) {
            return {};
        }
        for (auto& x : lhs.coeffs_) {
            x = x * r;
        }
        return lhs;
    }

    friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

    /// Horner evaluation at t.
    C operator()(const C& t) const {
        C acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<C> coeffs_;
};

template <typename C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero();
}

using RatPoly = Poly<Rational>;
/// Polynomial in x with coefficients in Q[a].
using BiPoly = Poly<RatPoly>;

template <typename C>
C eval(const Poly<C>& p, const C& t) {
    return p(t);
}

/// Formal k-th derivative. Over-differentiation gives the zero polynomial.
template <typename C>
Poly<C> derivative(const Poly<C>& p, std::size_t k) {
    const auto& in = p.coeffs();
    if (k == 0) {
        return p;
    }
    if (in.size() <= k) {
        return {};
    }
    std::vector<C> out;
    out.reserve(in.size() - k);
    for (std::size_t i = k; i < in.size(); ++i) {
        const Rational factor(falling_factorial(static_cast<long>(i), static_cast<long>(k)));
        out.push_back(in[i] * factor);
    }
    return Poly<C>(std::move(out));
}

/// p(u*x + v), expanded.
template <typename C>
Poly<C> compose_affine(const Poly<C>& p, const C& u, const C& v) {
    const auto lin = Poly<C>::linear(u, v);
    Poly<C> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + Poly<C>(*it);
    }
    return acc;
}

template <typename C>
Poly<C> pow(const Poly<C>& base, unsigned long e) {
    Poly<C> result(C(1));
    Poly<C> b = base;
    while (e > 0) {
        if (e & 1UL) {
            result *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

/// "1/4 - 3/2*x^2 + x^3", lowest degree first; "0" for the zero polynomial.
std::string to_human(const RatPoly& p, const std::string& var = "x");

/// Lowest-degree-first JSON array of rational strings, e.g. ["1/4","0","-3/2","1"].
std::string to_json(const RatPoly& p);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
RatPoly parse_json_poly(const std::string& text);

}  // namespace eulerpoly

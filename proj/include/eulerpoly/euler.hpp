#pragma once

#include "eulerpoly/poly.hpp"
#include "eulerpoly/rational.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace eulerpoly {

/// Append-only memo of Euler and Bernoulli polynomials.
///
/// Returned references stay valid for the lifetime of the cache; entries are
/// heap-allocated and never move. All members are safe to call concurrently.
class EulerCache {
public:
    EulerCache() = default;
    EulerCache(const EulerCache&) = delete;
    EulerCache& operator=(const EulerCache&) = delete;

    /// E_n(x), built by E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x).
    const RatPoly& euler(std::size_t n);

    /// B_n(x), built by B_n(x) = x^n - 1/(n+1) * sum_{k<n} C(n+1,k) B_k(x).
    const RatPoly& bernoulli(std::size_t n);

    /// Process-wide instance used by the free functions below.
    static EulerCache& global();

private:
    std::mutex mutex_;
    std::vector<std::unique_ptr<const RatPoly>> euler_;
    std::vector<std::unique_ptr<const RatPoly>> bernoulli_;
};

const RatPoly& euler_poly(int n);
const RatPoly& bernoulli_poly(int n);

/// E_n(t).
Rational euler_value(int n, const Rational& t);

/// 2^n E_n(1/2). Always an integer; a non-integral result throws std::logic_error.
Rational euler_number(int n);

/// E_n(u*a + v) as a polynomial in a.
RatPoly euler_poly_shifted(int n, const Rational& u, const Rational& v);

/// Direct sum_{j=1}^{m} (-1)^j j^n.
Rational alt_power_sum(int m, int n);
/// ((-1)^m E_n(m+1) + E_n(0)) / 2.
Rational alt_power_sum_closed(int m, int n);

/// Direct sum_{j=1}^{m} j^n.
Rational power_sum(int m, int n);
/// (B_{n+1}(m+1) - B_{n+1}(0)) / (n+1).
Rational power_sum_closed(int m, int n);

/// E_0..E_max_n read off the truncated quotient 2 e^{at} / (e^t + 1), with
/// power-series coefficients in Q[a]. Independent of the recurrence path.
std::vector<RatPoly> euler_polys_by_series(int max_n);

}  // namespace eulerpoly

#include "eulerpoly/identities.hpp"

#include "eulerpoly/combinatorics.hpp"
#include "eulerpoly/euler.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <charconv>
#include <exception>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace eulerpoly {

namespace {

constexpr std::array kCheckerNames{
    std::pair{CheckerId::reflection, "reflection"},
    std::pair{CheckerId::complement, "complement"},
    std::pair{CheckerId::boundary, "boundary"},
    std::pair{CheckerId::gf_consistency, "gf_consistency"},
    std::pair{CheckerId::euler_alt_sum, "euler_alt_sum"},
    std::pair{CheckerId::bernoulli_power_sum, "bernoulli_power_sum"},
    std::pair{CheckerId::wsp7, "wsp7"},
    std::pair{CheckerId::wsp9, "wsp9"},
    std::pair{CheckerId::thm1, "thm1"},
    std::pair{CheckerId::cro0, "cro0"},
    std::pair{CheckerId::cro1, "cro1"},
    std::pair{CheckerId::cro2, "cro2"},
    std::pair{CheckerId::recurrence_odd, "recurrence_odd"},
    std::pair{CheckerId::sun, "sun"},
    std::pair{CheckerId::sun_cor, "sun_cor"},
    std::pair{CheckerId::thm2, "thm2"},
    std::pair{CheckerId::thm2_cro1, "thm2_cro1"},
    std::pair{CheckerId::thm2_cro2, "thm2_cro2"},
    std::pair{CheckerId::thm3, "thm3"},
    std::pair{CheckerId::thm3_1a, "thm3_1a"},
    std::pair{CheckerId::thm3_1b, "thm3_1b"},
    std::pair{CheckerId::thm3_1c, "thm3_1c"},
    std::pair{CheckerId::thm3_1d, "thm3_1d"},
    std::pair{CheckerId::rem2_1, "rem2_1"},
    std::pair{CheckerId::fersim, "fersim"},
    std::pair{CheckerId::fersim3, "fersim3"},
    std::pair{CheckerId::witt, "witt"},
    std::pair{CheckerId::lem1, "lem1"},
};

constexpr auto kAllCheckers = [] {
    std::array<CheckerId, kCheckerNames.size()> ids{};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        ids[i] = kCheckerNames[i].first;
    }
    return ids;
}();

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational sgn(long e) { return Rational(sign_pow(e)); }

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

/// E_r(0).
Rational e0(long r) { return euler_poly(static_cast<int>(r)).coeff(0); }

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw std::invalid_argument(message);
    }
}

std::vector<Param> params(std::initializer_list<std::pair<const char*, Rational>> list) {
    std::vector<Param> out;
    out.reserve(list.size());
    for (const auto& [name, value] : list) {
        out.push_back(Param{name, value});
    }
    return out;
}

// Environments in which an identity is evaluated. Ring is the type both
// sides live in.

/// Sides as exact polynomials in the free variable.
struct SymbolicEnv {
    using Ring = RatPoly;

    Ring constant(const Rational& c) const { return RatPoly(c); }
    Ring variable() const { return RatPoly::variable(); }
    /// E_r(u*var + v).
    Ring euler(long r, const Rational& u, const Rational& v) const {
        return euler_poly_shifted(static_cast<int>(r), u, v);
    }
    /// (u*var + v)^e.
    Ring affine_pow(const Rational& u, const Rational& v, long e) const {
        return pow(RatPoly::linear(u, v), static_cast<unsigned long>(e));
    }
};

/// Sides as rationals with the free variable fixed to `t`.
struct PointEnv {
    using Ring = Rational;

    Rational t;

    Ring constant(const Rational& c) const { return c; }
    Ring variable() const { return t; }
    Ring euler(long r, const Rational& u, const Rational& v) const {
        return euler_value(static_cast<int>(r), u * t + v);
    }
    Ring affine_pow(const Rational& u, const Rational& v, long e) const {
        return int_pow(u * t + v, static_cast<unsigned long>(e));
    }
};

/// 0, 1, -1, 2, -2, ...
Rational sample_point(int i) {
    const int magnitude = (i + 1) / 2;
    return Rational(i % 2 == 1 ? magnitude : -magnitude);
}

/// Runs `residual(env)` symbolically or at degree_bound + 1 sample points.
template <typename F>
IdentityReport run_variable_check(CheckerId id, std::vector<Param> ps, CheckMode mode,
                                  long degree_bound, F residual) {
    const auto start = Clock::now();
    IdentityReport report{id, std::move(ps), mode, Rational(0), true, 0.0};
    if (mode == CheckMode::symbolic) {
        RatPoly r = residual(SymbolicEnv{});
        report.pass = r.is_zero();
        report.residual = std::move(r);
    } else if (mode == CheckMode::pointwise) {
        for (int i = 0; i <= std::max(0L, degree_bound); ++i) {
            Rational r = residual(PointEnv{sample_point(i)});
            if (!r.is_zero()) {
                report.pass = false;
                report.residual = std::move(r);
                break;
            }
        }
    } else {
        throw std::invalid_argument("valuation mode does not apply to " +
                                    std::string(to_string(id)));
    }
    report.elapsed_ms = millis_since(start);
    return report;
}

IdentityReport rational_report(CheckerId id, std::vector<Param> ps, Rational residual,
                               Clock::time_point start) {
    const bool pass = residual.is_zero();
    return IdentityReport{id, std::move(ps), CheckMode::symbolic, std::move(residual), pass,
                          millis_since(start)};
}

/// First nonzero of the candidates, else zero.
template <typename T>
T first_nonzero(std::initializer_list<T> candidates) {
    for (const auto& c : candidates) {
        if (!is_zero(c)) {
            return c;
        }
    }
    return T{};
}

// --- statements, written once for every environment ---

template <typename Env>
typename Env::Ring reflection_residual(const Env& env, int n) {
    return env.euler(n, Rational(-1), Rational(1)) - env.euler(n, Rational(1), Rational(0)) * sgn(n);
}

template <typename Env>
typename Env::Ring complement_residual(const Env& env, int n) {
    return env.euler(n, Rational(-1), Rational(0)) * sgn(n) + env.euler(n, Rational(1), Rational(0)) -
           env.affine_pow(Rational(1), Rational(0), n) * Rational(2);
}

template <typename Env>
typename Env::Ring wsp7_residual(const Env& env, int m, int n) {
    using R = typename Env::Ring;
    R lhs{};
    for (int i = 0; i <= m; ++i) {
        lhs += env.euler(n + i, Rational(1), Rational(0)) * binom(m, i);
    }
    R rhs{};
    for (int j = 0; j <= n; ++j) {
        rhs += env.euler(m + j, Rational(-1), Rational(0)) * binom(n, j);
    }
    return lhs * sgn(m) - rhs * sgn(n);
}

template <typename Env>
typename Env::Ring wsp9_residual(const Env& env, int m, int n) {
    using R = typename Env::Ring;
    const long top = m + n + 1;
    R left{};
    for (int i = 0; i <= m; ++i) {
        left += env.euler(n + i, Rational(1), Rational(0)) * (binom(m + 1, i) * Rational(n + i + 1));
    }
    R right{};
    for (int j = 0; j <= n; ++j) {
        right += env.euler(m + j, Rational(-1), Rational(0)) * (binom(n + 1, j) * Rational(m + j + 1));
    }
    const R lhs = left * sgn(m) + right * sgn(n);
    const R e_top = env.euler(top, Rational(1), Rational(0));
    const R a_top = env.affine_pow(Rational(1), Rational(0), top);
    const R rhs = (e_top - a_top) * (sgn(m + 1) * Rational(2 * (m + n + 2)));
    const R main = lhs - rhs;

    // Rewriting of the boundary term through the complement identity.
    const R boundary = e_top * (sgn(m) * Rational(m + n + 2)) +
                       env.euler(top, Rational(-1), Rational(0)) * (sgn(n) * Rational(m + n + 2));
    const R rewritten = (e_top - a_top) * (sgn(m) * Rational(2 * (m + n + 2)));
    return first_nonzero<R>({main, boundary - rewritten});
}

template <typename Env>
typename Env::Ring thm1_residual(const Env& env, int m, int n, int q, int k) {
    using R = typename Env::Ring;
    R first{};
    for (int i = 0; i <= m + q; ++i) {
        const BigInt c = binomial(n + q + i, k);
        if (c == 0) {
            continue;
        }
        first += env.euler(n + q + i - k, Rational(1), Rational(0)) * (binom(m + q, i) * Rational(c));
    }
    R second{};
    for (int j = 0; j <= n + q; ++j) {
        const BigInt c = binomial(m + q + j, k);
        if (c == 0) {
            continue;
        }
        second += env.euler(m + q + j - k, Rational(-1), Rational(0)) * (binom(n + q, j) * Rational(c));
    }
    return first * sgn(m) + second * sgn(n);
}

/// Variable is b; c = 1 - a - b.
template <typename Env>
typename Env::Ring sun_residual(const Env& env, int m, int n, const Rational& a) {
    using R = typename Env::Ring;
    R lhs{};
    for (int i = 0; i <= m; ++i) {
        lhs += env.euler(n + i, Rational(1), Rational(0)) * (binom(m, i) * int_pow(a, m - i));
    }
    R rhs{};
    const Rational c_offset = Rational(1) - a;
    for (int j = 0; j <= n; ++j) {
        rhs += env.euler(m + j, Rational(-1), c_offset) * (binom(n, j) * int_pow(a, n - j));
    }
    return lhs * sgn(m) - rhs * sgn(n);
}

/// P_{m,n,s}(x; a) with x the outer variable and a supplied by env.
template <typename Env>
Poly<typename Env::Ring> thm2_p(const Env& env, int m, int n, int s) {
    using R = typename Env::Ring;
    using P = Poly<R>;
    const R one = env.constant(Rational(1));
    const R a = env.variable();
    const R shift = env.constant(Rational(s + 1));
    const P first = pow(P::linear(one, a), m + 1) * pow(P::linear(one, a - shift), n + 1);
    const P second = pow(P::linear(one, -a), n + 1) * pow(P::linear(one, -a - shift), m + 1);
    return first + second * env.constant(sgn(m + n));
}

template <typename Env>
typename Env::Ring thm2_rhs(const Env& env, int m, int n, int s, int k) {
    using R = typename Env::Ring;
    const auto pk = derivative(thm2_p(env, m, n, s), static_cast<std::size_t>(k));
    R sum{};
    for (int l = 1; l <= s; ++l) {
        sum += pk(env.constant(Rational(l))) * sgn(l);
    }
    return sum;
}

template <typename Env>
typename Env::Ring thm2_residual(const Env& env, int m, int n, int s, int k) {
    using R = typename Env::Ring;
    const R rhs = thm2_rhs(env, m, n, s, k) * Rational(BigInt(2), factorial(k));
    const int delta = delta_sk(s, k);
    if (delta == 0) {
        return -rhs;
    }
    R first{};
    for (int i = 0; i <= m + 1; ++i) {
        const BigInt c = binomial(n + i + 1, k);
        if (c == 0) {
            continue;
        }
        first += env.euler(n + i - k + 1, Rational(1), Rational(0)) *
                 (int_pow(Rational(s + 1), m - i + 1) * binom(m + 1, i) * Rational(c));
    }
    R second{};
    for (int j = 0; j <= n + 1; ++j) {
        const BigInt c = binomial(m + j + 1, k);
        if (c == 0) {
            continue;
        }
        second += env.euler(m + j - k + 1, Rational(-1), Rational(0)) *
                  (int_pow(Rational(s + 1), n - j + 1) * binom(n + 1, j) * Rational(c));
    }
    const R lhs = (first + second * sgn(m + n)) * Rational(delta);
    return lhs - rhs;
}

template <typename Env>
typename Env::Ring thm3_residual(const Env& env, int m, int k) {
    using R = typename Env::Ring;
    R lhs{};
    for (int i = 0; i <= m; ++i) {
        if ((m + i) % 2 != 0) {
            continue;
        }
        lhs += env.euler(m + i - k, Rational(1), Rational(0)) * (binom(m, i) * binom(m + i, k));
    }
    R rhs{};
    for (int j = 0; j <= m; ++j) {
        rhs += env.affine_pow(Rational(1), Rational(0), m + j - k) *
               (sgn(m + j) * binom(m, j) * binom(m + j, k));
    }
    return lhs - rhs;
}

template <typename Env>
typename Env::Ring fersim_residual(const Env& env, int n) {
    return env.euler(n, Rational(1), Rational(1)) + env.euler(n, Rational(1), Rational(0)) -
           env.affine_pow(Rational(1), Rational(0), n) * Rational(2);
}

template <typename Env>
typename Env::Ring fersim3_residual(const Env& env, int n, int q) {
    using R = typename Env::Ring;
    // Alternating sum of F(a+j) + F(a+j-1) = 2 f(a+j-1), j = 1..q.
    R telescoped{};
    R rhs{};
    for (int j = 1; j <= q; ++j) {
        const Rational sign = sgn(j - 1);
        telescoped += (env.euler(n, Rational(1), Rational(j)) +
                       env.euler(n, Rational(1), Rational(j - 1))) *
                      sign;
        rhs += env.affine_pow(Rational(1), Rational(j - 1), n) * (sign * Rational(2));
    }
    const R closed = env.euler(n, Rational(1), Rational(q)) * sgn(q - 1) +
                     env.euler(n, Rational(1), Rational(0));
    return first_nonzero<R>({telescoped - rhs, telescoped - closed});
}

}  // namespace

std::string_view to_string(CheckerId id) {
    for (const auto& [key, name] : kCheckerNames) {
        if (key == id) {
            return name;
        }
    }
    throw std::logic_error("unnamed checker id");
}

CheckerId parse_checker_id(std::string_view name) {
    for (const auto& [key, label] : kCheckerNames) {
        if (name == label) {
            return key;
        }
    }
    throw std::invalid_argument("unknown checker id '" + std::string(name) + "'");
}

std::span<const CheckerId> all_checkers() { return kAllCheckers; }

std::string_view to_string(CheckMode mode) {
    switch (mode) {
        case CheckMode::symbolic:
            return "symbolic";
        case CheckMode::pointwise:
            return "pointwise";
        case CheckMode::valuation:
            return "valuation";
    }
    throw std::logic_error("bad mode");
}

const Rational& IdentityReport::param(std::string_view name) const {
    for (const auto& p : params) {
        if (p.name == name) {
            return p.value;
        }
    }
    throw std::out_of_range("report has no parameter '" + std::string(name) + "'");
}

bool same_outcome(const IdentityReport& lhs, const IdentityReport& rhs) {
    return lhs.id == rhs.id && lhs.params == rhs.params && lhs.mode == rhs.mode &&
           lhs.residual == rhs.residual && lhs.pass == rhs.pass;
}

std::string residual_to_string(const Residual& residual) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, RatPoly>) {
                return to_json(r);
            } else {
                return r.to_string();
            }
        },
        residual);
}

IdentityReport check_reflection(int n, CheckMode mode) {
    require(n >= 0, "reflection: n >= 0");
    return run_variable_check(CheckerId::reflection, params({{"n", n}}), mode, n,
                              [&](const auto& env) { return reflection_residual(env, n); });
}

IdentityReport check_complement(int n, CheckMode mode) {
    require(n >= 0, "complement: n >= 0");
    return run_variable_check(CheckerId::complement, params({{"n", n}}), mode, n,
                              [&](const auto& env) { return complement_residual(env, n); });
}

IdentityReport check_boundary(int n) {
    require(n >= 0, "boundary: n >= 0");
    const auto start = Clock::now();
    const Rational at_one = euler_value(n, Rational(1));
    const Rational at_zero = e0(n);
    const Rational reflected = at_one - sgn(n) * at_zero;
    const Rational special = n == 0 ? at_one - Rational(1) : (n % 2 == 0 ? at_zero : Rational(0));
    return rational_report(CheckerId::boundary, params({{"n", n}}),
                           first_nonzero<Rational>({reflected, special}), start);
}

IdentityReport check_gf_consistency(int n) {
    require(n >= 0, "gf_consistency: n >= 0");
    const auto start = Clock::now();
    RatPoly residual = euler_poly(n) - euler_polys_by_series(n).back();
    const bool pass = residual.is_zero();
    return IdentityReport{CheckerId::gf_consistency, params({{"n", n}}), CheckMode::symbolic,
                          std::move(residual), pass, millis_since(start)};
}

IdentityReport check_euler_alt_sum(int m, int n) {
    const auto start = Clock::now();
    return rational_report(CheckerId::euler_alt_sum, params({{"m", m}, {"n", n}}),
                           alt_power_sum(m, n) - alt_power_sum_closed(m, n), start);
}

IdentityReport check_bernoulli_power_sum(int m, int n) {
    const auto start = Clock::now();
    return rational_report(CheckerId::bernoulli_power_sum, params({{"m", m}, {"n", n}}),
                           power_sum(m, n) - power_sum_closed(m, n), start);
}

IdentityReport check_wsp7(int m, int n, CheckMode mode) {
    require(m >= 0 && n >= 0, "wsp7: m, n >= 0");
    return run_variable_check(CheckerId::wsp7, params({{"m", m}, {"n", n}}), mode, m + n,
                              [&](const auto& env) { return wsp7_residual(env, m, n); });
}

IdentityReport check_wsp9(int m, int n, CheckMode mode) {
    require(m >= 0 && n >= 0, "wsp9: m, n >= 0");
    return run_variable_check(CheckerId::wsp9, params({{"m", m}, {"n", n}}), mode, m + n + 1,
                              [&](const auto& env) { return wsp9_residual(env, m, n); });
}

IdentityReport check_thm1(int m, int n, int q, int k, CheckMode mode) {
    require(m >= 0 && n >= 0 && m + n > 0, "thm1: m, n >= 0 with m + n > 0");
    require(q >= 1, "thm1: q >= 1");
    require(k >= 1 && k % 2 == 1, "thm1: k must be odd and >= 1");
    return run_variable_check(CheckerId::thm1, params({{"m", m}, {"n", n}, {"q", q}, {"k", k}}),
                              mode, m + n + 2 * q,
                              [&](const auto& env) { return thm1_residual(env, m, n, q, k); });
}

IdentityReport check_cro0(int n, int q) {
    require(n >= 0, "cro0: n >= 0");
    require(q >= 1 && q % 2 == 1, "cro0: q must be odd and >= 1");
    const auto start = Clock::now();
    Rational sum;
    for (int i = 0; i <= n + q; ++i) {
        sum += binom(n + q, i) * Rational(falling_factorial(n + q + i, q)) * e0(n + i);
    }
    return rational_report(CheckerId::cro0, params({{"n", n}, {"q", q}}), sum, start);
}

IdentityReport check_cro1(int m, int n) {
    require(m >= 0 && n >= 0 && m + n > 0, "cro1: m, n >= 0 with m + n > 0");
    const auto start = Clock::now();
    Rational first;
    for (int i = 0; i <= m + 1; ++i) {
        first += binom(m + 1, i) * Rational(n + i + 1) * e0(n + i);
    }
    Rational second;
    for (int j = 0; j <= n + 1; ++j) {
        second += binom(n + 1, j) * Rational(m + j + 1) * e0(m + j);
    }
    return rational_report(CheckerId::cro1, params({{"m", m}, {"n", n}}),
                           first + sgn(m + n) * second, start);
}

IdentityReport check_cro2(int n) {
    require(n >= 0, "cro2: n >= 0");
    const auto start = Clock::now();
    Rational sum;
    for (int j = 0; j <= n + 1; ++j) {
        sum += binom(n + 1, j) * Rational(n + j + 1) * e0(n + j);
    }
    return rational_report(CheckerId::cro2, params({{"n", n}}), sum, start);
}

Rational euler_zero_via_recurrence(int n) {
    require(n >= 0, "recurrence: n >= 0");
    Rational sum;
    for (int j = 0; j <= n; ++j) {
        sum += binom(n + 1, j) * Rational(n + j + 1) * e0(n + j);
    }
    return -sum / Rational(2 * (n + 1));
}

IdentityReport check_recurrence_odd(int n) {
    require(n >= 0, "recurrence_odd: n >= 0");
    const auto start = Clock::now();
    Rational residual = euler_zero_via_recurrence(n) - e0(2 * n + 1);
    if (residual.is_zero()) {
        // Only odd-index terms should contribute.
        for (int j = 0; j <= n; ++j) {
            if ((n + j) % 2 == 0 && n + j >= 2 && !e0(n + j).is_zero()) {
                residual = e0(n + j);
                break;
            }
        }
    }
    return rational_report(CheckerId::recurrence_odd, params({{"n", n}}), residual, start);
}

IdentityReport check_sun(int m, int n, const Rational& a, const std::optional<Rational>& b,
                         CheckMode mode) {
    require(m >= 0 && n >= 0, "sun: m, n >= 0");
    if (b) {
        const auto start = Clock::now();
        Rational residual = sun_residual(PointEnv{*b}, m, n, a);
        const bool pass = residual.is_zero();
        return IdentityReport{CheckerId::sun,
                              params({{"m", m}, {"n", n}, {"a", a}, {"b", *b}}),
                              CheckMode::pointwise,
                              std::move(residual),
                              pass,
                              millis_since(start)};
    }
    return run_variable_check(CheckerId::sun, params({{"m", m}, {"n", n}, {"a", a}}), mode, m + n,
                              [&](const auto& env) { return sun_residual(env, m, n, a); });
}

IdentityReport check_sun_cor(int m, int n) {
    require(m >= 0 && n >= 0, "sun_cor: m, n >= 0");
    const auto start = Clock::now();
    Rational lhs;
    for (int i = 0; i <= m; ++i) {
        lhs += binom(m, i) * euler_number(n + i) / int_pow(Rational(2), n + i);
    }
    Rational rhs;
    for (int j = 0; j <= n; ++j) {
        rhs += binom(n, j) * euler_value(m + j, Rational(-1, 2));
    }
    return rational_report(CheckerId::sun_cor, params({{"m", m}, {"n", n}}),
                           sgn(m) * lhs - sgn(n) * rhs, start);
}

int delta_sk(int s, int k) { return sign_pow(s) - sign_pow(k); }

IdentityReport check_thm2(int m, int n, int s, int k, CheckMode mode) {
    require(m >= 0 && n >= 0 && m + n > 0, "thm2: m, n >= 0 with m + n > 0");
    require(s >= 1 && k >= 0, "thm2: s >= 1 and k >= 0");
    return run_variable_check(CheckerId::thm2, params({{"m", m}, {"n", n}, {"s", s}, {"k", k}}),
                              mode, m + n + 2,
                              [&](const auto& env) { return thm2_residual(env, m, n, s, k); });
}

RatPoly thm2_rhs_sum(int m, int n, int s, int k) {
    require(m >= 0 && n >= 0 && s >= 1 && k >= 0, "thm2_rhs_sum: bad parameters");
    return thm2_rhs(SymbolicEnv{}, m, n, s, k);
}

IdentityReport check_thm2_cro1(int n, int k) {
    require(n >= 0 && k >= 0, "thm2_cro1: n, k >= 0");
    const auto start = Clock::now();
    Rational sum;
    for (int i = 0; i <= n + 1; ++i) {
        const BigInt c = binomial(n + i + 1, k);
        if (c == 0) {
            continue;
        }
        Rational term = sgn(i) / int_pow(Rational(2), i) * binom(n + 1, i) * Rational(c);
        if (k % 2 == 0) {
            term *= sgn(i) * e0(n + i - k + 1) + sgn(n);
        }
        sum += term;
    }
    return rational_report(CheckerId::thm2_cro1, params({{"n", n}, {"k", k}}), sum, start);
}

IdentityReport check_thm2_cro2(int n, int k) {
    require(n >= 0 && k >= 0, "thm2_cro2: n, k >= 0");
    const auto start = Clock::now();
    Rational sum;
    for (int i = 0; i <= n + 1; ++i) {
        const BigInt c = binomial(n + i + 1, k);
        if (c == 0) {
            continue;
        }
        const Rational weight =
            sgn(i) * int_pow(Rational(3), n - i + 1) * binom(n + 1, i) * Rational(c);
        const Rational mersenne = int_pow(Rational(2), n + i - k + 1) - Rational(1);
        if (k % 2 == 1) {
            sum += weight * (sgn(i) * e0(n + i - k + 1) + sgn(n) * mersenne);
        } else {
            sum += weight * mersenne;
        }
    }
    return rational_report(CheckerId::thm2_cro2, params({{"n", n}, {"k", k}}), sum, start);
}

IdentityReport check_thm3(int m, int k, CheckMode mode) {
    require(m >= 0 && k >= 0 && k <= m, "thm3: 0 <= k <= m");
    return run_variable_check(CheckerId::thm3, params({{"m", m}, {"k", k}}), mode, 2 * m,
                              [&](const auto& env) { return thm3_residual(env, m, k); });
}

IdentityReport check_thm3_1(int part, int m, int k, int aux) {
    const auto start = Clock::now();
    require(m >= 0 && k >= 0, "thm3_1: m, k >= 0");
    Rational lhs;
    Rational rhs;
    CheckerId id{};
    std::vector<Param> ps;
    switch (part) {
        case 1:
            require(k <= m, "thm3_1 part 1: 0 <= k <= m");
            id = CheckerId::thm3_1a;
            ps = params({{"m", m}, {"k", k}});
            for (int i = 0; i <= m; ++i) {
                if ((m + i) % 2 == 0) {
                    lhs += binom(m, i) * binom(m + i, k) * binom(m + i - k, m - k) * e0(i);
                }
            }
            rhs = sgn(m) * binom(m, k);
            break;
        case 2:
            require(k <= m - 1, "thm3_1 part 2: 0 <= k <= m - 1");
            id = CheckerId::thm3_1b;
            ps = params({{"m", m}, {"k", k}});
            for (int i = 0; i <= m; ++i) {
                if ((m + i) % 2 == 0) {
                    lhs += binom(m, i) * binom(m + i, k) * binom(m + i - k, m - k - 1) * e0(i + 1);
                }
            }
            break;
        case 3:
            require(aux >= 0 && aux <= m - k - 1, "thm3_1 part 3: 0 <= l <= m - k - 1");
            id = CheckerId::thm3_1c;
            ps = params({{"m", m}, {"k", k}, {"l", aux}});
            for (int i = 0; i <= m; ++i) {
                if ((m + i) % 2 == 0) {
                    lhs += binom(m, i) * binom(m + i, k) * binom(m + i - k, aux) *
                           e0(m + i - k - aux);
                }
            }
            break;
        case 4:
            require(aux >= 1 && aux <= m && k <= m, "thm3_1 part 4: 1 <= j <= m, 0 <= k <= m");
            id = CheckerId::thm3_1d;
            ps = params({{"m", m}, {"k", k}, {"j", aux}});
            for (int i = aux; i <= m; ++i) {
                if ((m + i) % 2 == 0) {
                    lhs += binom(m, i) * binom(m + i, k) * binom(m + i - k, m + aux - k) *
                           e0(i - aux);
                }
            }
            rhs = sgn(m + aux) * binom(m, aux) * binom(m + aux, k);
            break;
        default:
            throw std::invalid_argument("thm3_1: part must be 1..4");
    }
    return rational_report(id, std::move(ps), lhs - rhs, start);
}

IdentityReport check_rem2_1(int m) {
    require(m >= 3, "rem2_1: m >= 3");
    const auto start = Clock::now();
    Rational sum;
    for (int i = 0; i <= m; ++i) {
        sum += binom(m, i) * Rational(falling_factorial(m + i, 3)) * e0(m + i - 3);
    }
    return rational_report(CheckerId::rem2_1, params({{"m", m}}), sum, start);
}

IdentityReport check_fersim(int n, CheckMode mode) {
    require(n >= 0, "fersim: n >= 0");
    return run_variable_check(CheckerId::fersim, params({{"n", n}}), mode, n,
                              [&](const auto& env) { return fersim_residual(env, n); });
}

IdentityReport check_fersim3(int n, int q, CheckMode mode) {
    require(n >= 0 && q >= 1, "fersim3: n >= 0, q >= 1");
    return run_variable_check(CheckerId::fersim3, params({{"n", n}, {"q", q}}), mode, n,
                              [&](const auto& env) { return fersim3_residual(env, n, q); });
}

IdentityReport check_witt(int n, const Rational& a, long p, int precision, bool naive,
                          std::int64_t budget) {
    require(n >= 0, "witt: n >= 0");
    const auto start = Clock::now();
    Valuation defect = witt_defect(n, a, p, precision);
    bool pass = defect.at_least(precision);
    if (naive) {
        const RatPoly f = pow(RatPoly::linear(Rational(1), a), static_cast<unsigned long>(n));
        const Rational direct = fermionic_sum_naive(f, p, precision, {budget, 1});
        const Rational closed = fermionic_sum_closed(n, a, prime_power(p, precision));
        if (direct != closed) {
            pass = false;
            defect = valuation(direct - closed, p);
        }
    }
    return IdentityReport{CheckerId::witt,
                          params({{"n", n},
                                  {"a", a},
                                  {"p", Rational(BigInt(p))},
                                  {"N", precision},
                                  {"naive", naive ? 1 : 0}}),
                          CheckMode::valuation,
                          defect,
                          pass,
                          millis_since(start)};
}

IdentityReport check_lem1(const RatPoly& f, long p, int precision, std::int64_t budget) {
    const auto start = Clock::now();
    const Valuation defect = lem1_defect(f, p, precision, budget).overall();
    const long degree = f.degree() ? static_cast<long>(*f.degree()) : -1;
    return IdentityReport{CheckerId::lem1,
                          params({{"p", Rational(BigInt(p))}, {"N", precision}, {"degree", degree}}),
                          CheckMode::valuation,
                          defect,
                          defect.at_least(precision),
                          millis_since(start)};
}

RatPoly random_p_integral_poly(std::uint64_t seed, long p, int max_degree) {
    require(max_degree >= 0, "random_p_integral_poly: max_degree >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree_dist(0, max_degree);
    std::uniform_int_distribution<int> num_dist(-20, 20);
    constexpr std::array<long, 10> kDenominators{1, 1, 1, 2, 4, 8, 3, 5, 7, 11};
    std::uniform_int_distribution<std::size_t> den_dist(0, kDenominators.size() - 1);
    const int degree = degree_dist(rng);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
        long den = kDenominators[den_dist(rng)];
        if (den % p == 0) {
            den = 2;
        }
        coeffs.emplace_back(BigInt(num_dist(rng)), BigInt(den));
    }
    return RatPoly(std::move(coeffs));
}

Range Range::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
            throw std::invalid_argument("malformed range '" + std::string(text) + "'");
        }
        return value;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw std::invalid_argument("empty range '" + std::string(text) + "'");
    }
    return r;
}

std::vector<IdentityReport> run_suite(std::span<const CheckerId> ids, const SuiteGrid& grid,
                                      unsigned workers) {
    const Range m_range = grid.m.value_or(Range{0, 6});
    const Range n_range = grid.n.value_or(Range{0, 6});
    const Range q_range = grid.q.value_or(Range{1, 3});
    const Range k_range = grid.k.value_or(Range{1, 3});
    const Range s_range = grid.s.value_or(Range{1, 3});
    const Range precision_range = grid.precision.value_or(Range{1, 3});

    std::vector<std::function<IdentityReport()>> tasks;
    auto add = [&tasks](auto fn) { tasks.emplace_back(std::move(fn)); };
    // k values for the thm3 family: the grid's k if set, else 0..m.
    auto k_values = [&](int lo, int hi) {
        const Range r = grid.k.value_or(Range{lo, hi});
        return Range{std::max(lo, r.lo), std::min(hi, r.hi)};
    };

    for (const CheckerId id : ids) {
        switch (id) {
            case CheckerId::reflection:
            case CheckerId::complement:
            case CheckerId::boundary:
            case CheckerId::gf_consistency:
            case CheckerId::fersim:
            case CheckerId::cro2:
            case CheckerId::recurrence_odd:
                for (int n = n_range.lo; n <= n_range.hi; ++n) {
                    add([id, n] {
                        switch (id) {
                            case CheckerId::reflection:
                                return check_reflection(n);
                            case CheckerId::complement:
                                return check_complement(n);
                            case CheckerId::boundary:
                                return check_boundary(n);
                            case CheckerId::gf_consistency:
                                return check_gf_consistency(n);
                            case CheckerId::fersim:
                                return check_fersim(n);
                            case CheckerId::cro2:
                                return check_cro2(n);
                            default:
                                return check_recurrence_odd(n);
                        }
                    });
                }
                break;
            case CheckerId::euler_alt_sum:
            case CheckerId::bernoulli_power_sum:
                for (int m = std::max(1, m_range.lo); m <= m_range.hi; ++m) {
                    for (int n = std::max(grid.full_domain ? 0 : 1, n_range.lo); n <= n_range.hi; ++n) {
                        add([id, m, n] {
                            return id == CheckerId::euler_alt_sum ? check_euler_alt_sum(m, n)
                                                                  : check_bernoulli_power_sum(m, n);
                        });
                    }
                }
                break;
            case CheckerId::wsp7:
            case CheckerId::wsp9:
            case CheckerId::cro1:
            case CheckerId::sun_cor:
                for (int m = m_range.lo; m <= m_range.hi; ++m) {
                    for (int n = n_range.lo; n <= n_range.hi; ++n) {
                        if (id == CheckerId::cro1 && m + n == 0) {
                            continue;
                        }
                        add([id, m, n] {
                            switch (id) {
                                case CheckerId::wsp7:
                                    return check_wsp7(m, n);
                                case CheckerId::wsp9:
                                    return check_wsp9(m, n);
                                case CheckerId::cro1:
                                    return check_cro1(m, n);
                                default:
                                    return check_sun_cor(m, n);
                            }
                        });
                    }
                }
                break;
            case CheckerId::thm1:
                for (int m = m_range.lo; m <= m_range.hi; ++m) {
                    for (int n = n_range.lo; n <= n_range.hi; ++n) {
                        if (m + n == 0) {
                            continue;
                        }
                        for (int q = std::max(1, q_range.lo); q <= q_range.hi; ++q) {
                            for (int k = k_range.lo; k <= k_range.hi; ++k) {
                                if (k % 2 == 1) {
                                    add([=] { return check_thm1(m, n, q, k); });
                                }
                            }
                        }
                    }
                }
                break;
            case CheckerId::cro0:
                for (int n = n_range.lo; n <= n_range.hi; ++n) {
                    for (int q = std::max(1, q_range.lo); q <= q_range.hi; ++q) {
                        if (q % 2 == 1) {
                            add([=] { return check_cro0(n, q); });
                        }
                    }
                }
                break;
            case CheckerId::sun:
                for (int m = m_range.lo; m <= m_range.hi; ++m) {
                    for (int n = n_range.lo; n <= n_range.hi; ++n) {
                        for (const Rational& a : grid.points) {
                            add([=] { return check_sun(m, n, a); });
                        }
                    }
                }
                break;
            case CheckerId::thm2:
                for (int m = m_range.lo; m <= m_range.hi; ++m) {
                    for (int n = n_range.lo; n <= n_range.hi; ++n) {
                        if (m + n == 0) {
                            continue;
                        }
                        for (int s = std::max(1, s_range.lo); s <= s_range.hi; ++s) {
                            for (int k = k_range.lo; k <= k_range.hi; ++k) {
                                add([=] { return check_thm2(m, n, s, k); });
                            }
                        }
                    }
                }
                break;
            case CheckerId::thm2_cro1:
            case CheckerId::thm2_cro2:
                for (int n = n_range.lo; n <= n_range.hi; ++n) {
                    for (int k = k_range.lo; k <= k_range.hi; ++k) {
                        add([=] {
                            return id == CheckerId::thm2_cro1 ? check_thm2_cro1(n, k)
                                                              : check_thm2_cro2(n, k);
                        });
                    }
                }
                break;
            case CheckerId::thm3:
            case CheckerId::thm3_1a:
            case CheckerId::thm3_1b:
            case CheckerId::thm3_1c:
            case CheckerId::thm3_1d:
                for (int m = m_range.lo; m <= m_range.hi; ++m) {
                    const int k_hi = id == CheckerId::thm3_1b ? m - 1 : m;
                    const Range ks = k_values(0, k_hi);
                    for (int k = ks.lo; k <= ks.hi; ++k) {
                        switch (id) {
                            case CheckerId::thm3:
                                add([=] { return check_thm3(m, k); });
                                break;
                            case CheckerId::thm3_1a:
                                add([=] { return check_thm3_1(1, m, k); });
                                break;
                            case CheckerId::thm3_1b:
                                add([=] { return check_thm3_1(2, m, k); });
                                break;
                            case CheckerId::thm3_1c:
                                for (int l = 0; l <= m - k - 1; ++l) {
                                    add([=] { return check_thm3_1(3, m, k, l); });
                                }
                                break;
                            default:
                                for (int j = 1; j <= m; ++j) {
                                    add([=] { return check_thm3_1(4, m, k, j); });
                                }
                                break;
                        }
                    }
                }
                break;
            case CheckerId::rem2_1:
                for (int m = std::max(3, m_range.lo); m <= m_range.hi; ++m) {
                    add([=] { return check_rem2_1(m); });
                }
                break;
            case CheckerId::fersim3:
                for (int n = n_range.lo; n <= n_range.hi; ++n) {
                    for (int q = std::max(1, q_range.lo); q <= q_range.hi; ++q) {
                        add([=] { return check_fersim3(n, q); });
                    }
                }
                break;
            case CheckerId::witt:
                for (const long p : grid.primes) {
                    require_odd_prime(p);
                    for (int N = std::max(1, precision_range.lo); N <= precision_range.hi; ++N) {
                        const bool naive = grid.naive && prime_power(p, N) <= BigInt(static_cast<long>(grid.budget));
                        for (int n = n_range.lo; n <= n_range.hi; ++n) {
                            for (const Rational& a : grid.points) {
                                if (a.denominator() % p == 0) {
                                    continue;
                                }
                                const std::int64_t budget = grid.budget;
                                add([=] { return check_witt(n, a, p, N, naive, budget); });
                            }
                        }
                    }
                }
                break;
            case CheckerId::lem1:
                for (const long p : grid.primes) {
                    require_odd_prime(p);
                    for (int N = std::max(1, precision_range.lo); N <= precision_range.hi; ++N) {
                        if (prime_power(p, N) > BigInt(static_cast<long>(grid.budget))) {
                            continue;
                        }
                        for (int sample = 0; sample < grid.lem1_samples; ++sample) {
                            const std::uint64_t seed =
                                grid.seed * 1000003ULL + static_cast<std::uint64_t>(p) * 7919ULL +
                                static_cast<std::uint64_t>(sample);
                            const std::int64_t budget = grid.budget;
                            add([=] {
                                IdentityReport r =
                                    check_lem1(random_p_integral_poly(seed, p, 8), p, N, budget);
                                r.params.push_back(Param{"sample", sample});
                                return r;
                            });
                        }
                    }
                }
                break;
        }
    }

    std::vector<IdentityReport> reports(tasks.size(),
                                        IdentityReport{CheckerId::reflection, {}, CheckMode::symbolic,
                                                       Rational(0), false, 0.0});
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                reports[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        const unsigned count = std::max(1U, workers);
        std::vector<std::jthread> threads;
        for (unsigned w = 1; w < count; ++w) {
            threads.emplace_back(worker);
        }
        worker();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    auto key = [](const IdentityReport& r) {
        std::vector<Rational> values;
        values.reserve(r.params.size());
        for (const auto& p : r.params) {
            values.push_back(p.value);
        }
        return values;
    };
    std::stable_sort(reports.begin(), reports.end(), [&](const auto& lhs, const auto& rhs) {
        if (lhs.id != rhs.id) {
            return lhs.id < rhs.id;
        }
        return key(lhs) < key(rhs);
    });
    return reports;
}

}  // namespace eulerpoly

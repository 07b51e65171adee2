#pragma once

#include "eulerpoly/padic.hpp"
#include "eulerpoly/poly.hpp"
#include "eulerpoly/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eulerpoly {

/// Every statement the suite can verify. Declaration order is the canonical
/// report order.
enum class CheckerId {
    reflection,
    complement,
    boundary,
    gf_consistency,
    euler_alt_sum,
    bernoulli_power_sum,
    wsp7,
    wsp9,
    thm1,
    cro0,
    cro1,
    cro2,
    recurrence_odd,
    sun,
    sun_cor,
    thm2,
    thm2_cro1,
    thm2_cro2,
    thm3,
    thm3_1a,
    thm3_1b,
    thm3_1c,
    thm3_1d,
    rem2_1,
    fersim,
    fersim3,
    witt,
    lem1,
};

std::string_view to_string(CheckerId id);
/// Throws std::invalid_argument for an unknown name.
CheckerId parse_checker_id(std::string_view name);
std::span<const CheckerId> all_checkers();

enum class CheckMode { symbolic, pointwise, valuation };

std::string_view to_string(CheckMode mode);

struct Param {
    std::string name;
    Rational value;

    friend bool operator==(const Param&, const Param&) = default;
};

using Residual = std::variant<RatPoly, Rational, Valuation>;

struct IdentityReport {
    CheckerId id;
    std::vector<Param> params;
    CheckMode mode;
    Residual residual;
    bool pass;
    double elapsed_ms = 0.0;

    /// Looks up a parameter by name; throws std::out_of_range when absent.
    const Rational& param(std::string_view name) const;
};

/// Equality of everything except elapsed_ms.
bool same_outcome(const IdentityReport& lhs, const IdentityReport& rhs);

std::string residual_to_string(const Residual& residual);

// Checkers whose sides are polynomials in a accept CheckMode::pointwise, which
// evaluates both sides at degree+1 rational points 0, 1, -1, 2, -2, ... instead
// of expanding in a. The pointwise residual is the first nonzero sample, or 0.

/// E_n(1-a) = (-1)^n E_n(a).
IdentityReport check_reflection(int n, CheckMode mode = CheckMode::symbolic);
/// (-1)^n E_n(-a) + E_n(a) = 2 a^n.
IdentityReport check_complement(int n, CheckMode mode = CheckMode::symbolic);
/// E_n(1) = (-1)^n E_n(0), E_0(1) = 1, and E_n(0) = 0 for even n >= 2.
IdentityReport check_boundary(int n);
/// Recurrence E_n against the generating-function quotient.
IdentityReport check_gf_consistency(int n);
/// Direct sum over j = 1..m against the closed form. At n = 0 the closed forms
/// pick up an extra 0^0 = 1 from j = 0 and the residual is -1, so run_suite
/// starts these two at n = 1.
IdentityReport check_euler_alt_sum(int m, int n);
IdentityReport check_bernoulli_power_sum(int m, int n);

IdentityReport check_wsp7(int m, int n, CheckMode mode = CheckMode::symbolic);
/// Also checks the rewriting of the right-hand side through the complement
/// identity; a failure there is reported as a nonzero residual.
IdentityReport check_wsp9(int m, int n, CheckMode mode = CheckMode::symbolic);

/// Requires m + n > 0, q >= 1 and odd k >= 1 (even k throws std::invalid_argument).
IdentityReport check_thm1(int m, int n, int q, int k, CheckMode mode = CheckMode::symbolic);

/// m = n specialization of thm1 at a = 0 with k = q; q must be odd.
IdentityReport check_cro0(int n, int q);
IdentityReport check_cro1(int m, int n);
IdentityReport check_cro2(int n);

/// Right-hand side of E_{2n+1}(0) = -1/(2(n+1)) sum_{j<=n} C(n+1,j)(n+j+1) E_{n+j}(0).
Rational euler_zero_via_recurrence(int n);
/// Recurrence value against E_{2n+1}(0); also requires every even-index
/// summand E_{n+j}(0), n+j >= 2, to vanish.
IdentityReport check_recurrence_odd(int n);

/// With c = 1 - a - b. When b is empty the check is symbolic in b.
IdentityReport check_sun(int m, int n, const Rational& a, const std::optional<Rational>& b = {},
                         CheckMode mode = CheckMode::symbolic);
IdentityReport check_sun_cor(int m, int n);

/// (-1)^s - (-1)^k.
int delta_sk(int s, int k);

/// Requires m + n > 0, s >= 1, k >= 0.
IdentityReport check_thm2(int m, int n, int s, int k, CheckMode mode = CheckMode::symbolic);
/// Sum_{l=1}^{s} (-1)^l P^{(k)}_{m,n,s}(l; a), as a polynomial in a.
RatPoly thm2_rhs_sum(int m, int n, int s, int k);
IdentityReport check_thm2_cro1(int n, int k);
IdentityReport check_thm2_cro2(int n, int k);

/// Requires 0 <= k <= m.
IdentityReport check_thm3(int m, int k, CheckMode mode = CheckMode::symbolic);
/// part 1..4; aux is l for part 3 and j for part 4, ignored otherwise.
IdentityReport check_thm3_1(int part, int m, int k, int aux = 0);
/// Requires m >= 3.
IdentityReport check_rem2_1(int m);

/// E_n(a+1) + E_n(a) = 2 a^n.
IdentityReport check_fersim(int n, CheckMode mode = CheckMode::symbolic);
/// (-1)^{q-1} E_n(a+q) + E_n(a) = 2 sum_{i<q} (-1)^i (a+i)^n, with the left side
/// assembled by alternately adding and subtracting single-step instances.
IdentityReport check_fersim3(int n, int q, CheckMode mode = CheckMode::symbolic);

/// witt_defect >= N; with `naive`, also the p^N-term sum equals the closed form.
IdentityReport check_witt(int n, const Rational& a, long p, int precision, bool naive = false,
                          std::int64_t budget = kDefaultNaiveBudget);
IdentityReport check_lem1(const RatPoly& f, long p, int precision,
                          std::int64_t budget = kDefaultNaiveBudget);

/// Random polynomial of degree <= max_degree with p-integral coefficients
/// (small numerators, denominators in {1, 2, 4, ...} times primes other than p).
RatPoly random_p_integral_poly(std::uint64_t seed, long p, int max_degree);

/// Inclusive integer interval "lo..hi".
struct Range {
    int lo = 0;
    int hi = 0;

    /// Accepts "lo..hi" or a single integer. Throws std::invalid_argument.
    static Range parse(std::string_view text);
    friend bool operator==(const Range&, const Range&) = default;
};

/// Parameter grid for run_suite. Unset ranges take the desk defaults:
/// m, n in 0..6; q, k, s in 1..3; precision in 1..3. The thm3 family sweeps
/// every admissible k unless k is set. The power-sum checkers start at n = 1
/// unless full_domain is set.
struct SuiteGrid {
    std::optional<Range> m, n, q, k, s, precision;
    std::vector<Rational> points{Rational(0), Rational(1), Rational(1, 2), Rational(-1),
                                 Rational(-2, 3)};
    std::vector<long> primes{3, 5, 7};
    std::int64_t budget = kDefaultNaiveBudget;
    bool naive = true;
    int lem1_samples = 10;
    /// Also run n = 0 for the power-sum closed forms, where they fail.
    bool full_domain = false;
    std::uint64_t seed = 20240601;
};

/// Reports for every admissible parameter combination of every id, in
/// canonical order (id, then parameters). Output is independent of `workers`.
std::vector<IdentityReport> run_suite(std::span<const CheckerId> ids, const SuiteGrid& grid,
                                      unsigned workers = 1);

}  // namespace eulerpoly

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "eulerpoly/cli.hpp"
#include "eulerpoly/euler.hpp"
#include "eulerpoly/identities.hpp"
#include "eulerpoly/padic.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace eulerpoly;

namespace {

struct Outcome {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            failures.push_back(what);
        }
    }
};

bool zero_residual(const IdentityReport& r) {
    if (const auto* p = std::get_if<RatPoly>(&r.residual)) {
        return p->is_zero();
    }
    if (const auto* q = std::get_if<Rational>(&r.residual)) {
        return q->is_zero();
    }
    return false;
}

void expect_identity(Outcome& o, const IdentityReport& r) {
    std::string label(to_string(r.id));
    for (const auto& p : r.params) {
        label += " " + p.name + "=" + p.value.to_string();
    }
    o.expect(r.pass && zero_residual(r), label + " residual " + residual_to_string(r.residual));
}

template <typename E>
bool throws(const std::function<void()>& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

int cli_exit(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    return run_cli(args, out, err);
}

RatPoly coeffs(std::initializer_list<Rational> c) { return RatPoly(std::vector<Rational>(c)); }

// 1. Value table.
void value_table(Outcome& o) {
    o.expect(euler_poly(0) == coeffs({Rational(1)}), "E_0");
    o.expect(euler_poly(1) == coeffs({Rational(-1, 2), Rational(1)}), "E_1");
    o.expect(euler_poly(2) == coeffs({Rational(0), Rational(-1), Rational(1)}), "E_2");
    o.expect(euler_poly(3) == coeffs({Rational(1, 4), Rational(0), Rational(-3, 2), Rational(1)}), "E_3");

    const std::vector<long> frozen{1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521};
    const auto oracle_numbers = oracle::euler_numbers_sech(10);
    for (int n = 0; n <= 10; ++n) {
        const auto i = static_cast<std::size_t>(n);
        o.expect(oracle_numbers[i] == Rational(frozen[i]), "sech oracle E_" + std::to_string(n));
        o.expect(euler_number(n) == oracle_numbers[i], "euler_number " + std::to_string(n));
        if (n % 2 == 1) {
            o.expect(euler_number(n).is_zero(), "odd Euler number " + std::to_string(n));
        }
    }
}

// 2. Classical power-sum formulas.
void classical_formulas(Outcome& o) {
    for (int m = 1; m <= 50; ++m) {
        for (int n = 0; n <= 10; ++n) {
            const std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            const Rational alt = alt_power_sum(m, n);
            const Rational alt_closed = alt_power_sum_closed(m, n);
            o.expect(alt == alt_closed,
                     "alternating" + at + ": direct " + alt.to_string() + " closed " + alt_closed.to_string());
            const Rational plain = power_sum(m, n);
            const Rational plain_closed = power_sum_closed(m, n);
            o.expect(plain == plain_closed,
                     "bernoulli" + at + ": direct " + plain.to_string() + " closed " + plain_closed.to_string());
        }
    }
}

// 3. Identity suite, symbolic mode.
void identity_suite(Outcome& o) {
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            expect_identity(o, check_wsp7(m, n));
            expect_identity(o, check_wsp9(m, n));
        }
    }
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
            if (m + n == 0) {
                continue;
            }
            for (int q = 1; q <= 4; ++q) {
                for (const int k : {1, 3, 5}) {
                    expect_identity(o, check_thm1(m, n, q, k));
                }
            }
        }
    }
    for (int n = 0; n <= 10; ++n) {
        for (const int q : {1, 3, 5}) {
            expect_identity(o, check_cro0(n, q));
        }
    }
    for (int m = 0; m <= 12; ++m) {
        for (int n = 0; n <= 12; ++n) {
            if (m + n > 0) {
                expect_identity(o, check_cro1(m, n));
            }
        }
    }
    for (int n = 0; n <= 20; ++n) {
        expect_identity(o, check_cro2(n));
        expect_identity(o, check_recurrence_odd(n));
    }
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            for (const Rational& a : {Rational(0), Rational(1), Rational(1, 2), Rational(-1)}) {
                expect_identity(o, check_sun(m, n, a));
            }
        }
    }
    for (int m = 0; m <= 10; ++m) {
        for (int n = 0; n <= 10; ++n) {
            expect_identity(o, check_sun_cor(m, n));
        }
    }
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            if (m + n == 0) {
                continue;
            }
            for (int s = 1; s <= 4; ++s) {
                for (int k = 0; k <= 4; ++k) {
                    expect_identity(o, check_thm2(m, n, s, k));
                    if (delta_sk(s, k) == 0) {
                        o.expect(thm2_rhs_sum(m, n, s, k).is_zero(),
                                 "thm2 rhs with delta 0 at m=" + std::to_string(m) + " n=" +
                                     std::to_string(n) + " s=" + std::to_string(s) + " k=" +
                                     std::to_string(k));
                    }
                }
            }
        }
    }
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= 6; ++k) {
            expect_identity(o, check_thm2_cro1(n, k));
            expect_identity(o, check_thm2_cro2(n, k));
        }
    }
    for (int m = 0; m <= 10; ++m) {
        for (int k = 0; k <= m; ++k) {
            expect_identity(o, check_thm3(m, k));
            expect_identity(o, check_thm3_1(1, m, k));
            if (k <= m - 1) {
                expect_identity(o, check_thm3_1(2, m, k));
            }
            for (int l = 0; l <= m - k - 1; ++l) {
                expect_identity(o, check_thm3_1(3, m, k, l));
            }
            for (int j = 1; j <= m; ++j) {
                expect_identity(o, check_thm3_1(4, m, k, j));
            }
        }
    }
    for (int m = 3; m <= 15; ++m) {
        expect_identity(o, check_rem2_1(m));
    }
}

// 4. Specialization cross-links.
void cross_links(Outcome& o) {
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            const std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            if (m + n > 0) {
                o.expect(check_thm1(m, n, 1, 1).residual == check_wsp9(m, n).residual, "thm1 vs wsp9" + at);
            }
            o.expect(check_sun(m, n, Rational(1)).residual == check_wsp7(m, n).residual, "sun vs wsp7" + at);
        }
    }
    // l = 1 needs m >= 2, so the link starts at n = 1.
    for (int n = 1; n <= 20; ++n) {
        const auto part3 = check_thm3_1(3, n + 1, 0, 1);
        const auto cro2 = check_cro2(n);
        o.expect(part3.pass == cro2.pass && part3.residual == cro2.residual,
                 "thm3_1c vs cro2 n=" + std::to_string(n));
    }
}

// 5. p-adic convergence.
void padic_convergence(Outcome& o) {
    for (const long p : {3L, 5L, 7L}) {
        for (int precision = 1; precision <= 5; ++precision) {
            const BigInt q = prime_power(p, precision);
            const bool naive_in_budget = q <= kDefaultNaiveBudget;
            for (int n = 0; n <= 8; ++n) {
                for (const Rational& a : {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)}) {
                    const std::string at = " p=" + std::to_string(p) + " N=" + std::to_string(precision) +
                                           " n=" + std::to_string(n) + " a=" + a.to_string();
                    if (p == 3 && a == Rational(-2, 3)) {
                        o.expect(throws<DenominatorNotInvertible>([&] { witt_defect(n, a, p, precision); }),
                                 "-2/3 rejected" + at);
                        continue;
                    }
                    const Valuation defect = witt_defect(n, a, p, precision);
                    o.expect(defect.at_least(precision), "witt defect " + defect.to_string() + at);
                    if (naive_in_budget) {
                        const RatPoly f = pow(RatPoly::linear(Rational(1), a), static_cast<unsigned long>(n));
                        o.expect(fermionic_sum_naive(f, p, precision) == fermionic_sum_closed(n, a, q),
                                 "naive vs closed" + at);
                    }
                }
            }
        }
        for (std::uint64_t sample = 0; sample < 50; ++sample) {
            const RatPoly f = random_p_integral_poly(1000 * static_cast<std::uint64_t>(p) + sample, p, 8);
            for (int precision = 1; precision <= 5; ++precision) {
                const Valuation defect = lem1_defect(f, p, precision).overall();
                o.expect(defect.at_least(precision), "lem1 p=" + std::to_string(p) + " N=" +
                                                         std::to_string(precision) + " f=" + to_human(f) +
                                                         " defect " + defect.to_string());
            }
        }
    }
}

// 6. Error paths.
void error_paths(Outcome& o) {
    o.expect(throws<InvalidPrime>([] { require_odd_prime(2); }), "require_odd_prime(2)");
    o.expect(throws<InvalidPrime>([] { PadicInt(2, 3, BigInt(1)); }), "PadicInt p=2");
    o.expect(throws<InvalidPrime>([] { padic_from_rational(Rational(1, 3), 2, 2); }), "from_rational p=2");
    o.expect(throws<InvalidPrime>([] { witt_defect(1, Rational(0), 2, 2); }), "witt_defect p=2");
    o.expect(throws<InvalidPrime>([] { lem1_defect(RatPoly::variable(), 2, 2); }), "lem1_defect p=2");
    for (int precision = 1; precision <= 5; ++precision) {
        o.expect(throws<DenominatorNotInvertible>([=] { padic_from_rational(Rational(1, 3), 3, precision); }),
                 "padic_from_rational(1/3, 3, " + std::to_string(precision) + ")");
    }
    o.expect(cli_exit({"witt", "--p", "2", "--precision", "2", "--n", "1"}) == kExitUsage, "cli witt p=2");
    o.expect(cli_exit({"verify", "cro2", "--n", "0..20"}) == kExitPass, "verify exit 0");
    o.expect(cli_exit({"verify", "euler_alt_sum", "--n", "0..1", "--full-domain"}) == kExitFail,
             "verify exit 1");
    o.expect(cli_exit({"verify", "nosuch"}) == kExitUsage, "verify unknown id exit 2");
    o.expect(cli_exit({"verify", "cro2", "--n", "7..2"}) == kExitUsage, "verify bad range exit 2");
    o.expect(cli_exit({"verify", "witt", "--p", "2"}) == kExitUsage, "verify p=2 exit 2");
}

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "value table E_0..E_3 and Euler numbers E_0..E_10", 1.0, value_table},
        {2, "power sums equal closed forms, 1<=m<=50, 0<=n<=10", 5.0, classical_formulas},
        {3, "identity suite, exact zero residuals", 60.0, identity_suite},
        {4, "specialization cross-links", 60.0, cross_links},
        {5, "p-adic convergence, p in {3,5,7}, N<=5", 120.0, padic_convergence},
        {6, "error paths and exit codes", 5.0, error_paths},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(outcome);
        } catch (const std::exception& e) {
            outcome.failures.push_back(std::string("unexpected exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.limit_seconds;
        const bool pass = outcome.failures.empty() && in_time;
        all_pass = all_pass && pass;

        std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title
                  << "  (" << outcome.checks - outcome.failures.size() << "/" << outcome.checks
                  << " checks, " << seconds << " s, limit " << c.limit_seconds << " s)\n";
        if (!in_time) {
            std::cout << "    over time limit\n";
        }
        constexpr std::size_t kShown = 12;
        for (std::size_t i = 0; i < outcome.failures.size() && i < kShown; ++i) {
            std::cout << "    " << outcome.failures[i] << '\n';
        }
        if (outcome.failures.size() > kShown) {
            std::cout << "    ... " << outcome.failures.size() - kShown << " more\n";
        }
    }
    return all_pass ? 0 : 1;
}

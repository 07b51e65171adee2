#include "eulerpoly/euler.hpp"
#include "eulerpoly/identities.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace eulerpoly;

namespace {

bool residual_is_zero(const IdentityReport& r) {
    if (const auto* p = std::get_if<RatPoly>(&r.residual)) {
        return p->is_zero();
    }
    if (const auto* q = std::get_if<Rational>(&r.residual)) {
        return q->is_zero();
    }
    return false;
}

void expect_zero(const IdentityReport& r) {
    EXPECT_TRUE(r.pass) << to_string(r.id) << " residual=" << residual_to_string(r.residual);
    EXPECT_TRUE(residual_is_zero(r)) << to_string(r.id);
}

/// Runs a checker in both modes and requires the same verdict with the
/// expected residual kinds.
void expect_modes_agree(const std::function<IdentityReport(CheckMode)>& check) {
    const IdentityReport symbolic = check(CheckMode::symbolic);
    const IdentityReport pointwise = check(CheckMode::pointwise);
    EXPECT_EQ(symbolic.mode, CheckMode::symbolic);
    EXPECT_EQ(pointwise.mode, CheckMode::pointwise);
    EXPECT_TRUE(std::holds_alternative<RatPoly>(symbolic.residual));
    EXPECT_TRUE(std::holds_alternative<Rational>(pointwise.residual));
    EXPECT_EQ(symbolic.pass, pointwise.pass) << to_string(symbolic.id);
    EXPECT_TRUE(symbolic.pass) << to_string(symbolic.id);
    EXPECT_EQ(residual_is_zero(symbolic), residual_is_zero(pointwise));
    EXPECT_EQ(symbolic.params, pointwise.params);
}

}  // namespace

TEST(CheckerId, NamesRoundTrip) {
    EXPECT_EQ(all_checkers().size(), 28U);
    for (const auto id : all_checkers()) {
        EXPECT_EQ(parse_checker_id(to_string(id)), id);
    }
    EXPECT_EQ(to_string(CheckerId::thm3_1c), "thm3_1c");
    EXPECT_THROW(parse_checker_id("nosuch"), std::invalid_argument);
}

TEST(Basics, EulerSequenceCheckers) {
    for (int n = 0; n <= 40; ++n) {
        expect_zero(check_reflection(n));
        expect_zero(check_complement(n));
        expect_zero(check_boundary(n));
        expect_zero(check_fersim(n));
    }
    for (int n = 0; n <= 20; ++n) {
        expect_zero(check_gf_consistency(n));
    }
    EXPECT_FALSE(check_euler_alt_sum(3, 0).pass);
    EXPECT_EQ(std::get<Rational>(check_euler_alt_sum(3, 0).residual), Rational(-1));
    expect_zero(check_euler_alt_sum(3, 2));
    expect_zero(check_bernoulli_power_sum(3, 2));
}

TEST(Wsp, Examples) {
    expect_zero(check_wsp7(0, 0));
    expect_zero(check_wsp7(1, 0));
    expect_zero(check_wsp9(0, 1));
    expect_zero(check_wsp9(1, 1));
}

TEST(Wsp, WspSevenByHand) {
    // m = 1, n = 0: -(E_0(a) + E_1(a)) = E_1(-a)
    const RatPoly a = RatPoly::variable();
    const RatPoly lhs = -(RatPoly(1) + a - RatPoly(Rational(1, 2)));
    EXPECT_EQ(lhs, -a - RatPoly(Rational(1, 2)));
    EXPECT_EQ(euler_poly_shifted(1, Rational(-1), Rational(0)), lhs);
}

TEST(Thm1, Examples) {
    expect_zero(check_thm1(1, 0, 1, 1));
    EXPECT_THROW(check_thm1(1, 1, 1, 2), std::invalid_argument);
    EXPECT_THROW(check_thm1(0, 0, 1, 1), std::invalid_argument);
    EXPECT_THROW(check_thm1(1, 1, 0, 1), std::invalid_argument);
}

TEST(Thm1, SpecializesToWsp9) {
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
            if (m + n == 0) {
                continue;
            }
            const auto thm1 = check_thm1(m, n, 1, 1);
            const auto wsp9 = check_wsp9(m, n);
            EXPECT_EQ(thm1.residual, wsp9.residual) << m << "," << n;
            EXPECT_EQ(thm1.pass, wsp9.pass);
        }
    }
}

TEST(ZeroShift, HandValues) {
    expect_zero(check_cro0(1, 1));
    expect_zero(check_cro1(1, 0));
    // n = 0: 1*1*E_0(0) + 1*2*E_1(0) = 1 - 1
    EXPECT_EQ(Rational(1) * euler_value(0, Rational(0)) + Rational(2) * euler_value(1, Rational(0)),
              Rational(0));
    expect_zero(check_cro2(0));
    expect_zero(check_cro2(1));
    EXPECT_EQ(euler_zero_via_recurrence(0), Rational(-1, 2));
    EXPECT_EQ(euler_zero_via_recurrence(1), Rational(1, 4));
    EXPECT_EQ(euler_value(3, Rational(0)), Rational(1, 4));
    EXPECT_THROW(check_cro0(2, 2), std::invalid_argument);
}

TEST(ZeroShift, SymmetricCro1IsTwiceCro2) {
    for (int n = 1; n <= 12; ++n) {
        const auto cro1 = check_cro1(n, n);
        const auto cro2 = check_cro2(n);
        EXPECT_EQ(std::get<Rational>(cro1.residual), std::get<Rational>(cro2.residual) * Rational(2));
        EXPECT_EQ(cro1.pass, cro2.pass);
    }
}

TEST(ZeroShift, RecurrenceMatchesDirectValues) {
    for (int n = 0; n <= 20; ++n) {
        EXPECT_EQ(euler_zero_via_recurrence(n), euler_value(2 * n + 1, Rational(0))) << n;
        expect_zero(check_recurrence_odd(n));
    }
}

TEST(Sun, Examples) {
    for (const Rational& a : {Rational(0), Rational(1), Rational(1, 2), Rational(-1)}) {
        expect_zero(check_sun(0, 0, a));
        expect_zero(check_sun(0, 0, a, Rational(3, 7)));
    }
    expect_zero(check_sun(2, 3, Rational(1, 2), Rational(-5, 3)));
    EXPECT_EQ(check_sun(2, 3, Rational(1, 2), Rational(-5, 3)).mode, CheckMode::pointwise);
}

TEST(Sun, SpecializesToWsp7) {
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            const auto sun = check_sun(m, n, Rational(1));
            const auto wsp7 = check_wsp7(m, n);
            EXPECT_EQ(sun.residual, wsp7.residual) << m << "," << n;
        }
    }
}

TEST(Sun, NumericCase) {
    EXPECT_EQ(euler_value(0, Rational(-1, 2)), Rational(1));
    EXPECT_EQ(euler_value(1, Rational(-1, 2)), Rational(-1));
    expect_zero(check_sun_cor(0, 0));
    expect_zero(check_sun_cor(1, 0));
}

TEST(Thm2, DeltaTable) {
    for (int s = 1; s <= 6; ++s) {
        for (int k = 0; k <= 6; ++k) {
            const int expected = (s % 2 == 0 && k % 2 == 1) ? 2 : (s % 2 == 1 && k % 2 == 0) ? -2 : 0;
            EXPECT_EQ(delta_sk(s, k), expected) << s << "," << k;
        }
    }
}

TEST(Thm2, Examples) {
    expect_zero(check_thm2(1, 0, 1, 0));
    EXPECT_THROW(check_thm2(0, 0, 1, 0), std::invalid_argument);
    EXPECT_THROW(check_thm2(1, 0, 0, 0), std::invalid_argument);
}

TEST(Thm2, RightSideVanishesWhenDeltaIsZero) {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            if (m + n == 0) {
                continue;
            }
            for (int s = 1; s <= 4; ++s) {
                for (int k = 0; k <= 4; ++k) {
                    if (delta_sk(s, k) == 0) {
                        EXPECT_TRUE(thm2_rhs_sum(m, n, s, k).is_zero()) << m << n << s << k;
                    }
                }
            }
        }
    }
}

TEST(Thm2, ZeroShiftCases) {
    // n = 0, k = 1: 1 - (1/2) * 1 * 2
    EXPECT_EQ(Rational(1) - Rational(1, 2) * Rational(1) * Rational(2), Rational(0));
    expect_zero(check_thm2_cro1(0, 1));
    expect_zero(check_thm2_cro2(0, 0));
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= 6; ++k) {
            expect_zero(check_thm2_cro1(n, k));
            expect_zero(check_thm2_cro2(n, k));
        }
    }
}

TEST(Thm3, Examples) {
    expect_zero(check_thm3(1, 0));
    for (int m = 0; m <= 10; ++m) {
        expect_zero(check_thm3(m, m));
    }
    EXPECT_THROW(check_thm3(2, 3), std::invalid_argument);
    EXPECT_THROW(check_thm3(2, -1), std::invalid_argument);
}

TEST(Thm3_1, Parts) {
    const auto part1 = check_thm3_1(1, 1, 0);
    expect_zero(part1);
    EXPECT_EQ(part1.id, CheckerId::thm3_1a);
    for (int m = 0; m <= 8; ++m) {
        for (int k = 0; k <= m; ++k) {
            expect_zero(check_thm3_1(1, m, k));
            if (k <= m - 1) {
                expect_zero(check_thm3_1(2, m, k));
            }
            for (int l = 0; l <= m - k - 1; ++l) {
                expect_zero(check_thm3_1(3, m, k, l));
            }
            for (int j = 1; j <= m; ++j) {
                expect_zero(check_thm3_1(4, m, k, j));
            }
        }
    }
}

TEST(Thm3_1, RangeViolationsAreUsageErrors) {
    EXPECT_THROW(check_thm3_1(1, 2, 3), std::invalid_argument);
    EXPECT_THROW(check_thm3_1(2, 2, 2), std::invalid_argument);
    EXPECT_THROW(check_thm3_1(3, 3, 0, 3), std::invalid_argument);
    EXPECT_THROW(check_thm3_1(4, 3, 0, 0), std::invalid_argument);
    EXPECT_THROW(check_thm3_1(4, 3, 0, 4), std::invalid_argument);
    EXPECT_THROW(check_thm3_1(5, 3, 0, 0), std::invalid_argument);
}

TEST(Thm3_1, PartThreeReproducesCro2AndRem2) {
    // l = 1 needs m = n + 1 >= 2.
    for (int n = 1; n <= 20; ++n) {
        const auto part3 = check_thm3_1(3, n + 1, 0, 1);
        const auto cro2 = check_cro2(n);
        EXPECT_EQ(part3.pass, cro2.pass) << n;
        EXPECT_EQ(part3.residual, cro2.residual) << n;
    }
    for (int m = 4; m <= 15; ++m) {
        const auto part3 = check_thm3_1(3, m, 0, 3);
        const auto rem2 = check_rem2_1(m);
        EXPECT_EQ(part3.pass, rem2.pass) << m;
        EXPECT_EQ(residual_is_zero(part3), residual_is_zero(rem2)) << m;
    }
}

TEST(Rem2_1, Examples) {
    expect_zero(check_rem2_1(3));
    expect_zero(check_rem2_1(4));
    EXPECT_THROW(check_rem2_1(2), std::invalid_argument);
}

TEST(Fersim3, TelescopedInstances) {
    for (int n = 0; n <= 8; ++n) {
        for (int q = 1; q <= 30; ++q) {
            expect_zero(check_fersim3(n, q));
        }
    }
}

TEST(Modes, SymbolicAgreesWithPointwise) {
    for (int n = 0; n <= 12; ++n) {
        expect_modes_agree([n](CheckMode m) { return check_reflection(n, m); });
        expect_modes_agree([n](CheckMode m) { return check_complement(n, m); });
        expect_modes_agree([n](CheckMode m) { return check_fersim(n, m); });
        expect_modes_agree([n](CheckMode m) { return check_fersim3(n, 4, m); });
    }
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            expect_modes_agree([=](CheckMode mode) { return check_wsp7(m, n, mode); });
            expect_modes_agree([=](CheckMode mode) { return check_wsp9(m, n, mode); });
            expect_modes_agree([=](CheckMode mode) { return check_sun(m, n, Rational(1, 2), {}, mode); });
            if (m + n == 0) {
                continue;
            }
            for (int q = 1; q <= 3; ++q) {
                expect_modes_agree([=](CheckMode mode) { return check_thm1(m, n, q, 3, mode); });
            }
            for (int s = 1; s <= 3; ++s) {
                for (int k = 0; k <= 3; ++k) {
                    expect_modes_agree([=](CheckMode mode) { return check_thm2(m, n, s, k, mode); });
                }
            }
        }
    }
    for (int m = 0; m <= 8; ++m) {
        for (int k = 0; k <= m; ++k) {
            expect_modes_agree([=](CheckMode mode) { return check_thm3(m, k, mode); });
        }
    }
}

TEST(PadicCheckers, WittAndLem1) {
    const auto witt = check_witt(1, Rational(0), 3, 2, true);
    EXPECT_TRUE(witt.pass);
    EXPECT_EQ(witt.mode, CheckMode::valuation);
    EXPECT_EQ(std::get<Valuation>(witt.residual), Valuation(2));
    EXPECT_EQ(witt.param("naive"), Rational(1));
    EXPECT_TRUE(check_witt(0, Rational(1, 2), 3, 1).pass);
    EXPECT_THROW(check_witt(1, Rational(1, 3), 3, 1), DenominatorNotInvertible);
    EXPECT_THROW(check_witt(1, Rational(0), 2, 1), InvalidPrime);

    const auto lem1 = check_lem1(RatPoly::variable(), 3, 2);
    EXPECT_TRUE(lem1.pass);
    EXPECT_EQ(std::get<Valuation>(lem1.residual), Valuation(2));
    EXPECT_EQ(lem1.param("degree"), Rational(1));
    EXPECT_THROW(lem1.param("nosuch"), std::out_of_range);
}

TEST(RandomPolys, DeterministicAndIntegral) {
    for (const long p : {3L, 5L, 7L}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const RatPoly f = random_p_integral_poly(seed, p, 8);
            EXPECT_EQ(f, random_p_integral_poly(seed, p, 8));
            EXPECT_LE(f.degree().value_or(0), 8U);
            for (const auto& c : f.coeffs()) {
                EXPECT_NE(c.denominator() % p, 0);
            }
        }
    }
}

TEST(Range, Parse) {
    EXPECT_EQ(Range::parse("0..6"), (Range{0, 6}));
    EXPECT_EQ(Range::parse("4"), (Range{4, 4}));
    EXPECT_THROW(Range::parse("5..1"), std::invalid_argument);
    EXPECT_THROW(Range::parse("-1..3"), std::invalid_argument);
    EXPECT_THROW(Range::parse("1...3"), std::invalid_argument);
    EXPECT_THROW(Range::parse("a..b"), std::invalid_argument);
    EXPECT_THROW(Range::parse(""), std::invalid_argument);
}

TEST(Suite, ReflectionUpToForty) {
    SuiteGrid grid;
    grid.n = Range{0, 40};
    const std::vector<CheckerId> ids{CheckerId::reflection};
    const auto reports = run_suite(ids, grid);
    ASSERT_EQ(reports.size(), 41U);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        EXPECT_TRUE(reports[i].pass);
        EXPECT_EQ(reports[i].param("n"), Rational(static_cast<long>(i)));
    }
}

TEST(Suite, WittDefectsReachPrecision) {
    SuiteGrid grid;
    grid.n = Range{0, 4};
    grid.precision = Range{1, 3};
    const std::vector<CheckerId> ids{CheckerId::witt};
    const auto reports = run_suite(ids, grid, 4);
    EXPECT_FALSE(reports.empty());
    for (const auto& r : reports) {
        EXPECT_TRUE(std::get<Valuation>(r.residual).at_least(r.param("N").numerator().get_si()));
        EXPECT_FALSE(r.param("p") == Rational(3) && r.param("a") == Rational(-2, 3));
    }
}

TEST(Suite, OutputIndependentOfWorkerCount) {
    SuiteGrid grid;
    grid.m = Range{0, 4};
    grid.n = Range{0, 4};
    grid.lem1_samples = 3;
    grid.precision = Range{1, 2};
    const auto ids = all_checkers();
    const auto serial = run_suite(ids, grid, 1);
    for (const unsigned workers : {2U, 7U}) {
        const auto parallel = run_suite(ids, grid, workers);
        ASSERT_EQ(parallel.size(), serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            EXPECT_TRUE(same_outcome(serial[i], parallel[i])) << i;
        }
    }
}

TEST(Suite, CanonicalOrder) {
    SuiteGrid grid;
    grid.m = Range{0, 3};
    grid.n = Range{0, 3};
    const std::vector<CheckerId> ids{CheckerId::cro2, CheckerId::wsp7, CheckerId::reflection};
    const auto reports = run_suite(ids, grid, 3);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        EXPECT_LE(static_cast<int>(reports[i - 1].id), static_cast<int>(reports[i].id));
    }
    EXPECT_EQ(reports.front().id, CheckerId::reflection);
    EXPECT_EQ(reports.back().id, CheckerId::cro2);
}

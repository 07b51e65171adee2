#include "eulerpoly/euler.hpp"
#include "eulerpoly/identities.hpp"
#include "eulerpoly/padic.hpp"
#include "eulerpoly/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

namespace py = pybind11;
using namespace eulerpoly;

namespace {

Rational to_rational(const py::handle& obj) {
    return Rational::parse(py::str(obj).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
    // Leaked so that no Python object is released after interpreter shutdown.
    static const auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(r.to_string());
}

py::list to_fraction_list(const RatPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) {
        out.append(to_fraction(c));
    }
    return out;
}

RatPoly to_poly(const py::sequence& coeffs) {
    std::vector<Rational> out;
    for (const auto& c : coeffs) {
        out.push_back(to_rational(c));
    }
    return RatPoly(std::move(out));
}

py::object valuation_to_py(const Valuation& v) {
    if (v.is_infinite()) {
        return py::float_(std::numeric_limits<double>::infinity());
    }
    return py::int_(v.value());
}

py::object report_to_py(const IdentityReport& r) {
    static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(report_to_json(r).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Euler polynomials, fermionic p-adic sums and identity checkers";

    static const auto* denominator_error =
        new py::exception<DenominatorNotInvertible>(m, "DenominatorNotInvertible", PyExc_ValueError);
    static const auto* prime_error = new py::exception<InvalidPrime>(m, "InvalidPrime", PyExc_ValueError);
    static const auto* budget_error =
        new py::exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const DenominatorNotInvertible& e) {
            PyErr_SetString(denominator_error->ptr(), e.what());
        } catch (const InvalidPrime& e) {
            PyErr_SetString(prime_error->ptr(), e.what());
        } catch (const BudgetExceeded& e) {
            PyErr_SetString(budget_error->ptr(), e.what());
        }
    });

    m.def("binomial", [](long n, long k) { return binomial(n, k).get_str(); },
          "C(n, k) as a decimal string (0 outside 0 <= k <= n)");
    m.def("euler_poly", [](int n) { return to_fraction_list(euler_poly(n)); },
          "Coefficients of E_n(x), lowest degree first");
    m.def("bernoulli_poly", [](int n) { return to_fraction_list(bernoulli_poly(n)); });
    m.def("euler_poly_text", [](int n) { return to_human(euler_poly(n)); });
    m.def("euler_value", [](int n, const py::handle& a) {
        return to_fraction(euler_value(n, to_rational(a)));
    });
    m.def("euler_number", [](int n) { return py::int_(py::str(euler_number(n).to_string())); });
    m.def("alt_power_sum", [](int m_, int n) { return to_fraction(alt_power_sum(m_, n)); });
    m.def("alt_power_sum_closed",
          [](int m_, int n) { return to_fraction(alt_power_sum_closed(m_, n)); });
    m.def("power_sum", [](int m_, int n) { return to_fraction(power_sum(m_, n)); });
    m.def("power_sum_closed", [](int m_, int n) { return to_fraction(power_sum_closed(m_, n)); });

    m.def("valuation", [](const py::handle& r, long p) {
        return valuation_to_py(valuation(to_rational(r), p));
    });
    m.def("padic_residue", [](const py::handle& r, long p, int precision) {
        return py::int_(py::str(PadicInt::from_rational(to_rational(r), p, precision).residue().get_str()));
    }, "numerator * denominator^-1 mod p^N");
    m.def("fermionic_sum_naive", [](const py::sequence& coeffs, long p, int precision, std::int64_t budget) {
        return to_fraction(fermionic_sum_naive(to_poly(coeffs), p, precision, {budget, 1}));
    }, py::arg("coeffs"), py::arg("p"), py::arg("precision"), py::arg("budget") = kDefaultNaiveBudget);
    m.def("fermionic_sum_closed", [](int n, const py::handle& a, const py::handle& q) {
        return to_fraction(fermionic_sum_closed(n, to_rational(a), BigInt(py::str(q).cast<std::string>())));
    });
    m.def("witt_defect", [](int n, const py::handle& a, long p, int precision) {
        return valuation_to_py(witt_defect(n, to_rational(a), p, precision));
    });
    m.def("lem1_defect", [](const py::sequence& coeffs, long p, int precision) {
        return valuation_to_py(lem1_defect(to_poly(coeffs), p, precision).overall());
    });

    m.def("checker_ids", [] {
        std::vector<std::string> out;
        for (const auto id : all_checkers()) {
            out.emplace_back(to_string(id));
        }
        return out;
    });

    m.def(
        "run_suite",
        [](const std::vector<std::string>& ids, const py::dict& ranges, unsigned workers) {
            std::vector<CheckerId> parsed;
            for (const auto& name : ids) {
                if (name == "all") {
                    parsed.assign(all_checkers().begin(), all_checkers().end());
                    break;
                }
                parsed.push_back(parse_checker_id(name));
            }
            SuiteGrid grid;
            for (const auto& [key, value] : ranges) {
                const auto name = key.cast<std::string>();
                if (name == "points") {
                    grid.points.clear();
                    for (const auto& p : value.cast<py::sequence>()) {
                        grid.points.push_back(to_rational(p));
                    }
                    continue;
                }
                if (name == "primes") {
                    grid.primes = value.cast<std::vector<long>>();
                    continue;
                }
                const Range range = Range::parse(py::str(value).cast<std::string>());
                if (name == "m") grid.m = range;
                else if (name == "n") grid.n = range;
                else if (name == "q") grid.q = range;
                else if (name == "k") grid.k = range;
                else if (name == "s") grid.s = range;
                else if (name == "precision") grid.precision = range;
                else throw std::invalid_argument("unknown grid key '" + name + "'");
            }
            std::vector<IdentityReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(parsed, grid, workers);
            }
            py::list out;
            for (const auto& r : reports) {
                out.append(report_to_py(r));
            }
            return out;
        },
        py::arg("ids"), py::arg("ranges") = py::dict(), py::arg("workers") = 1,
        "Run checkers; ranges maps m/n/q/k/s/precision to 'lo..hi' and "
        "points/primes to lists. Returns report dicts in canonical order.");
}

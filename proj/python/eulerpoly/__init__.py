"""Exact Euler/Bernoulli polynomials, fermionic p-adic sums and identity checks."""

from ._core import (
    BudgetExceeded,
    DenominatorNotInvertible,
    InvalidPrime,
    alt_power_sum,
    alt_power_sum_closed,
    bernoulli_poly,
    binomial,
    checker_ids,
    euler_number,
    euler_poly,
    euler_poly_text,
    euler_value,
    fermionic_sum_closed,
    fermionic_sum_naive,
    lem1_defect,
    padic_residue,
    power_sum,
    power_sum_closed,
    run_suite,
    valuation,
    witt_defect,
)

__all__ = [
    "BudgetExceeded",
    "DenominatorNotInvertible",
    "InvalidPrime",
    "alt_power_sum",
    "alt_power_sum_closed",
    "bernoulli_poly",
    "binomial",
    "checker_ids",
    "euler_number",
    "euler_poly",
    "euler_poly_text",
    "euler_value",
    "fermionic_sum_closed",
    "fermionic_sum_naive",
    "lem1_defect",
    "padic_residue",
    "power_sum",
    "power_sum_closed",
    "run_suite",
    "valuation",
    "witt_defect",
]

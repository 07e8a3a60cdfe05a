"""Exact bounded integral Laurent series and their evaluation onto the reals.

Rationals cross the boundary as :class:`fractions.Fraction` (ints and "p/q"
strings are accepted on input); coefficients are Python ints of any size.
"""

from ._core import (
    CardinalityCapExceeded,
    ContinuityBound,
    ExpansionCertificate,
    LaurentSeries,
    NotDivisible,
    continuity_bound,
    count,
    covering_budget,
    divide,
    enumerate,
    expand,
    generator_poly,
    in_budget,
    in_kernel,
    inverse_truncation,
    min_exponent,
    next_digit,
    normalize_budget,
    not_zero_divisor_check,
    r_norm,
    restrict,
    series_of,
    shift,
    t_adic_distance,
    t_valuation,
    theta,
    verify,
)

__all__ = [
    "CardinalityCapExceeded",
    "ContinuityBound",
    "ExpansionCertificate",
    "LaurentSeries",
    "NotDivisible",
    "continuity_bound",
    "count",
    "covering_budget",
    "divide",
    "enumerate",
    "expand",
    "generator_poly",
    "in_budget",
    "in_kernel",
    "inverse_truncation",
    "min_exponent",
    "next_digit",
    "normalize_budget",
    "not_zero_divisor_check",
    "r_norm",
    "restrict",
    "series_of",
    "shift",
    "t_adic_distance",
    "t_valuation",
    "theta",
    "verify",
]

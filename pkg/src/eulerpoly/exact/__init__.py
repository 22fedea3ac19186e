"""Exact arithmetic kernel: rationals, polynomials, truncated series, graded rings."""

from fractions import Fraction as ExactRational

from .graded import GradedClass, GradedRing
from .poly import BivariatePolynomial, DensePolynomial, poly_divide_exact, poly_gcd
from .ratfunc import ParamRational
from .series import (
    TruncatedSeries,
    hadamard,
    series_derivative,
    series_div,
    series_exp,
    series_log,
)


def graded_mul(a: GradedClass, b: GradedClass) -> GradedClass:
    """Truncated product; rejects classes from different rings."""
    if not isinstance(a, GradedClass) or not isinstance(b, GradedClass):
        raise TypeError("graded_mul expects two GradedClass values")
    return a * b


__all__ = [
    "BivariatePolynomial",
    "DensePolynomial",
    "ExactRational",
    "GradedClass",
    "GradedRing",
    "ParamRational",
    "TruncatedSeries",
    "graded_mul",
    "hadamard",
    "poly_divide_exact",
    "poly_gcd",
    "series_derivative",
    "series_div",
    "series_exp",
    "series_log",
]

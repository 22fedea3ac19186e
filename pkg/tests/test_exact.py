from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from strategies import ORDER, series, small_fractions
from eulerpoly.exact import (
    BivariatePolynomial,
    DensePolynomial,
    GradedClass,
    GradedRing,
    ParamRational,
    TruncatedSeries,
    graded_mul,
    hadamard,
    poly_divide_exact,
    series_derivative,
    series_div,
    series_exp,
    series_log,
)

int_polys = st.lists(st.integers(-20, 20), max_size=7).map(lambda cs: DensePolynomial(cs, "s"))
rat_polys = st.lists(small_fractions, max_size=5).map(lambda cs: DensePolynomial(cs, "y"))


def S(coeffs, order):
    return TruncatedSeries(coeffs, order)


# --- DensePolynomial -------------------------------------------------------


def test_canonical_form_strips_trailing_zeros():
    assert DensePolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert DensePolynomial([0, 0]).coeffs == ()
    assert DensePolynomial([]).degree == -1


@given(int_polys, int_polys, int_polys)
def test_polynomial_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(int_polys, int_polys)
def test_degree_of_product_over_integers(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert (a * b).degree == a.degree + b.degree


def test_divide_exact_examples():
    s = DensePolynomial.gen("s")
    assert poly_divide_exact(s**2 - 1, s + 1) == s - 1
    assert poly_divide_exact(DensePolynomial((), "s"), s + 1).is_zero()


def test_divide_exact_reports_remainder():
    s = DensePolynomial.gen("s")
    with pytest.raises(ValueError, match="remainder"):
        poly_divide_exact(s**2 + 1, s + 1)
    with pytest.raises(ZeroDivisionError):
        poly_divide_exact(s, DensePolynomial(()))


@given(int_polys)
def test_divide_exact_round_trip(p):
    den = DensePolynomial([1, 1], "s")
    assert poly_divide_exact(p * den, den) == p


def test_serialization_round_trip():
    p = DensePolynomial([1, Fraction(-3, 4), 0, 5])
    assert p.to_list() == [1, "-3/4", 0, 5]
    assert DensePolynomial.from_list(p.to_list()) == p


def test_display_orders():
    p = DensePolynomial([0, 10, -10, 5, -1])
    assert p.to_str() == "10*t - 10*t^2 + 5*t^3 - t^4"
    assert p.to_str(ascending=False) == "-t^4 + 5*t^3 - 10*t^2 + 10*t"


def test_bivariate_substitution():
    s, t = BivariatePolynomial.s(), BivariatePolynomial.t()
    p = t * s + (3 * t - t * t) * s * s
    q = p.substitute_s(-s - 1)
    # direct expansion of t(-s-1) + (3t - t^2)(s+1)^2
    assert q == t * (-s - 1) + (3 * t - t * t) * (s + 1) * (s + 1)
    assert p.evaluate_t(2) == DensePolynomial([0, 2, 2], "s")


# --- TruncatedSeries -------------------------------------------------------


def test_exp_examples():
    s = TruncatedSeries.gen(2)
    assert series_exp(S([0], 2)) == S([1], 2)
    assert series_exp(s + s * s) == S([1, 1, Fraction(3, 2)], 2)


def test_exp_rejects_nonzero_constant():
    with pytest.raises(ValueError, match="constant term must be 0, got 2"):
        series_exp(S([2, 1], 3))


def test_log_examples():
    s = TruncatedSeries.gen(3)
    assert series_log(S([1], 3)) == S([0], 3)
    assert series_log(1 + s) == S([0, 1, Fraction(-1, 2), Fraction(1, 3)], 3)
    s4 = TruncatedSeries.gen(4)
    assert series_log(series_exp(s4 * s4)) == s4 * s4


def test_log_rejects_non_unit_constant():
    with pytest.raises(ValueError, match="divide by it first"):
        series_log(S([2, 1], 3))


@given(series(zero_constant=True))
def test_exp_log_round_trip(g):
    assert series_exp(series_log(1 + g)) == 1 + g
    assert series_log(series_exp(g)) == g


def test_div_examples():
    f = S([1, 2, 3, 4], 3)
    assert series_div(f, S([1], 3)) == f
    assert series_div(S([0, 1], 3), S([1, -1], 3)) == S([0, 1, 1, 1], 3)


def test_div_rejects_non_unit():
    with pytest.raises(ValueError, match="not a unit"):
        series_div(S([1], 3), S([0, 1], 3))


@given(series(), series(unit_constant=True))
def test_div_round_trip(f, g):
    assert series_div(f, g) * g == f


def test_derivative_examples():
    assert series_derivative(S([1], 3)) == S([0], 2)
    assert series_derivative(S([1, 2, 3], 2)) == S([2, 6], 1)


@given(series(), series())
def test_leibniz(f, g):
    lhs = series_derivative(f * g)
    rhs = series_derivative(f) * g + f * series_derivative(g)
    assert lhs.agrees_with(rhs)
    assert lhs.order == ORDER - 1


def test_order_propagation():
    a, b = S([1, 1, 1], 2), S([1, 1, 1, 1, 1], 4)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert hadamard(a, b).order == 2
    assert a.shift(2).order == 4


def test_hadamard_examples():
    assert hadamard(S([1, 2, 3], 2), S([5, 7], 2)) == S([5, 14], 2)
    assert hadamard(S([1, 2, 3], 2), S([0], 2)) == S([0], 2)


@given(series(), series(), series(), small_fractions, small_fractions)
def test_hadamard_bilinear(f, g, h, a, b):
    assert hadamard(a * f + b * g, h) == a * hadamard(f, h) + b * hadamard(g, h)


def test_log_matches_sympy_for_nontrivial_series():
    x = sympy.symbols("x")
    expr = sympy.log(1 + 3 * x - x**2 / 2 + x**3)
    expected = sympy.Poly(sympy.series(expr, x, 0, 6).removeO(), x).all_coeffs()[::-1]
    got = series_log(S([1, 3, Fraction(-1, 2), 1], 5))
    assert [Fraction(int(c.p), int(c.q)) for c in expected] == list(got.coeffs)


# --- GradedClass -----------------------------------------------------------


def test_graded_mul_examples():
    R1 = GradedRing((("X", 1),), 1)
    X = R1.gen("X")
    assert graded_mul(X, X).is_zero()
    R2 = GradedRing((("c1", 1), ("X", 1)), 2)
    assert graded_mul(R2.gen("c1"), R2.gen("X")) == R2.monomial({"c1": 1, "X": 1})
    P3 = GradedRing((("H", 1),), 3)
    H = P3.gen("H")
    assert (H * H**3).is_zero()
    assert not (H**3).is_zero()


def test_graded_mul_rejects_mismatched_rings():
    a = GradedRing((("H", 1),), 3).gen("H")
    b = GradedRing((("H", 1),), 4).gen("H")
    with pytest.raises(ValueError, match="mismatch"):
        graded_mul(a, b)


graded_ring = GradedRing((("a", 1), ("b", 2), ("c", 3)), 5)
graded_classes = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 2), st.integers(0, 1)),
    st.integers(-6, 6),
    max_size=6,
).map(lambda terms: GradedClass(graded_ring, terms))


@given(graded_classes, graded_classes, graded_classes)
def test_graded_ring_axioms_and_truncation(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert (x * y).max_weight() <= graded_ring.truncation


@given(graded_classes)
def test_graded_inverse(x):
    u = x + (1 - x.constant_term)
    assert u * u.inverse() == 1


# --- ParamRational ---------------------------------------------------------


def test_param_rational_reduction():
    y = ParamRational.gen()
    r = (y * y - 1) / (2 * y + 2)
    assert r.den == DensePolynomial([1], "y")
    assert r == (y - 1) / 2
    assert r.is_polynomial()
    assert not (1 / (1 + y)).is_polynomial()
    with pytest.raises(ZeroDivisionError):
        (1 / (1 + y))(-1)


@given(rat_polys, rat_polys, rat_polys, rat_polys)
def test_param_rational_equality_matches_cross_multiplication(a, b, c, d):
    if b.is_zero() or d.is_zero():
        return
    p, q = ParamRational(a, b), ParamRational(c, d)
    assert (p == q) == (a * d == c * b)
    assert p.den.leading == 1


@given(rat_polys, rat_polys, rat_polys)
def test_param_rational_field_axioms(a, b, c):
    one_plus = DensePolynomial([1, 1], "y")
    p, q, r = ParamRational(a, one_plus), ParamRational(b), ParamRational(c, one_plus**2)
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    if not q.num.is_zero():
        assert (p / q) * q == p

from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from eulerpoly.exact import BivariatePolynomial, DensePolynomial
from eulerpoly.hypersurface import (
    canonical_partition,
    chern_number,
    chern_oracle,
    chern_poly,
    chern_poly_at,
    corollary_product,
    dual_chern_poly,
    euler_polynomial,
    hodge_numbers_threefold,
    partitions,
    section_euler_poly,
    section_euler_values,
    theta,
    theta_power,
    theta_tower,
)

T = DensePolynomial.gen("t")


def sympy_euler(n):
    """The defining alternating binomial sum, expanded by sympy."""
    t = sympy.symbols("t")
    expr = -sum(sympy.binomial(n + 1, k) * (-t) ** (n - k) for k in range(n))
    coeffs = sympy.Poly(sympy.expand(expr), t).all_coeffs()[::-1]
    return DensePolynomial([int(c) for c in coeffs], "t")


def sympy_gammas(n, d):
    """Coefficients of (1+h)^(n+1)/(1+dh) below h^n, by sympy's series."""
    h = sympy.symbols("h")
    ser = sympy.series((1 + h) ** (n + 1) / (1 + d * h), h, 0, n).removeO()
    return tuple(int(ser.coeff(h, k)) for k in range(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_euler_polynomial_matches_expanded_sum(n):
    e = euler_polynomial(n).poly
    assert e == sympy_euler(n)
    assert e.degree == n
    assert e[0] == 0


def test_euler_polynomial_values():
    assert euler_polynomial(4).poly == DensePolynomial([0, 10, -10, 5, -1])
    assert euler_polynomial(1).poly == T
    assert euler_polynomial(3).poly == DensePolynomial([0, 6, -4, 1])
    assert euler_polynomial(3)(3) == 9
    assert euler_polynomial(3)(4) == 24


def test_euler_polynomial_rejects_bad_n():
    with pytest.raises(ValueError):
        euler_polynomial(0)


@pytest.mark.parametrize("d", range(1, 21))
def test_genus_degree_formula(d):
    assert euler_polynomial(2)(d) == 2 - (d - 1) * (d - 2)


def test_theta_examples():
    e4 = euler_polynomial(4).poly
    assert theta(7 * T) == 0
    assert theta(e4) == DensePolynomial([0, 10, -5, 1])
    assert theta_power(e4, 2) == DensePolynomial([0, 5, -1])


@given(st.lists(st.integers(-50, 50), max_size=9), st.lists(st.integers(-50, 50), max_size=9),
       st.integers(-5, 5))
def test_theta_linear_and_degree(a, b, c):
    p, q = DensePolynomial(a), DensePolynomial(b)
    assert theta(p + c * q) == theta(p) + c * theta(q)
    if p.degree >= 2:
        assert theta(p).degree == p.degree - 1
    else:
        assert theta(p).is_zero()


@pytest.mark.parametrize("n", range(1, 13))
def test_theta_tower_structure(n):
    tower = theta_tower(n)
    for p in tower:
        assert p[0] == 0
    assert tower[-1] == T
    assert theta(tower[-1]).is_zero()


def test_chern_poly_examples():
    s, t = BivariatePolynomial.s(), BivariatePolynomial.t()
    assert chern_poly(2) == t * s + (3 * t - t * t) * s * s
    for n in range(1, 11):
        assert chern_poly(n).coefficient_s(n) == euler_polynomial(n).poly
    ring_H = chern_poly_at(4, 5).ring
    H = ring_H.gen("H")
    # gamma(4, 5) = (1, 0, 10, -40): middle pushforwards 0 and 50
    assert chern_poly_at(4, 5) == 5 * H + 50 * H**3 - 200 * H**4


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("d", range(1, 7))
def test_chern_oracle_matches_sympy(n, d):
    assert chern_oracle(n, d).gammas == sympy_gammas(n, d)


def test_chern_oracle_examples():
    assert chern_oracle(3, 4).gammas == (1, 0, 6)
    assert chern_oracle(4, 2).gammas == (1, 3, 4, 2)
    for n in range(1, 9):
        assert chern_oracle(n, 1).gammas == tuple(comb(n, k) for k in range(n))


def test_chern_number_examples():
    assert chern_number(4, 5, [3]) == -200
    assert chern_number(4, 2, [1, 2]) == 24
    assert chern_number(4, 1, [1, 1, 1]) == 64


def test_corollary_product_examples():
    assert corollary_product(4, 5, [3]) == -200
    assert corollary_product(4, 2, [1, 2]) == 48
    for p in partitions(3):
        assert corollary_product(4, 1, p) == chern_number(4, 1, p)


def test_partition_validation():
    with pytest.raises(ValueError, match="must sum to"):
        chern_number(4, 2, [1, 1])
    with pytest.raises(ValueError, match="positive"):
        canonical_partition([2, 0])
    assert canonical_partition([1, 2]) == (2, 1)


def test_partitions_order():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]
    assert [len(partitions(m)) for m in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("n", range(1, 9))
def test_chern_numbers_against_oracle_and_normalization(n):
    for d in range(1, 11):
        data = chern_oracle(n, d)
        for p in partitions(n - 1):
            value = chern_number(n, d, p)
            assert value == data.chern_number(p)
            assert corollary_product(n, d, p) * d == d ** len(p) * value


def test_dual_chern_poly():
    s, t = BivariatePolynomial.s(), BivariatePolynomial.t()
    assert dual_chern_poly(2) == (3 * t - t * t) + t * s
    for n in range(1, 11):
        dual = dual_chern_poly(n)
        assert dual.coefficient_s(0) == euler_polynomial(n).poly
        assert dual.degree_s == n - 1


def test_section_poly_examples():
    s, t = BivariatePolynomial.s(), BivariatePolynomial.t()
    expected4 = (
        (10 * t - 10 * t**2 + 5 * t**3 - t**4)
        + (-6 * t + 4 * t**2 - t**3) * s
        + (3 * t - t**2) * s**2
        - t * s**3
    )
    assert section_euler_poly(4) == expected4
    assert section_euler_poly(2) == (3 * t - t * t) - t * s
    for n in range(1, 11):
        assert section_euler_poly(n).coefficient_s(0) == euler_polynomial(n).poly


@pytest.mark.parametrize("n", range(2, 11))
def test_section_identity(n):
    e = section_euler_poly(n)
    for r in range(1, n):
        assert (-1) ** r * e.coefficient_s(r) == euler_polynomial(n - r).poly


def test_section_values():
    assert section_euler_values(4, 5) == [-200, 55, -10, 5]
    assert section_euler_values(2, 3) == [0, 3]
    for n in range(1, 9):
        assert section_euler_values(n, 1) == [n - r for r in range(n)]


@pytest.mark.parametrize(
    "d, expected", [(1, (0, 0)), (2, (0, 0)), (3, (0, 5)), (4, (0, 30)), (5, (1, 101))]
)
def test_hodge_numbers(d, expected):
    assert hodge_numbers_threefold(d) == expected


@pytest.mark.parametrize("d", range(1, 30))
def test_hodge_numbers_nonnegative(d):
    h03, h12 = hodge_numbers_threefold(d)
    assert h03 >= 0 and h12 >= 0
    # chi = 2(h11 - h12 - h03) + 2 with h11 = 1 for smooth threefolds in P^4
    assert euler_polynomial(4)(d) == 4 - 2 * h03 - 2 * h12


def test_literal_product_breaks_hodge_formula_at_degree_two():
    literal = corollary_product(4, 2, [1, 2])
    assert 1 - literal // 24 == -1

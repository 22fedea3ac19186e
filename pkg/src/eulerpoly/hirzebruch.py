"""Motivic Hirzebruch classes and chi_y genera of smooth hypersurfaces in P^n.

For X of dimension k with Chern polynomial C(s) = 1 - c_1 s + ... + (-1)^k c_k s^k,

    T_y(X) = (1+y)^k [s^k] exp( log Q(s) (.) (-s C'/C) ),
    Q(s) = s (1 + y e^(-s)) / (1 - e^(-s)),

where (.) is the Hadamard product.  Since -sC'/C is the power-sum series of
the Chern roots, the Hadamard product turns log Q into sum_i log Q(a_i s),
and the exponential into prod_i Q(a_i s) / (1+y).  Q has constant term 1+y,
so the log is taken of Q/(1+y); the discarded constant multiplies the zero
constant term of -sC'/C and does not matter.

Coefficients in y are kept as exact rational functions because intermediate
terms have poles at y = -1; the final class is checked to be polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import (
    DensePolynomial,
    GradedClass,
    ParamRational,
    TruncatedSeries,
    hadamard,
    series_derivative,
    series_div,
    series_exp,
    series_log,
)
from .hypersurface import (
    _check_positive,
    chern_oracle,
    chern_poly,
    hypersurface_ring,
    projective_ring,
)


def _check_dims(n: int, d: int) -> None:
    _check_positive("n", n)
    _check_positive("d", d)
    if n < 2:
        raise ValueError(f"Hirzebruch classes need n >= 2 (dim X >= 1), got n={n}")


# ---------------------------------------------------------------------------
# Chern polynomial in s


def chern_series(n: int, d: int) -> TruncatedSeries:
    """``C(s) = sum_k (-1)^k gamma_k h^k s^k`` over ``Q[h]/(h^n)``, order n-1."""
    _check_dims(n, d)
    data = chern_oracle(n, d)
    return TruncatedSeries(
        [(-1) ** k * data.chern_class(k) for k in range(n)], n - 1
    )


def chern_series_from_pushforward(n: int, d: int) -> TruncatedSeries:
    """Rebuild ``C(s)`` from the pushforward polynomial ``chern_poly(n)(-sH, d)``.

    That polynomial has zero constant term and is divisible by the nilpotent
    ``-dHs``; the cofactor, with ``H`` read as ``h``, is ``C(s)``.
    """
    _check_dims(n, d)
    ambient = projective_ring(n)
    H = ambient.gen("H")
    values = chern_poly(n).evaluate_t(d)
    pushed = [ambient.zero()] + [values[j] * (-H) ** j for j in range(1, n + 1)]
    if not pushed[0].is_zero():
        raise ArithmeticError("pushforward Chern polynomial has a nonzero constant term")

    target = hypersurface_ring(n)
    cofactor = []
    for j in range(1, n + 1):
        cls = pushed[j]
        extra = [k for k in cls.terms if k != (j,)]
        if extra:
            raise ArithmeticError(f"s^{j} coefficient {cls} is not a multiple of H^{j}")
        c = cls.coefficient({"H": j})
        q, r = divmod(c, -d)
        if r:
            raise ArithmeticError(f"s^{j} coefficient {c} is not divisible by -{d}")
        cofactor.append(target.monomial({"h": j - 1}, q))
    return TruncatedSeries(cofactor, n - 1)


# ---------------------------------------------------------------------------
# The characteristic series


def todd_series(order: int) -> TruncatedSeries:
    """``u / (1 - e^(-u))`` over Q."""
    # (1 - e^(-u))/u = sum_m (-1)^m u^m / (m+1)!
    denom = TruncatedSeries(
        [Fraction((-1) ** m, factorial(m + 1)) for m in range(order + 1)], order
    )
    return series_div(TruncatedSeries.constant(1, order), denom)


def q_series(order: int) -> TruncatedSeries:
    """``s (1 + y e^(-s)) / (1 - e^(-s))`` with ParamRational coefficients."""
    if order < 1:
        raise ValueError("q_series needs order >= 1")
    y = ParamRational.gen()
    twist = TruncatedSeries(
        [1 + y] + [y * Fraction((-1) ** m, factorial(m)) for m in range(1, order + 1)], order
    )
    return todd_series(order) * twist


@dataclass(frozen=True)
class ChiYGenus:
    """``chi_y = sum_p chi(X, Omega^p) y^p`` with integer coefficients, ascending in y."""

    coeffs: tuple[int, ...]

    @property
    def poly(self) -> DensePolynomial:
        return DensePolynomial(self.coeffs, "y")

    def at(self, y: int) -> int:
        return self.poly(y)

    @property
    def euler_characteristic(self) -> int:
        return self.at(-1)

    @property
    def holomorphic_euler_characteristic(self) -> int:
        """chi(O_X), the value at y = 0."""
        return self.at(0)

    @property
    def signature(self) -> int:
        return self.at(1)

    def is_serre_symmetric(self, dim: int) -> bool:
        cs = list(self.coeffs) + [0] * (dim + 1 - len(self.coeffs))
        return all(cs[p] == (-1) ** dim * cs[dim - p] for p in range(dim + 1))

    def __str__(self):
        return str(self.poly)


def _to_integer_genus(poly: DensePolynomial) -> ChiYGenus:
    out = []
    for c in poly.coeffs:
        if Fraction(c).denominator != 1:
            raise ArithmeticError(f"chi_y coefficient {c} is not an integer")
        out.append(int(c))
    return ChiYGenus(tuple(out))


@dataclass(frozen=True)
class HirzebruchClass:
    """Unnormalized Hirzebruch class of X; ``components[j]`` is the y-polynomial at ``h^j``."""

    n: int
    d: int
    components: tuple[DensePolynomial, ...]

    @property
    def dim(self) -> int:
        return self.n - 1

    def degree_zero_part(self) -> DensePolynomial:
        return self.components[self.dim]

    def __str__(self):
        terms = []
        for j, p in enumerate(self.components):
            if p.is_zero():
                continue
            mono = "" if j == 0 else ("*h" if j == 1 else f"*h^{j}")
            terms.append(f"({p}){mono}")
        return " + ".join(terms) if terms else "0"


def hirzebruch_class(n: int, d: int) -> HirzebruchClass:
    """Evaluate the log/Hadamard/exp formula for X of degree d in P^n.

    The ``s^k`` coefficient of the exponential (times ``(1+y)^k``) is the
    degree-zero part; lower ``s^j`` coefficients give the components of
    positive dimension and are returned too.
    """
    _check_dims(n, d)
    k = n - 1
    C = chern_series(n, d)
    power_sums = -(series_div(series_derivative(C), C).shift(1))
    y = ParamRational.gen()
    Q = q_series(k)
    L = series_log(Q * (1 / (1 + y)))
    E = series_exp(hadamard(L, power_sums))

    prefactor = (1 + y) ** k
    ring = hypersurface_ring(n)
    components = []
    for j in range(k + 1):
        coeff = E[j]
        cls = coeff if isinstance(coeff, GradedClass) else ring.constant(coeff)
        value = cls.coefficient({"h": j}) * prefactor
        if not (value == 0 or isinstance(value, ParamRational)):
            value = ParamRational(value)
        if value != 0 and not value.is_polynomial():
            raise ArithmeticError(
                f"h^{j} coefficient {value} is not polynomial in y (denominator {value.den})"
            )
        components.append(DensePolynomial((), "y") if value == 0 else value.as_polynomial())
    return HirzebruchClass(n, d, tuple(components))


def chi_y(n: int, d: int) -> ChiYGenus:
    """``int_X T_y(X)``, using ``int_X h^(n-1) = d``."""
    cls = hirzebruch_class(n, d)
    return _to_integer_genus(cls.degree_zero_part() * d)


def normalized_genus_series(order: int) -> TruncatedSeries:
    """``x(1+y)/(1 - e^(-x(1+y))) - xy`` over Q[y]; every coefficient is a y-polynomial."""
    todd = todd_series(order)
    one_plus_y = DensePolynomial([1, 1], "y")
    coeffs = [DensePolynomial([todd[m]], "y") * one_plus_y**m for m in range(order + 1)]
    if order >= 1:
        coeffs[1] = coeffs[1] - DensePolynomial([0, 1], "y")
    return TruncatedSeries(coeffs, order, "x")


def chi_y_oracle(n: int, d: int) -> ChiYGenus:
    """Classical route: ``chi_y = [H^n] R(H)^(n+1) / R(dH) * dH`` on P^n.

    Uses the normalized characteristic series R, whose coefficients are
    polynomial in y, and multiplicativity over ``0 -> TX -> TP^n|X -> O(d) -> 0``.
    """
    _check_dims(n, d)
    R = normalized_genus_series(n - 1)
    ratio = series_div(R ** (n + 1), R.scale_variable(d))
    return _to_integer_genus(ratio[n - 1] * d)

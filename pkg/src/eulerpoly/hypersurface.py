"""Invariants of a smooth degree-d hypersurface X in P^n from its Euler polynomial.

Conventions: ``t`` (or ``d``) is the degree, ``H`` the hyperplane class on
P^n, ``h = H|_X`` with ``int_X h^(n-1) = d``.  Every function that reads off
an invariant through ``theta`` has an adjunction-based twin (``chern_oracle``)
that the test-suite compares against.

The worked n=4 example in the source literature prints
``theta(E_4) = 10t - 5t^2 - t^3``; applying ``theta`` to ``E_4`` gives
``+t^3``, and only ``+t^3`` reproduces c1*c2 = 24 for P^3 and the printed
section polynomial, so the definition is what is implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

from .exact import BivariatePolynomial, DensePolynomial, GradedClass, GradedRing, poly_divide_exact


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


# ---------------------------------------------------------------------------
# Euler polynomial and theta


@dataclass(frozen=True)
class EulerPolynomial:
    n: int
    poly: DensePolynomial

    def __call__(self, d):
        return self.poly(d)

    def __str__(self):
        return str(self.poly)


@lru_cache(maxsize=None)
def euler_polynomial(n: int) -> EulerPolynomial:
    """``E_n(t) = -sum_{k=0}^{n-1} C(n+1, k) (-t)^(n-k)``; E_n(d) is chi of a degree-d hypersurface."""
    _check_positive("n", n)
    coeffs = [0] * (n + 1)
    for k in range(n):
        coeffs[n - k] -= comb(n + 1, k) * (-1) ** (n - k)
    return EulerPolynomial(n, DensePolynomial(coeffs, "t"))


def theta(p: DensePolynomial) -> DensePolynomial:
    """Drop the terms of degree <= 1 and divide by ``-t``.

    Coefficients are treated as opaque ring elements, so this also acts on
    polynomials with Chow-class coefficients.
    """
    return DensePolynomial([0] + [-c for c in p.coeffs[2:]], p.var)


def theta_power(p: DensePolynomial, k: int) -> DensePolynomial:
    for _ in range(k):
        p = theta(p)
    return p


@lru_cache(maxsize=None)
def theta_tower(n: int) -> tuple[DensePolynomial, ...]:
    """``(E_n, theta E_n, ..., theta^(n-1) E_n)``."""
    out = [euler_polynomial(n).poly]
    for _ in range(n - 1):
        out.append(theta(out[-1]))
    return tuple(out)


def euler_characteristic(n: int, d: int) -> int:
    _check_positive("n", n)
    _check_positive("d", d)
    return euler_polynomial(n)(d)


# ---------------------------------------------------------------------------
# The pushed-forward total Chern class


def chern_poly(n: int) -> BivariatePolynomial:
    """``sum_{j=1}^n (theta^(n-j) E_n)(t) s^j``.

    Its ``s^j`` coefficient at ``t = d``, times ``H^j``, is the pushforward of
    ``c_{j-1}(X)`` to P^n.
    """
    _check_positive("n", n)
    tower = theta_tower(n)
    coeffs = [DensePolynomial((), "t")] + [tower[n - j] for j in range(1, n + 1)]
    return BivariatePolynomial.from_s_coefficients(coeffs)


def projective_ring(n: int) -> GradedRing:
    """``Z[H]/(H^(n+1))``."""
    return GradedRing((("H", 1),), n)


def hypersurface_ring(n: int) -> GradedRing:
    """``Q[h]/(h^n)``, the part of the Chow ring of X pulled back from P^n."""
    return GradedRing((("h", 1),), n - 1)


def chern_poly_at(n: int, d: int) -> GradedClass:
    """``chern_poly(n)`` evaluated at ``s = H``, ``t = d`` inside ``Z[H]/(H^(n+1))``."""
    _check_positive("d", d)
    ring = projective_ring(n)
    values = chern_poly(n).evaluate_t(d)
    return sum(
        (ring.monomial({"H": j}, values[j]) for j in range(1, n + 1)), ring.zero()
    )


@dataclass(frozen=True)
class ChernData:
    """Chern classes of X from adjunction: ``c_k(X) = gammas[k] * h^k``."""

    n: int
    d: int
    gammas: tuple[int, ...]

    @property
    def ring(self) -> GradedRing:
        return hypersurface_ring(self.n)

    def chern_class(self, k: int) -> GradedClass:
        return self.ring.monomial({"h": k}, self.gammas[k])

    def total_chern_class(self) -> GradedClass:
        return sum((self.chern_class(k) for k in range(self.n)), self.ring.zero())

    def pushforward(self, k: int) -> int:
        """Coefficient of ``H^(k+1)`` in ``i_* c_k(X)``."""
        return self.gammas[k] * self.d

    def integrate(self, cls: GradedClass) -> int:
        return cls.coefficient({"h": self.n - 1}) * self.d

    def chern_number(self, parts) -> int:
        return self.integrate(prod((self.chern_class(j) for j in parts), start=self.ring.one()))


def chern_oracle(n: int, d: int) -> ChernData:
    """Adjunction: ``c(TX) = (1+h)^(n+1) / (1+dh)`` in ``Q[h]/(h^n)``."""
    _check_positive("n", n)
    _check_positive("d", d)
    ring = hypersurface_ring(n)
    h = ring.gen("h")
    total = (1 + h) ** (n + 1) * (1 + d * h).inverse()
    gammas = []
    for k in range(n):
        g = total.coefficient({"h": k})
        if int(g) != g:
            raise ArithmeticError(f"non-integral Chern coefficient {g} for n={n}, d={d}, k={k}")
        gammas.append(int(g))
    return ChernData(n, d, tuple(gammas))


# ---------------------------------------------------------------------------
# Chern numbers


def canonical_partition(parts) -> tuple[int, ...]:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def partitions(m: int) -> list[tuple[int, ...]]:
    """All partitions of ``m`` as weakly decreasing tuples, descending lexicographic order."""
    if m < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(m, m))


def _validate_partition(n: int, d: int, parts) -> tuple[int, ...]:
    _check_positive("n", n)
    _check_positive("d", d)
    parts = canonical_partition(parts)
    if sum(parts) != n - 1:
        raise ValueError(f"partition {list(parts)} must sum to n-1 = {n - 1}")
    return parts


def chern_number(n: int, d: int, parts) -> int:
    """``int_X c_{j1}(X)...c_{jm}(X)`` for X of degree d in P^n.

    Each factor ``(theta^(n-j-1) E_n)(d)`` is the pushforward of ``c_j`` and so
    carries one factor of ``d`` from ``[X] = dH``; only one such factor survives
    in the intersection number on X.
    """
    parts = _validate_partition(n, d, parts)
    tower = theta_tower(n)
    result = d
    for j in parts:
        value = tower[n - (j + 1)](d)
        q, r = divmod(value, d)
        if r:
            raise ArithmeticError(f"theta^{n - j - 1} E_{n}({d}) = {value} not divisible by {d}")
        result *= q
    return result


def corollary_product(n: int, d: int, parts) -> int:
    """The plain product ``prod_i (theta^(n-j_i-1) E_n)(d)``; equals ``d^(m-1) * chern_number``."""
    parts = _validate_partition(n, d, parts)
    tower = theta_tower(n)
    return prod(tower[n - (j + 1)](d) for j in parts)


def chern_numbers(n: int, d: int) -> dict[tuple[int, ...], int]:
    return {p: chern_number(n, d, p) for p in partitions(n - 1)}


# ---------------------------------------------------------------------------
# Hyperplane sections


def dual_chern_poly(n: int) -> BivariatePolynomial:
    """``s^n * chern_poly(n)(1/s, t) = sum_j (theta^(n-j) E_n)(t) s^(n-j)``."""
    _check_positive("n", n)
    tower = theta_tower(n)
    return BivariatePolynomial.from_s_coefficients(tower)


def section_euler_poly(n: int) -> BivariatePolynomial:
    """``(s * V(-s-1, t) + V(0, t)) / (s + 1)`` with ``V = dual_chern_poly(n)``.

    The coefficient of ``(-s)^r`` at ``t = d`` is chi of X cut by r general
    hyperplanes.
    """
    dual = dual_chern_poly(n)
    s = BivariatePolynomial.s()
    shifted = dual.substitute_s(-s - 1)
    at_zero = BivariatePolynomial({k: c for k, c in dual.terms.items() if k[0] == 0})
    numerator = (s * shifted + at_zero).as_s_polynomial()
    divisor = DensePolynomial([1, 1], "s")
    try:
        quotient = poly_divide_exact(numerator, divisor)
    except ValueError as exc:
        raise ArithmeticError(f"section polynomial for n={n} is not divisible by s+1") from exc
    return BivariatePolynomial.from_s_polynomial(quotient)


def section_euler_values(n: int, d: int) -> list[int]:
    """``[chi(X), chi(X.H1), ..., chi(X.H1...H_{n-1})]``."""
    _check_positive("d", d)
    values = section_euler_poly(n).evaluate_t(d)
    return [(-1) ** r * values[r] for r in range(n)]


# ---------------------------------------------------------------------------
# Hodge numbers of threefolds in P^4


def hodge_numbers_threefold(d: int) -> tuple[int, int]:
    """``(h^{0,3}, h^{1,2})`` of a smooth degree-d hypersurface in P^4."""
    c1c2 = chern_number(4, d, (2, 1))
    chi = euler_polynomial(4)(d)
    h03 = 1 - _exact_div(c1c2, 24)
    h12 = _exact_div(c1c2, 24) - _exact_div(chi - 2, 2)
    return h03, h12


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q

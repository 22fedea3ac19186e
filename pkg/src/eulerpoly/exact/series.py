"""Truncated formal power series over an exact commutative ring.

A ``TruncatedSeries`` with order ``N`` is known modulo ``s^(N+1)``.  Binary
operations keep the smaller of the two orders; differentiation lowers the
order by one and multiplication by ``s^m`` raises it by ``m``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ._ring import SCALARS, invert, is_zero, normalize_scalar


class TruncatedSeries:
    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: Iterable, order: int, var: str = "s"):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        cs = [normalize_scalar(c) for c in list(coeffs)[: order + 1]]
        cs += [0] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, c, order: int, var: str = "s") -> TruncatedSeries:
        return cls([c], order, var)

    @classmethod
    def gen(cls, order: int, var: str = "s") -> TruncatedSeries:
        return cls([0, 1], order, var)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def __len__(self):
        return self.order + 1

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, min(order, self.order), self.var)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return None

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries([self[i] + other[i] for i in range(n + 1)], n, self.var)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncatedSeries(cs, self.order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [0] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if is_zero(a):
                    continue
                for j in range(n + 1 - i):
                    out[i + j] = out[i + j] + a * other.coeffs[j]
            return TruncatedSeries(out, n, self.var)
        return TruncatedSeries([c * other for c in self.coeffs], self.order, self.var)

    def __rmul__(self, other):
        return TruncatedSeries([other * c for c in self.coeffs], self.order, self.var)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        inv = invert(other)
        return self * inv

    def __pow__(self, e: int):
        if e < 0:
            return series_div(TruncatedSeries.constant(1, self.order, self.var), self**-e)
        result = TruncatedSeries.constant(1, self.order, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            self.coeffs[i] == other.coeffs[i] for i in range(self.order + 1)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def agrees_with(self, other: TruncatedSeries) -> bool:
        """Equality up to the common truncation order."""
        n = min(self.order, other.order)
        return all(self[i] == other[i] for i in range(n + 1))

    def shift(self, m: int = 1) -> TruncatedSeries:
        """Multiply by ``s^m``; the result is known to order + m."""
        return TruncatedSeries([0] * m + list(self.coeffs), self.order + m, self.var)

    def scale_variable(self, a) -> TruncatedSeries:
        """Substitute ``s -> a*s``."""
        return TruncatedSeries([c * a**k for k, c in enumerate(self.coeffs)], self.order, self.var)

    def map_coefficients(self, f) -> TruncatedSeries:
        return TruncatedSeries([f(c) for c in self.coeffs], self.order, self.var)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if is_zero(c):
                continue
            c_str = str(c) if isinstance(c, SCALARS) else f"({c})"
            terms.append(c_str if k == 0 else f"{c_str}*{self.var}^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    if f.order == 0:
        # d/ds of a series known mod s is known mod s^0; represent as the empty zero of order 0.
        return TruncatedSeries([0], 0, f.var)
    return TruncatedSeries([k * f.coeffs[k] for k in range(1, f.order + 1)], f.order - 1, f.var)


def series_div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Return ``h`` with ``h*g == f`` to the common order.

    The constant term of ``g`` must be a unit of the coefficient ring;
    powers of ``s`` and nilpotent factors have to be cleared by the caller.
    """
    n = min(f.order, g.order)
    try:
        inv0 = invert(g[0])
    except ValueError as exc:
        raise ValueError(f"series division: constant term {g[0]} of divisor is not a unit") from exc
    h = []
    for k in range(n + 1):
        acc = f[k]
        for j in range(1, k + 1):
            if not is_zero(g[j]):
                acc = acc - g[j] * h[k - j]
        h.append(acc * inv0)
    return TruncatedSeries(h, n, f.var)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with zero constant term.

    Uses ``E' = f' E``, i.e. ``m E_m = sum_j j f_j E_{m-j}``, which needs the
    coefficient ring to contain the rationals.
    """
    if not is_zero(f[0]):
        raise ValueError(f"series_exp: constant term must be 0, got {f[0]}")
    e = [1]
    for m in range(1, f.order + 1):
        acc = 0
        for j in range(1, m + 1):
            if not is_zero(f[j]):
                acc = acc + (j * f[j]) * e[m - j]
        e.append(acc * Fraction(1, m))
    return TruncatedSeries(e, f.order, f.var)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term exactly 1."""
    if not f[0] == 1:
        raise ValueError(
            f"series_log: constant term must be 1, got {f[0]}; divide by it first"
        )
    # log f = integral of f'/f
    if f.order == 0:
        return TruncatedSeries([0], 0, f.var)
    q = series_div(series_derivative(f), f.truncate(f.order - 1))
    out = [0] + [q[k] * Fraction(1, k + 1) for k in range(f.order)]
    return TruncatedSeries(out, f.order, f.var)


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise product ``sum a_i b_i s^i``."""
    n = min(f.order, g.order)
    return TruncatedSeries([f[i] * g[i] for i in range(n + 1)], n, f.var)

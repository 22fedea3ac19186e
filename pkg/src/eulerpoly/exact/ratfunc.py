"""Rational functions in one parameter over Q, kept in reduced form."""

from __future__ import annotations

from fractions import Fraction

from ._ring import SCALARS, invert
from .poly import DensePolynomial, poly_gcd


class ParamRational:
    """``numerator/denominator`` with gcd 1 and a monic denominator.

    Reduction happens on every construction so ``==`` compares reduced forms
    directly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "y"):
        num = _as_poly(num, var)
        den = DensePolynomial([1], var) if den is None else _as_poly(den, var)
        if den.is_zero():
            raise ZeroDivisionError("ParamRational with zero denominator")
        if num.is_zero():
            num, den = DensePolynomial((), var), DensePolynomial([1], var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = invert(den.leading)
            num, den = num * lead, den * lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ParamRational is immutable")

    @classmethod
    def gen(cls, var: str = "y") -> ParamRational:
        return cls(DensePolynomial([0, 1], var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> DensePolynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial (denominator {self.den})")
        return self.num

    def _coerce(self, other):
        if isinstance(other, ParamRational):
            return other
        if isinstance(other, (DensePolynomial, *SCALARS)):
            return ParamRational(other, var=self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ParamRational(self.num + o.num, self.den)
        return ParamRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamRational(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ParamRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> ParamRational:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return ParamRational(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ParamRational(self.num**e, self.den**e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __call__(self, value):
        """Evaluate at a rational point; a pole raises ZeroDivisionError."""
        den = self.den(Fraction(value))
        if den == 0:
            raise ZeroDivisionError(f"{self} has a pole at {self.var}={value}")
        out = Fraction(self.num(Fraction(value))) / den
        return int(out) if out.denominator == 1 else out

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"ParamRational({self})"


def _as_poly(p, var: str) -> DensePolynomial:
    if isinstance(p, DensePolynomial):
        return p
    if isinstance(p, SCALARS):
        return DensePolynomial([p], var)
    raise TypeError(f"cannot build a ParamRational from {p!r}")

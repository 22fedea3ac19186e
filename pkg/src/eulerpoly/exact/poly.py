"""Dense univariate and sparse bivariate polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ._ring import SCALARS, invert, is_zero, normalize_scalar


class DensePolynomial:
    """Univariate polynomial, coefficients stored in ascending degree.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple.  ``var`` is only used for display.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [normalize_scalar(c) for c in coeffs]
        while cs and is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff=1, var: str = "t") -> DensePolynomial:
        return cls([0] * degree + [coeff], var)

    @classmethod
    def constant(cls, c, var: str = "t") -> DensePolynomial:
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "t") -> DensePolynomial:
        return cls([0, 1], var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _coerce(self, other):
        if isinstance(other, DensePolynomial):
            return other
        if isinstance(other, SCALARS):
            return DensePolynomial([other], self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            if not self.coeffs or not other.coeffs:
                return DensePolynomial((), self.var)
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return DensePolynomial(out, self.var)
        if isinstance(other, SCALARS):
            return DensePolynomial([c * other for c in self.coeffs], self.var)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, SCALARS):
            return DensePolynomial([other * c for c in self.coeffs], self.var)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = DensePolynomial([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> DensePolynomial:
        return DensePolynomial([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def map_coefficients(self, f) -> DensePolynomial:
        return DensePolynomial([f(c) for c in self.coeffs], self.var)

    def content_divides(self, m: int) -> bool:
        return all(c % m == 0 for c in self.coeffs)

    def divmod(self, den: DensePolynomial):
        """Long division; the divisor's leading coefficient must be a unit."""
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = invert(den.leading)
        rem = list(self.coeffs)
        dd = den.degree
        if len(rem) - 1 < dd:
            return DensePolynomial((), self.var), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] * inv_lead
            quot[k] = q
            if is_zero(q):
                continue
            for j, b in enumerate(den.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return DensePolynomial(quot, self.var), DensePolynomial(rem[:dd], self.var)

    def __floordiv__(self, den):
        return self.divmod(den)[0]

    def __mod__(self, den):
        return self.divmod(den)[1]

    def inverse(self) -> DensePolynomial:
        """Inverse of a unit constant; positive-degree polynomials are never units."""
        if self.degree != 0:
            raise ValueError(f"polynomial {self} is not a unit")
        return DensePolynomial([invert(self.coeffs[0])], self.var)

    def monic(self) -> DensePolynomial:
        if self.is_zero():
            return self
        return self * invert(self.leading)

    def to_list(self) -> list:
        """Ascending coefficient array; Fractions become ``"p/q"`` strings."""
        return [c if isinstance(c, int) else str(c) for c in self.coeffs]

    @classmethod
    def from_list(cls, data, var: str = "t") -> DensePolynomial:
        return cls([c if isinstance(c, int) else Fraction(c) for c in data], var)

    def to_str(self, ascending: bool = True) -> str:
        terms = []
        order = range(len(self.coeffs)) if ascending else range(len(self.coeffs) - 1, -1, -1)
        for k in order:
            c = self.coeffs[k]
            if is_zero(c):
                continue
            terms.append(_format_term(c, k, self.var))
        if not terms:
            return "0"
        out = terms[0]
        for term in terms[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"DensePolynomial({list(self.coeffs)!r}, var={self.var!r})"


def _format_term(c, k: int, var: str) -> str:
    power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if not isinstance(c, SCALARS):
        body = f"({c})"
        return body if not power else f"{body}*{power}"
    if not power:
        return str(c)
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{c}*{power}"


def poly_divide_exact(num: DensePolynomial, den: DensePolynomial) -> DensePolynomial:
    """Quotient of an exact division; raises ValueError on a nonzero remainder."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q, r = num.divmod(den)
    if not r.is_zero():
        raise ValueError(f"division by {den} is not exact: remainder {r}")
    return q


def poly_gcd(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    """Monic gcd over a field (coefficients must admit exact inversion)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class BivariatePolynomial:
    """Sparse polynomial in ``s`` and ``t``: ``{(i, j): c}`` means ``c*s^i*t^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            if not is_zero(c):
                clean[(int(key[0]), int(key[1]))] = normalize_scalar(c)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomial is immutable")

    @classmethod
    def from_s_coefficients(cls, coeffs: Iterable[DensePolynomial]) -> BivariatePolynomial:
        """Build ``sum_i coeffs[i](t) * s^i``."""
        terms = {}
        for i, p in enumerate(coeffs):
            for j, c in enumerate(p.coeffs):
                terms[(i, j)] = c
        return cls(terms)

    @classmethod
    def s(cls) -> BivariatePolynomial:
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> BivariatePolynomial:
        return cls({(0, 1): 1})

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, SCALARS):
            return BivariatePolynomial({(0, 0): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BivariatePolynomial({(0, 0): 1})
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree_s(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_t(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coefficient_s(self, i: int, var: str = "t") -> DensePolynomial:
        """The coefficient of ``s^i`` as a polynomial in ``t``."""
        top = self.degree_t
        return DensePolynomial([self.terms.get((i, j), 0) for j in range(top + 1)], var)

    def as_s_polynomial(self, var_t: str = "t") -> DensePolynomial:
        """View as a polynomial in ``s`` whose coefficients live in Z[t]."""
        return DensePolynomial(
            [self.coefficient_s(i, var_t) for i in range(self.degree_s + 1)], "s"
        )

    @classmethod
    def from_s_polynomial(cls, p: DensePolynomial) -> BivariatePolynomial:
        return cls.from_s_coefficients(
            c if isinstance(c, DensePolynomial) else DensePolynomial([c]) for c in p.coeffs
        )

    def substitute_s(self, value: BivariatePolynomial) -> BivariatePolynomial:
        """Replace ``s`` by another bivariate polynomial."""
        result = BivariatePolynomial()
        for i in range(self.degree_s, -1, -1):
            coeff = BivariatePolynomial({(0, j): c for (ii, j), c in self.terms.items() if ii == i})
            result = result * value + coeff
        return result

    def evaluate_t(self, d, var: str = "s") -> DensePolynomial:
        """Specialize ``t = d``, leaving a polynomial in ``s``."""
        top = self.degree_s
        return DensePolynomial([self.coefficient_s(i)(d) for i in range(top + 1)], var)

    def evaluate(self, s, t):
        return sum((c * s**i * t**j for (i, j), c in self.terms.items()), 0)

    def to_str(self) -> str:
        parts = []
        for i in range(self.degree_s + 1):
            c = self.coefficient_s(i)
            if c.is_zero():
                continue
            power = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            parts.append(f"({c})" + (f"*{power}" if power else ""))
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BivariatePolynomial({self.terms!r})"

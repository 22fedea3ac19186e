"""Duck-typed helpers shared by the exact containers.

Coefficients may be ``int``, ``Fraction`` or any of the ring types defined in
this package.  Python integers embed into every ring, so ``0`` and ``1`` are
used as the universal zero and one.
"""

from fractions import Fraction
from numbers import Rational

SCALARS = (int, Fraction)


def is_zero(c) -> bool:
    return c == 0


def invert(c):
    """Multiplicative inverse of a coefficient, or ValueError if it is not a unit."""
    if c == 0:
        raise ValueError(f"coefficient {c} is not invertible")
    if isinstance(c, Rational):
        if c == 1 or c == -1:
            return int(c)
        return Fraction(1) / c
    inverse = getattr(c, "inverse", None)
    if inverse is None:
        raise ValueError(f"no inverse available for coefficient {c!r}")
    return inverse()


def normalize_scalar(c):
    """Collapse integral Fractions back to int so that printing stays tidy."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c

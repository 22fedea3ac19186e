"""Weighted-graded polynomial rings truncated above a fixed weight.

These stand in for Chow rings: ``Z[H]/(H^(n+1))`` for projective space, and
the free ring on ``c_1..c_n`` (weight i) and ``X`` (weight 1) cut off above
weight ``n`` for an abstract ambient variety.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._ring import SCALARS, invert, is_zero, normalize_scalar


@dataclass(frozen=True)
class GradedRing:
    generators: tuple[tuple[str, int], ...]
    truncation: int

    def __post_init__(self):
        names = [g for g, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if any(w < 1 for _, w in self.generators):
            raise ValueError("generator weights must be positive")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g for g, _ in self.generators)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.generators)

    def weight(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def zero(self) -> GradedClass:
        return GradedClass(self, {})

    def one(self) -> GradedClass:
        return self.constant(1)

    def constant(self, c) -> GradedClass:
        return GradedClass(self, {(0,) * len(self.generators): c})

    def gen(self, name: str) -> GradedClass:
        idx = self.names.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(self.generators)))
        return GradedClass(self, {exps: 1})

    def monomial(self, powers: Mapping[str, int], coeff=1) -> GradedClass:
        exps = tuple(powers.get(name, 0) for name in self.names)
        return GradedClass(self, {exps: coeff})


class GradedClass:
    """An element of a ``GradedRing``; monomials above the truncation weight are dropped."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: Mapping[tuple[int, ...], object]):
        clean = {}
        for exps, c in terms.items():
            if is_zero(c) or ring.weight(exps) > ring.truncation:
                continue
            clean[tuple(exps)] = normalize_scalar(c)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedClass is immutable")

    def _check(self, other: GradedClass):
        if other.ring != self.ring:
            raise ValueError(
                f"graded ring mismatch: {self.ring.generators}/{self.ring.truncation} vs "
                f"{other.ring.generators}/{other.ring.truncation}"
            )

    def _constant_key(self):
        return (0,) * len(self.ring.generators)

    @property
    def constant_term(self):
        return self.terms.get(self._constant_key(), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, GradedClass):
            self._check(other)
            out = dict(self.terms)
            for k, c in other.terms.items():
                out[k] = out[k] + c if k in out else c
            return GradedClass(self.ring, out)
        return self + self.ring.constant(other)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GradedClass):
            self._check(other)
            out: dict = {}
            trunc = self.ring.truncation
            for e1, a in self.terms.items():
                w1 = self.ring.weight(e1)
                for e2, b in other.terms.items():
                    if w1 + self.ring.weight(e2) > trunc:
                        continue
                    key = tuple(x + y for x, y in zip(e1, e2))
                    out[key] = out[key] + a * b if key in out else a * b
            return GradedClass(self.ring, out)
        return GradedClass(self.ring, {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, other):
        return GradedClass(self.ring, {k: other * c for k, c in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, GradedClass):
            return self * other.inverse()
        return self * invert(other)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ring.one()
        for _ in range(e):
            result = result * self
        return result

    def inverse(self) -> GradedClass:
        """Inverse of ``u + nilpotent`` where ``u`` is a unit scalar."""
        u = self.constant_term
        try:
            u_inv = invert(u)
        except ValueError as exc:
            raise ValueError(f"class {self} is not a unit (constant term {u})") from exc
        nil = self * u_inv - 1
        # (1 + nil)^-1 = sum (-nil)^j, terminates since nil has positive weight
        result = self.ring.one()
        power = self.ring.one()
        for _ in range(self.ring.truncation):
            power = power * (-nil)
            if power.is_zero():
                break
            result = result + power
        return result * u_inv

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return self.ring == other.ring and self.terms == other.terms
        if other is None:
            return NotImplemented
        return self.terms == self.ring.constant(other).terms

    def __hash__(self):
        if set(self.terms) <= {self._constant_key()}:
            return hash(self.constant_term)
        return hash((self.ring, frozenset(self.terms.items())))

    def component(self, weight: int) -> GradedClass:
        """The homogeneous part of the given total weight."""
        return GradedClass(
            self.ring, {k: c for k, c in self.terms.items() if self.ring.weight(k) == weight}
        )

    def coefficient(self, powers: Mapping[str, int] | tuple[int, ...]):
        if not isinstance(powers, tuple):
            powers = tuple(powers.get(name, 0) for name in self.ring.names)
        return self.terms.get(powers, 0)

    def max_weight(self) -> int:
        return max((self.ring.weight(k) for k in self.terms), default=-1)

    def map_coefficients(self, f) -> GradedClass:
        return GradedClass(self.ring, {k: f(c) for k, c in self.terms.items()})

    def substitute(self, images: Mapping[str, GradedClass], target: GradedRing) -> GradedClass:
        """Ring homomorphism sending each generator to the given class in ``target``."""
        result = target.zero()
        for exps, c in self.terms.items():
            term = target.constant(c)
            for name, e in zip(self.ring.names, exps):
                if e:
                    term = term * images[name] ** e
            result = result + term
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (self.ring.weight(k), [-e for e in k]))
        parts = []
        for k in keys:
            c = self.terms[k]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.ring.names, k) if e
            )
            c_str = str(c) if isinstance(c, SCALARS) else f"({c})"
            if not mono:
                parts.append(c_str)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c_str}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"GradedClass({self})"

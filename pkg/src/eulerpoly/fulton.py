"""Fulton classes of a hypersurface X in an abstract smooth n-dimensional M.

The ambient Chow ring is modelled by the free graded ring on c_1..c_n
(weight i) and X (weight 1), cut off above weight n.  An identity that holds
there holds for every smooth M, so the checks below are exact symbolic
identities with no sampling.
"""

from __future__ import annotations

from math import comb

from .exact import DensePolynomial, GradedClass, GradedRing
from .hypersurface import _check_positive, chern_poly_at, projective_ring, theta, theta_power


def ambient_ring(n: int) -> GradedRing:
    _check_positive("n", n)
    gens = tuple((f"c{i}", i) for i in range(1, n + 1)) + (("X", 1),)
    return GradedRing(gens, n)


def ambient_chern_class(ring: GradedRing, i: int) -> GradedClass:
    if i == 0:
        return ring.one()
    return ring.gen(f"c{i}")


def segre_class(n: int) -> GradedClass:
    """``s(X, M) = X / (1 + X) = X - X^2 + X^3 - ...``."""
    ring = ambient_ring(n)
    X = ring.gen("X")
    return sum(((-1) ** (j - 1) * X**j for j in range(1, n + 1)), ring.zero())


def fulton_class(n: int) -> GradedClass:
    """``c(TM) . s(X, M)``."""
    ring = ambient_ring(n)
    total = sum((ambient_chern_class(ring, i) for i in range(n + 1)), ring.zero())
    return total * segre_class(n)


def general_euler_poly(n: int) -> DensePolynomial:
    """``c_{n-1} s - c_{n-2} s^2 + ... + (-1)^(n+1) s^n`` with class coefficients."""
    ring = ambient_ring(n)
    coeffs = [ring.zero()] + [
        (-1) ** (j - 1) * ambient_chern_class(ring, n - j) for j in range(1, n + 1)
    ]
    return DensePolynomial(coeffs, "s")


def evaluate_at_hypersurface(p: DensePolynomial, n: int) -> GradedClass:
    ring = ambient_ring(n)
    return sum(
        (c * ring.gen("X") ** k for k, c in enumerate(p.coeffs)), ring.zero()
    )


def fulton_from_top(n: int) -> GradedClass:
    """``sum_{j=0}^{n-1} theta^j(E_n)(X)``, the total class rebuilt from the top one."""
    ring = ambient_ring(n)
    p = general_euler_poly(n)
    total = ring.zero()
    for _ in range(n):
        total = total + evaluate_at_hypersurface(p, n)
        p = theta(p)
    return total


def ladder_component(n: int, k: int) -> GradedClass:
    """``c_k X - c_{k-1} X^2 + ... + (-1)^k X^(k+1)``."""
    ring = ambient_ring(n)
    X = ring.gen("X")
    return sum(
        ((-1) ** i * ambient_chern_class(ring, k - i) * X ** (i + 1) for i in range(k + 1)),
        ring.zero(),
    )


def verify_identity(n: int) -> bool:
    return fulton_from_top(n) == fulton_class(n)


def verify_tower(n: int) -> bool:
    """Each ``theta^j(E_n)(X)`` is exactly the weight ``n-j`` part of the Fulton class."""
    full = fulton_class(n)
    p = general_euler_poly(n)
    return all(
        evaluate_at_hypersurface(theta_power(p, j), n) == full.component(n - j)
        for j in range(n)
    )


def specialize_to_projective(n: int, d: int) -> GradedClass:
    """Substitute ``c_i -> C(n+1, i) H^i`` and ``X -> dH`` into the Fulton class."""
    _check_positive("d", d)
    target = projective_ring(n)
    H = target.gen("H")
    images = {f"c{i}": comb(n + 1, i) * H**i for i in range(1, n + 1)}
    images["X"] = d * H
    return fulton_class(n).substitute(images, target)


def verify_projective(n: int, d: int) -> bool:
    return specialize_to_projective(n, d) == chern_poly_at(n, d)

"""Verification sweeps comparing the theta-based formulas with independent oracles."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fulton, hirzebruch
from .hypersurface import (
    chern_number,
    chern_oracle,
    corollary_product,
    euler_polynomial,
    partitions,
    section_euler_poly,
    theta_tower,
)


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 8
    d_max: int = 10
    chi_y_n_max: int = 6
    chi_y_d_max: int = 8
    section_n_max: int = 10


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        status = "OK" if self.ok else "FAIL"
        line = f"{status} ({self.passed}/{self.total})"
        if self.failures:
            line += " first failures: " + ", ".join(self.failures[:5])
        return line


def check_fulton(n_max: int) -> CheckResult:
    res = CheckResult("fulton")
    for n in range(1, n_max + 1):
        res.record(fulton.verify_identity(n) and fulton.verify_tower(n), f"n={n}")
    return res


def check_theta_tower(n_max: int, d_max: int) -> CheckResult:
    res = CheckResult("theta-tower")
    for n in range(1, n_max + 1):
        tower = theta_tower(n)
        for d in range(1, d_max + 1):
            data = chern_oracle(n, d)
            ok = all(tower[n - (k + 1)](d) == data.pushforward(k) for k in range(n))
            res.record(ok, f"n={n},d={d}")
    return res


def check_chern_numbers(n_max: int, d_max: int) -> CheckResult:
    res = CheckResult("chern-numbers")
    for n in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            data = chern_oracle(n, d)
            for p in partitions(n - 1):
                value = chern_number(n, d, p)
                ok = value == data.chern_number(p)
                ok = ok and corollary_product(n, d, p) * d == d ** len(p) * value
                res.record(ok, f"n={n},d={d},p={list(p)}")
    return res


def check_sections(n_max: int) -> CheckResult:
    res = CheckResult("sections")
    for n in range(2, n_max + 1):
        e = section_euler_poly(n)
        for r in range(1, n):
            res.record(
                e.coefficient_s(r) * (-1) ** r == euler_polynomial(n - r).poly, f"n={n},r={r}"
            )
    return res


def check_chi_y(n_max: int, d_max: int) -> CheckResult:
    res = CheckResult("chi-y")
    for n in range(2, n_max + 1):
        for d in range(1, d_max + 1):
            g = hirzebruch.chi_y(n, d)
            ok = g == hirzebruch.chi_y_oracle(n, d)
            ok = ok and g.at(-1) == euler_polynomial(n)(d) and g.is_serre_symmetric(n - 1)
            res.record(ok, f"n={n},d={d}")
    return res


def run_oracle_checks(cfg: SweepConfig) -> list[CheckResult]:
    return [
        check_theta_tower(cfg.n_max, cfg.d_max),
        check_chern_numbers(cfg.n_max, cfg.d_max),
        check_sections(cfg.section_n_max),
        check_chi_y(cfg.chi_y_n_max, cfg.chi_y_d_max),
    ]

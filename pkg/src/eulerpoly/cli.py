"""Command-line front end.

Exit codes: 0 success, 1 failed verification or internal arithmetic error,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__, hirzebruch
from .exact import DensePolynomial
from .checks import SweepConfig, check_fulton, run_oracle_checks
from .hypersurface import (
    canonical_partition,
    chern_number,
    chern_numbers,
    chern_poly,
    corollary_product,
    euler_polynomial,
    hodge_numbers_threefold,
    partitions,
    section_euler_poly,
    section_euler_values,
    theta_tower,
)

ENGINE = f"eulerpoly-{__version__}"
CACHE_ENV = "CHERN_CALC_CACHE"
TABLE_INVARIANTS = ("chi", "chern-numbers", "sections", "hodge3", "chi-y")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ResultRecord:
    n: int | None
    d: int | None
    invariant: str
    values: object
    engine: str = ENGINE

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> ResultRecord:
        return cls(data["n"], data["d"], data["invariant"], data["values"], data["engine"])

    @classmethod
    def from_json(cls, line: str) -> ResultRecord:
        return cls.from_dict(json.loads(line))

    @property
    def key(self) -> tuple:
        return (self.engine, self.invariant, self.n, self.d)


def partition_key(parts) -> str:
    """``(2, 1) -> "[1,2]"``: the c_1 c_2 style index, smallest part first."""
    return "[" + ",".join(str(p) for p in sorted(parts)) + "]"


# ---------------------------------------------------------------------------
# invariant computations shared by the single commands and the table


def compute(invariant: str, n: int, d: int) -> ResultRecord:
    if invariant == "chi":
        return ResultRecord(n, d, "chi", euler_polynomial(n)(d))
    if invariant == "chern-numbers":
        values = {partition_key(p): v for p, v in chern_numbers(n, d).items()}
        return ResultRecord(n, d, "chern_numbers", values)
    if invariant == "sections":
        return ResultRecord(n, d, "sections", section_euler_values(n, d))
    if invariant == "hodge3":
        if n != 4:
            raise UsageError(f"hodge3 is only defined for n = 4, got n = {n}")
        h03, h12 = hodge_numbers_threefold(d)
        return ResultRecord(n, d, "hodge3", {"h03": h03, "h12": h12})
    if invariant == "chi-y":
        return ResultRecord(n, d, "chi_y", list(hirzebruch.chi_y(n, d).coeffs))
    raise UsageError(f"unknown invariant {invariant!r}; choose from {', '.join(TABLE_INVARIANTS)}")


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    if lo < 1:
        raise UsageError(f"range {text!r} must start at 1 or above")
    return range(lo, hi + 1)


def parse_partition(text: str) -> tuple[int, ...]:
    try:
        return canonical_partition(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"malformed partition {text!r}; expected j1,j2,...") from None


# ---------------------------------------------------------------------------
# cache


def load_cache(path: Path) -> dict[tuple, ResultRecord]:
    records = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if line.strip():
                rec = ResultRecord.from_json(line)
                records[rec.key] = rec
    return records


def append_cache(path: Path, records: list[ResultRecord]) -> None:
    if not records:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


# ---------------------------------------------------------------------------
# table rendering


def _cell(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render_table(records: list[ResultRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in records], separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
        writer.writerow(["n", "d", "invariant", "value"])
        for r in records:
            writer.writerow([r.n, r.d, r.invariant, _cell(r.values)])
        return buf.getvalue()
    lines = [f"{'n':>3} {'d':>4}  {records[0].invariant if records else 'value'}"]
    for r in records:
        lines.append(f"{r.n:>3} {r.d:>4}  {_cell(r.values)}")
    return "\n".join(lines) + "\n"


def emit_table(invariant, n_range, d_range, fmt="text", cache_path=None) -> str:
    if invariant not in TABLE_INVARIANTS:
        raise UsageError(f"unknown invariant {invariant!r}; choose from {', '.join(TABLE_INVARIANTS)}")
    if invariant == "hodge3" and list(n_range) != [4]:
        raise UsageError("hodge3 tables need --n 4")
    cache = load_cache(cache_path) if cache_path else {}
    records, fresh = [], []
    for n in n_range:
        for d in d_range:
            rec = compute(invariant, n, d)
            cached = cache.get(rec.key)
            if cached is None:
                fresh.append(rec)
                cache[rec.key] = rec
            records.append(cached or rec)
    if cache_path:
        append_cache(cache_path, fresh)
    return render_table(records, fmt)


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eulerpoly", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=ENGINE)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def with_format(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    def with_display(sp):
        sp.add_argument("--display", choices=("ascending", "descending"), default="ascending")
        return sp

    sp = with_display(with_format(sub.add_parser("euler", help="the Euler polynomial E_n")))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int)

    sp = with_display(with_format(sub.add_parser("theta", help="theta^k applied to E_n")))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = with_format(sub.add_parser("chern-poly", help="pushforward Chern polynomial in s, t"))
    sp.add_argument("--n", type=int, required=True)

    sp = with_format(sub.add_parser("chern-numbers", help="Chern numbers of X"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--partition")
    sp.add_argument("--literal", action="store_true", help="plain product of pushforward values")

    sp = with_format(sub.add_parser("sections", help="Euler characteristics of hyperplane sections"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int)

    sp = with_format(sub.add_parser("hodge3", help="(h03, h12) for a threefold in P^4"))
    sp.add_argument("--d", type=int, required=True)

    sp = with_format(sub.add_parser("chi-y", help="chi_y genus"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--at", type=int, choices=(-1, 0, 1))
    sp.add_argument("--symbolic", action="store_true")

    sp = sub.add_parser("verify", help="run verification sweeps")
    sp.add_argument("--fulton", action="store_true")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--d-max", type=int)

    sp = sub.add_parser("table", help="batch table over (n, d) ranges")
    sp.add_argument("--invariant", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--d", required=True)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--out")
    sp.add_argument("--cache")
    return p


def _positive(name, value):
    if isinstance(value, int) and value < 1:
        raise UsageError(f"--{name} must be >= 1, got {value}")


def _poly_text(poly, args) -> str:
    return poly.to_str(ascending=args.display == "ascending")


def _emit(record: ResultRecord, text: str, args, out) -> None:
    out.write((record.to_json() if args.format == "json" else text) + "\n")


def _run(args, out) -> int:
    cmd = args.command
    for name in ("n", "d", "n_max", "d_max"):
        _positive(name.replace("_", "-"), getattr(args, name, None))

    if cmd == "euler":
        e = euler_polynomial(args.n)
        if args.d is None:
            rec = ResultRecord(args.n, None, "euler_polynomial", e.poly.to_list())
            _emit(rec, f"E_{args.n}(t) = {_poly_text(e.poly, args)}", args, out)
        else:
            rec = ResultRecord(args.n, args.d, "chi", e(args.d))
            _emit(rec, f"E_{args.n}({args.d}) = {e(args.d)}", args, out)
    elif cmd == "theta":
        if not 0 <= args.k:
            raise UsageError("--k must be >= 0")
        tower = theta_tower(args.n)
        poly = tower[args.k] if args.k < args.n else DensePolynomial((), "t")
        rec = ResultRecord(args.n, None, f"theta^{args.k}", poly.to_list())
        _emit(rec, f"theta^{args.k} E_{args.n}(t) = {_poly_text(poly, args)}", args, out)
    elif cmd == "chern-poly":
        c = chern_poly(args.n)
        values = [c.coefficient_s(j).to_list() for j in range(c.degree_s + 1)]
        rec = ResultRecord(args.n, None, "chern_poly", values)
        _emit(rec, f"C_{args.n}(s,t) = {c}", args, out)
    elif cmd == "chern-numbers":
        fn = corollary_product if args.literal else chern_number
        name = "corollary_product" if args.literal else "chern_numbers"
        parts = [parse_partition(args.partition)] if args.partition else partitions(args.n - 1)
        values = {partition_key(p): fn(args.n, args.d, p) for p in parts}
        rec = ResultRecord(args.n, args.d, name, values)
        _emit(rec, "\n".join(f"{k}\t{v}" for k, v in values.items()), args, out)
    elif cmd == "sections":
        if args.d is None:
            e = section_euler_poly(args.n)
            values = [e.coefficient_s(r).to_list() for r in range(e.degree_s + 1)]
            rec = ResultRecord(args.n, None, "section_euler_poly", values)
            _emit(rec, f"e_{args.n}(s,t) = {e}", args, out)
        else:
            values = section_euler_values(args.n, args.d)
            rec = ResultRecord(args.n, args.d, "sections", values)
            text = "\n".join(f"r={r}\tchi={v}" for r, v in enumerate(values))
            _emit(rec, text, args, out)
    elif cmd == "hodge3":
        h03, h12 = hodge_numbers_threefold(args.d)
        rec = ResultRecord(4, args.d, "hodge3", {"h03": h03, "h12": h12})
        _emit(rec, f"h03 = {h03}\nh12 = {h12}", args, out)
    elif cmd == "chi-y":
        g = hirzebruch.chi_y(args.n, args.d)
        if args.at is not None and not args.symbolic:
            rec = ResultRecord(args.n, args.d, f"chi_y({args.at})", g.at(args.at))
            _emit(rec, str(g.at(args.at)), args, out)
        else:
            rec = ResultRecord(args.n, args.d, "chi_y", list(g.coeffs))
            text = f"chi_y = {g}"
            if not args.symbolic:
                text += f"\nchi_-1 = {g.at(-1)}\nchi_0 = {g.at(0)}\nchi_1 = {g.at(1)}"
            _emit(rec, text, args, out)
    elif cmd == "verify":
        return _verify(args, out)
    elif cmd == "table":
        n_range, d_range = parse_range(args.n), parse_range(args.d)
        cache = args.cache or os.environ.get(CACHE_ENV)
        text = emit_table(
            args.invariant, n_range, d_range, args.format, Path(cache) if cache else None
        )
        if args.out:
            Path(args.out).write_text(text)
        else:
            out.write(text)
    return 0


def _verify(args, out) -> int:
    if not (args.fulton or args.oracle or args.all):
        raise UsageError("verify needs --fulton, --oracle or --all")
    defaults = SweepConfig()
    n_max = args.n_max or defaults.n_max
    d_max = args.d_max or defaults.d_max
    results = []
    if args.fulton or args.all:
        results.append(check_fulton(n_max))
    if args.oracle or args.all:
        cfg = SweepConfig(
            n_max=n_max,
            d_max=d_max,
            chi_y_n_max=min(n_max, defaults.chi_y_n_max),
            chi_y_d_max=min(d_max, defaults.chi_y_d_max),
        )
        results.extend(run_oracle_checks(cfg))
    if len(results) == 1:
        out.write(results[0].summary() + "\n")
    else:
        for r in results:
            out.write(f"{r.name}: {r.summary()}\n")
    return 0 if all(r.ok for r in results) else 1


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ArithmeticError as exc:
        err.write(f"internal error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())

"""Dump the standard invariant tables to a directory as csv."""

import argparse
from pathlib import Path

from eulerpoly.cli import emit_table

TABLES = {
    "chi": (range(1, 9), range(1, 11)),
    "chern-numbers": (range(2, 7), range(1, 8)),
    "sections": (range(2, 7), range(1, 8)),
    "hodge3": (range(4, 5), range(1, 11)),
    "chi-y": (range(2, 6), range(1, 7)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, (ns, ds) in TABLES.items():
        path = args.outdir / f"{name}.csv"
        path.write_text(emit_table(name, ns, ds, "csv"))
        print(path)


if __name__ == "__main__":
    main()

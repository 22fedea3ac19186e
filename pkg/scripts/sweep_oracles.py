"""Run every oracle sweep over a configurable grid and report pass counts.

    python3 scripts/sweep_oracles.py --n-max 10 --d-max 15
"""

import argparse
import sys
import time
from dataclasses import fields

from eulerpoly.checks import SweepConfig, check_fulton, run_oracle_checks


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    for f in fields(SweepConfig):
        parser.add_argument("--" + f.name.replace("_", "-"), type=int, default=getattr(defaults, f.name))
    cfg = SweepConfig(**{f.name: getattr(parser.parse_args(), f.name) for f in fields(SweepConfig)})

    start = time.perf_counter()
    results = [check_fulton(cfg.n_max), *run_oracle_checks(cfg)]
    for r in results:
        print(f"{r.name:>14}: {r.summary()}")
    print(f"{cfg}  ({time.perf_counter() - start:.2f}s)")
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())

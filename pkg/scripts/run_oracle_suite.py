"""Run the brute-force oracle comparison and write the report as JSON.

    python3 scripts/run_oracle_suite.py --scope all --out results/oracle.json
"""

import argparse
import sys
import time
from pathlib import Path

from slopestab.cli import _oracle_table, run_oracle_suite
from slopestab.specdoc import dumps

SCOPES = ("p1", "p2", "graded", "curve-local", "all")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scope", choices=SCOPES, default="all")
    ap.add_argument("--kmax", type=int, default=None)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_oracle_suite(args.scope, args.kmax)
    elapsed = time.perf_counter() - t0

    print(_oracle_table(report))
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(dumps(report))
    return 0 if report["failed"] == 0 else 3


if __name__ == "__main__":
    sys.exit(main())

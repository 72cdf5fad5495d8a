"""Tabulate exact margins and Futaki invariants over a grid of c.

Writes a CSV with one row per (model, c).  Values are exact rationals
printed as p/q strings so the file can be diffed between runs.

    python3 scripts/export_slope_table.py --steps 8 --out results/slopes.csv
"""

import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

from slopestab import catalog
from slopestab.exactalg import rat_str
from slopestab.hilbert import hs_curve_subscheme, hs_projective_point
from slopestab.slope import decide, futaki, margin_poly, mu_c_ideal, mu_X
from slopestab.specdoc import build_model


def models():
    for entry in catalog.ENTRIES:
        if entry.spec.kind != "newton-diagram":
            yield entry.id, build_model(entry.spec)
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            yield f"P{n}-O({d})-point", hs_projective_point(n, d)
    # curve singularities of type (e, rho) on a genus 2 curve of degree 7
    for e, rho in ((2, 1), (3, 2), (4, 3), (4, 2)):
        yield f"g2-d7-e{e}-rho{rho}", hs_curve_subscheme(2, 7, e, rho, Fraction(7, e))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=8, help="grid points in (0, eps]")
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    rows = []
    for label, h in models():
        v = decide(h)
        N = margin_poly(h)
        for i in range(1, args.steps + 1):
            c = h.eps * Fraction(i, args.steps)
            rows.append({
                "model": label,
                "status": v.status.value,
                "c": rat_str(c),
                "mu_X": rat_str(mu_X(h)),
                "mu_c": rat_str(mu_c_ideal(h, c)),
                "margin": rat_str(N(c)),
                "futaki": rat_str(futaki(h, c, cross_check=False)),
            })

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(out, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``slopestab <command> ...``.

Exit codes: 0 result computed, 1 internal error, 2 invalid input,
3 oracle mismatch (or catalog entry not reproduced).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import catalog as cat
from . import chow, oracle, slope, testconfig
from .exactalg import as_rat
from .hilbert import HSModel, ModelError
from .specdoc import SpecError, VarietySpecDoc, build_model, dumps, load_spec_file, toric_case

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class Mismatch(Exception):
    def __init__(self, report: Any):
        super().__init__("oracle mismatch")
        self.report = report


# --- commands as plain functions (used by tests and scripts) -----------------


def _c_value(c: Optional[str]) -> Optional[Fraction]:
    if c is None:
        return None
    try:
        return as_rat(c)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SpecError(f"--c: {exc}") from None


def _witnesses(v: slope.StabilityVerdict) -> list:
    # exact roots as "p/q", irrational ones as isolating intervals [a, b]
    return [w if isinstance(w, Fraction) else list(w) for w in v.zero_set]


def run_slope(spec: VarietySpecDoc, c: Optional[Fraction] = None) -> dict:
    h = build_model(spec)
    v = slope.decide(h)
    out = {
        "label": h.label,
        "n": h.n,
        "eps": h.eps,
        "saturates_at_eps": h.saturates_at_eps,
        "mu_X": slope.mu_X(h),
        "margin": v.margin,
        "sign": v.sign.verdict,
        "status": v.status,
        "c_star": v.c_star,
        "zero_set": _witnesses(v),
        "polystability_note": v.polystability_note,
    }
    if c is not None:
        out["at_c"] = _at_c(h, c)
    return out


def _at_c(h: HSModel, c: Fraction) -> dict:
    w = testconfig.normal_cone_weight(h, c, allow_boundary=True)
    res = {
        "c": c,
        "mu_c_ideal": slope.mu_c_ideal(h, c),
        "futaki": slope.futaki(h, c),
        "b0": w.b0,
        "b1": w.b1,
        "margin": slope.margin_poly(h)(c),
    }
    try:
        res["mu_c_quotient"] = slope.mu_c_quotient(h, c)
    except ZeroDivisionError:
        res["mu_c_quotient"] = None
    return res


def run_futaki(spec: VarietySpecDoc, c: Fraction) -> dict:
    h = build_model(spec)
    try:
        return {"label": h.label, "mu_X": slope.mu_X(h), **_at_c(h, c)}
    except ModelError as exc:
        raise SpecError(f"--c: {exc}") from None


def _curve_genus_degree(spec: VarietySpecDoc) -> tuple[int, Fraction]:
    p = spec.parameters
    return p["g"], p["d"]


def run_chow(spec: VarietySpecDoc, c: Optional[Fraction] = None, r: Optional[int] = None) -> dict:
    if c is not None and c.denominator != 1:
        raise SpecError("--c: Chow slopes need an integer c")
    ci = int(c) if c is not None else None
    h = build_model(spec)
    out: dict[str, Any] = {"label": h.label}
    if spec.kind in ("curve-divisor", "curve-subscheme"):
        g, d = _curve_genus_degree(spec)
        if d.denominator != 1:
            raise SpecError("$.parameters.d: Chow thresholds need an integer degree")
        d = int(d)
        try:
            out["uniform_constant"] = chow.uniform_constant_curve(g, d)
            out["threshold"] = chow.chow_threshold_curve(g, d) if d > g else None
            out["asymptotically_chow_stable"] = chow.decide_asymptotic_chow_curve(g, d)
        except ModelError as exc:
            raise SpecError(f"$.parameters: {exc}") from None
        if spec.kind == "curve-divisor" and ci is not None:
            degZ = spec.parameters["degZ"]
            # Riemann-Roch: h0(L(-iZ)) = d - i degZ + 1 - g while d - i degZ > 2g - 2
            if any(d - i * degZ <= 2 * g - 2 for i in range(0, ci + 1)):
                raise SpecError("--c: section counts are not determined by Riemann-Roch in this range")
            data = chow.ChowData({i: d - i * degZ + 1 - g for i in range(1, ci + 1)}, d + 1 - g, h)
            out.update(_chow_slopes(data, ci))
    elif spec.kind == "toric-oracle-case":
        case = toric_case(spec)
        cap = ci if ci is not None else 1
        data = chow.ChowData(
            {i: oracle.h0_count(case, 1, i) for i in range(1, cap + 1)}, oracle.h0_count(case, 1, 0), h
        )
        if ci is not None:
            out.update(_chow_slopes(data, ci))
        out["Ch_X"] = chow.chow_slope_X(data)
        if r is not None and ci is not None:
            w_r = oracle.brute_normal_cone_weight(case, ci, r)
            chi_r = oracle.h0_count(case, r, 0)
            e = chow.eta(h, ci)
            ex = chow.eta_X(h)
            out["r"] = r
            out["eta_c"] = e(r)
            out["eta_X"] = ex(r)
            out["eta_coeffs"] = list(e.coeffs)
            out["chow_weight_coeff"] = chow.chow_weight_coeff(h, ci, r, w_r, chi_r)
    else:
        raise SpecError(f"$.kind: chow supports curve-divisor, curve-subscheme and toric-oracle-case, not {spec.kind}")
    return out


def _chow_slopes(data: chow.ChowData, c: int) -> dict:
    try:
        res = {"c": c, "Ch_c_ideal": chow.chow_slope(data, c), "Ch_X": chow.chow_slope_X(data)}
        try:
            res["Ch_c_quotient"] = chow.chow_quotient_slope(data, c)
        except ZeroDivisionError:
            res["Ch_c_quotient"] = None
        return res
    except ModelError as exc:
        raise SpecError(f"--c: {exc}") from None


def run_newton(spec: VarietySpecDoc) -> dict:
    if spec.kind != "newton-diagram":
        raise SpecError(f"$.kind: newton needs a newton-diagram spec, not {spec.kind}")
    try:
        diagram = testconfig.concave_hull(spec.parameters["points"])
    except ValueError as exc:
        raise SpecError(f"$.parameters.points: {exc}") from None
    hD = build_model(spec.parameters["divisor"])
    try:
        w = testconfig.divisor_tc_weight(diagram, hD, ample=spec.flags["ample"])
    except ModelError as exc:
        raise SpecError(f"$.parameters: {exc}") from None
    return {
        "hull_vertices": [list(v) for v in diagram.hull_vertices],
        "slopes": list(diagram.slopes),
        "coefficients": list(diagram.coefficients),
        "weight": {"b0": w.b0, "b1": w.b1, "accuracy": w.accuracy},
        "futaki": w.futaki(hD.a0_const, hD.a1_const),
    }


# --- oracle comparison suites -------------------------------------------------


def _row(suite: str, case: str, check: str, expected: Any, got: Any, ok: Optional[bool] = None) -> dict:
    return {
        "suite": suite,
        "case": case,
        "check": check,
        "expected": expected,
        "got": got,
        "pass": (expected == got) if ok is None else ok,
    }


def _suite_normal_cone(ambient: oracle.Ambient, degrees: Sequence[int], cs: Sequence[int], kmax: int) -> list[dict]:
    rows = []
    n = 1 if ambient is oracle.Ambient.P1 else 2
    name = ambient.value.lower()
    for d in degrees:
        case = oracle.ToricCase(ambient, d)
        h = case.model()
        ks = list(range(1, kmax + 1))
        flat = all(sum(oracle.weight_decomposition(case, 1, k)) == oracle.h0_count(case, k, 0) for k in ks)
        rows.append(_row(name, f"d={d}", "flatness", True, flat))
        for c in cs:
            samples = oracle.normal_cone_samples(case, c, ks)
            poly = oracle.fit_weight_poly(samples, n + 1)
            got = (poly[n + 1], poly[n])
            label = f"d={d} c={c}"
            try:
                w = testconfig.normal_cone_weight(h, c)
            except ModelError:
                rows.append(_row(name, label, "b0,b1 (c > eps: formula not applicable)", None, list(got), True))
                continue
            rows.append(_row(name, label, "b0,b1", [w.b0, w.b1], list(got)))
            if ambient is oracle.Ambient.P1 and d == 3 and c == 1:
                rows.append(_row(name, label, "full polynomial", ["0", "-1/2", "-1/2"], [str(x) for x in poly.coeffs]))
    return rows


GRADED_CASES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (5, (1,)),
    (5, (2, 1)),
    (5, (3, 1, 1)),
    (5, (2,)),
    (5, (3,)),
    (5, (4, 1)),
    (5, (5, 2)),
    (3, (3, 2, 1)),
)


def _suite_graded(kmax: int) -> list[dict]:
    rows = []
    for d, layers in GRADED_CASES:
        case = oracle.ToricCase(oracle.Ambient.P1, d)
        tc = oracle.GradedTC(case, layers)
        diagram = testconfig.concave_hull(tc.generators)
        w = testconfig.divisor_tc_weight(diagram, case.model(), ample=True)
        # fractional slopes give a quasi-polynomial; sample along k = M, 2M, ...
        step = math.lcm(*(m.denominator for m in diagram.slopes))
        ks = [step * i for i in range(1, max(4, kmax // step) + 1)]
        poly = oracle.fit_weight_poly([(k, oracle.brute_graded_weight(tc, k)) for k in ks], 2)
        label = f"d={d} layers={list(layers)}"
        rows.append(_row("graded", label, "b0", w.b0, poly[2]))
        if w.accuracy is testconfig.Accuracy.UP_TO_KN1:
            rows.append(_row("graded", label, "b1", w.b1, poly[1]))
        if len(layers) == 1 and layers[0] == 1:
            same = all(
                oracle.brute_graded_weight(tc, k) == oracle.brute_normal_cone_weight(case, 1, k) for k in range(1, kmax + 1)
            )
            rows.append(_row("graded", label, "single layer equals normal cone", True, same))
    return rows


NODE_CASES: tuple[tuple[str, tuple, Optional[tuple[int, int]]], ...] = (
    ("(X, Y)", ((1, 1, 0, 1), (0, 1, 1, 1)), (2, 1)),
    ("(X + Y)", ((1, 1, 1, 1),), (2, 0)),
    ("(X^2 + Y)", ((1, 2, 1, 1),), (3, 0)),
    ("(X^2, Y^2)", ((1, 2, 0, 1), (0, 1, 1, 2)), (4, 1)),
    ("(X^3 + Y^2)", ((1, 3, 1, 2),), (5, 0)),
)


def _suite_curve_local(kmax: int) -> list[dict]:
    rows = []
    for name, gens, expected in NODE_CASES:
        e, rho = oracle.curve_local_rho(gens, max(kmax, 4))
        rows.append(_row("curve-local", name, "(e, rho)", list(expected), [e, rho]))
        rows.append(_row("curve-local", name, "-1 <= rho <= 1 and 2 rho <= e", True, -1 <= rho <= 1 and 2 * rho <= e))
    return rows


SCOPES = ("p1", "p2", "graded", "curve-local", "all")


def run_oracle_suite(scope: str, kmax: Optional[int] = None) -> dict:
    if scope not in SCOPES:
        raise SpecError(f"--scope: expected one of {list(SCOPES)}")
    rows: list[dict] = []
    if scope in ("p1", "all"):
        rows += _suite_normal_cone(oracle.Ambient.P1, range(1, 6), (1, 2), kmax or oracle.kmax_cap(oracle.P1_KMAX))
    if scope in ("p2", "all"):
        rows += _suite_normal_cone(oracle.Ambient.P2, (1, 2), (1,), kmax or oracle.kmax_cap(oracle.P2_KMAX))
    if scope in ("graded", "all"):
        rows += _suite_graded(kmax or oracle.kmax_cap(48))
    if scope in ("curve-local", "all"):
        rows += _suite_curve_local(kmax or 12)
    failed = sum(1 for r in rows if not r["pass"])
    return {"scope": scope, "rows": rows, "passed": len(rows) - failed, "failed": failed}


# --- catalog ------------------------------------------------------------------


def run_catalog_entry(entry_id: str) -> dict:
    try:
        entry = cat.get(entry_id)
    except KeyError:
        raise SpecError(f"catalog: unknown id {entry_id!r}; see `catalog list`") from None
    res = run_slope(entry.spec)
    got = (res["status"], res["mu_X"], res["c_star"], tuple(res["margin"].coeffs))
    expected = (entry.status, entry.mu_X, entry.c_star, entry.margin)
    res["id"] = entry.id
    res["reproduced"] = got == expected
    if entry.id in cat.CY_ALPHA:
        res["cy_canonical_check"] = slope.cy_canonical_check(build_model(entry.spec), cat.CY_ALPHA[entry.id])
    return res


# --- argument handling ----------------------------------------------------------


def _text(obj: Any, indent: str = "") -> str:
    from .specdoc import jsonable

    data = jsonable(obj)
    lines = []
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)) and v and k != "margin":
                lines.append(f"{indent}{k}:")
                if isinstance(v, list):
                    for item in v:
                        lines.append(f"{indent}  - {item}")
                else:
                    lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def _oracle_table(report: dict) -> str:
    out = []
    for r in report["rows"]:
        flag = "PASS" if r["pass"] else "FAIL"
        out.append(f"{flag}  {r['suite']:<12} {r['case']:<22} {r['check']:<36} expected={_fmt(r['expected'])} got={_fmt(r['got'])}")
    out.append(f"{report['passed']} passed, {report['failed']} failed")
    return "\n".join(out)


def _fmt(v: Any) -> str:
    from .specdoc import jsonable

    return str(jsonable(v))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slopestab", description="Exact slope-stability invariants.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--kmax", type=int, default=None, help="cap on enumeration ranges")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("slope", "futaki", "chow", "newton"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--spec", required=True, help="variety spec JSON file")
        if name != "newton":
            p.add_argument("--c", default=None, help="slope parameter as p/q")
        if name == "chow":
            p.add_argument("--r", type=int, default=None, help="power of L for eta and the Chow weight")

    o = sub.add_parser("oracle", parents=[common])
    osub = o.add_subparsers(dest="oracle_command", required=True)
    oc = osub.add_parser("compare", parents=[common])
    oc.add_argument("--scope", default="all", choices=SCOPES)

    c = sub.add_parser("catalog", parents=[common])
    csub = c.add_subparsers(dest="catalog_command", required=True)
    csub.add_parser("list", parents=[common])
    cr = csub.add_parser("run", parents=[common])
    cr.add_argument("id")
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[Any, int, Optional[str]]:
    if args.command in ("slope", "futaki", "chow", "newton"):
        spec = load_spec_file(args.spec)
        if args.command == "slope":
            return run_slope(spec, _c_value(args.c)), EXIT_OK, None
        if args.command == "futaki":
            c = _c_value(args.c)
            if c is None:
                raise SpecError("--c: required for futaki")
            return run_futaki(spec, c), EXIT_OK, None
        if args.command == "chow":
            return run_chow(spec, _c_value(args.c), args.r), EXIT_OK, None
        return run_newton(spec), EXIT_OK, None
    if args.command == "oracle":
        if args.kmax is not None and args.kmax < 4:
            raise SpecError("--kmax: must be at least 4")
        report = run_oracle_suite(args.scope, args.kmax)
        code = EXIT_MISMATCH if report["failed"] else EXIT_OK
        return report, code, _oracle_table(report)
    if args.catalog_command == "list":
        listing = [{"id": e.id, "description": e.description, "status": e.status} for e in cat.ENTRIES]
        return listing, EXIT_OK, "\n".join(f"{e.id:<26} {e.description}" for e in cat.ENTRIES)
    res = run_catalog_entry(args.id)
    return res, EXIT_OK if res["reproduced"] else EXIT_MISMATCH, None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result, code, text = _dispatch(args)
    except (SpecError, ModelError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        sys.stdout.write(dumps(result))
    else:
        print(text if text is not None else _text(result))
    return code


if __name__ == "__main__":
    raise SystemExit(main())

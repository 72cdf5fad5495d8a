"""Worked examples with frozen expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .slope import Status
from .specdoc import SCHEMA_VERSION, VarietySpecDoc, parse_spec


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    spec: VarietySpecDoc
    status: Status
    mu_X: Fraction
    c_star: Optional[Fraction] = None
    margin: tuple[Fraction, ...] = ()  # N(c) coefficients, constant term first
    note: str = ""


def _spec(kind: str, label: str, flags: Optional[dict] = None, **params) -> VarietySpecDoc:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "label": label,
        "parameters": {k: (str(v) if not isinstance(v, list) else v) for k, v in params.items()},
    }
    if flags:
        doc["flags"] = flags
    return parse_spec(doc)


def _pn(n: int, label: str) -> VarietySpecDoc:
    # point on (P^n, O(1)): L^n = 1, K.L^{n-1} = -(n+1), eps = 1, sections saturate at eps
    return _spec("point-on-smooth", label, {"saturates_at_eps": True}, n=n, Ln=1, KLn1=-(n + 1), eps=1)


F = Fraction

ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "p1-point", "point on (P^1, O(1))", _pn(1, "point on P^1"),
        Status.BOUNDARY, F(1), F(1), (F(0), F(1, 2), F(-1, 2)),
        "equality (-K.L^{n-1}) eps = (n+1) L^n at c = eps",
    ),
    CatalogEntry(
        "pn-point", "point on (P^2, O(1))", _pn(2, "point on P^2"),
        Status.BOUNDARY, F(3), F(1), (F(0), F(0), F(1, 2), F(-1, 2)),
        "equality case; at best semistable",
    ),
    CatalogEntry(
        "p3-point", "point on (P^3, O(1))", _pn(3, "point on P^3"),
        Status.BOUNDARY, F(6), F(1), (F(0), F(0), F(0), F(1, 4), F(-1, 4)),
        "equality case",
    ),
    CatalogEntry(
        "p4-point", "point on (P^4, O(1))", _pn(4, "point on P^4"),
        Status.BOUNDARY, F(10), F(1), (F(0), F(0), F(0), F(0), F(1, 12), F(-1, 12)),
        "equality case",
    ),
    CatalogEntry(
        "g0-point", "point on a rational curve, deg L = 3",
        _spec("curve-divisor", "point on P^1 with O(3)", g=0, d=3, degZ=1),
        Status.BOUNDARY, F(1, 3), F(3), (F(0), F(1, 2), F(-1, 6)),
        "equality at c = eps = d",
    ),
    CatalogEntry(
        "g1-point", "point on an elliptic curve, deg L = 3",
        _spec("curve-divisor", "point on elliptic curve", g=1, d=3, degZ=1),
        Status.STABLE, F(0), None, (F(0), F(1, 2)),
    ),
    CatalogEntry(
        "g2-point", "point on a genus-2 curve, deg L = 3",
        _spec("curve-divisor", "point on genus 2 curve", g=2, d=3, degZ=1),
        Status.STABLE, F(-1, 3), None, (F(0), F(1, 2), F(1, 6)),
    ),
    CatalogEntry(
        "genus2-node", "ordinary double point (e = 2, rho = 1) on a genus-2 curve, deg L = 5",
        _spec("curve-subscheme", "node on genus 2 curve", g=2, d=5, e=2, rho=1, eps="5/2"),
        Status.STABLE, F(-1, 5), None, (F(0), F(0), F(1, 5)),
        "nodes do not destabilise",
    ),
    CatalogEntry(
        "genus2-triple-point", "point of multiplicity 3 (e = 3, rho = 2) on a genus-2 curve, deg L = 5",
        _spec("curve-subscheme", "triple point on genus 2 curve", g=2, d=5, e=3, rho=2, eps="5/3"),
        Status.DESTABILISED, F(-1, 5), F(5, 6), (F(0), F(-1, 2), F(3, 10)),
        "rho >= e - 1 forces N(c) < 0 near 0 once e >= 3",
    ),
    CatalogEntry(
        "k3-quartic-point", "point on a quartic K3 surface",
        _spec("point-on-smooth", "point on quartic K3", n=2, Ln=4, KLn1=0, eps=1),
        Status.STABLE, F(0), None, (F(0), F(0), F(1, 2)),
        "K numerically trivial",
    ),
    CatalogEntry(
        "canonical-surface-point", "point on a canonically polarised surface with K^2 = 2",
        _spec("point-on-smooth", "point on canonical surface", n=2, Ln=2, KLn1=2, eps=1),
        Status.STABLE, F(-1), None, (F(0), F(0), F(1, 2), F(1, 6)),
        "K = L",
    ),
)

CY_ALPHA = {"k3-quartic-point": Fraction(0), "canonical-surface-point": Fraction(1)}


def get(entry_id: str) -> CatalogEntry:
    for e in ENTRIES:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


__all__ = ["CatalogEntry", "ENTRIES", "CY_ALPHA", "get"]

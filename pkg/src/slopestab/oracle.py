"""Brute-force section counts and weights on P^1, P^2 and the node model.

Everything here is done by listing exponent vectors; no closed-form
dimension formula is used, so the results can check the formulas in
:mod:`slopestab.testconfig` and :mod:`slopestab.slope`.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exactalg import Poly, RatLike, as_rat, interpolate
from .hilbert import HSModel, hs_projective_point

P1_KMAX = 50
P2_KMAX = 20


def kmax_cap(default: int) -> int:
    """Enumeration cap, overridable by the SLOPESTAB_KMAX environment variable."""
    env = os.environ.get("SLOPESTAB_KMAX")
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("SLOPESTAB_KMAX must be positive")
        return value
    return default


class Ambient(str, enum.Enum):
    P1 = "P1"
    P2 = "P2"


@dataclass(frozen=True)
class ToricCase:
    """(P^n, O(d)) with the fat point m*p at a torus-fixed point p."""

    ambient: Ambient
    d: int
    m: int = 1

    def __post_init__(self):
        if self.d < 1 or self.m < 1:
            raise ValueError("need d >= 1 and m >= 1")
        object.__setattr__(self, "ambient", Ambient(self.ambient))

    @property
    def dim(self) -> int:
        return 1 if self.ambient is Ambient.P1 else 2

    @property
    def kmax(self) -> int:
        return kmax_cap(P1_KMAX if self.ambient is Ambient.P1 else P2_KMAX)

    def model(self) -> HSModel:
        """Closed-form model of the reduced point (the fat point is handled by thickening)."""
        from .hilbert import thicken

        h = hs_projective_point(self.dim, self.d)
        return thicken(h, self.m) if self.m > 1 else h


@lru_cache(maxsize=None)
def _count_vanishing(ambient: Ambient, degree: int, order: int) -> int:
    # p = [0:...:0:1]; the vanishing order of x^a (y^b) z^rest at p is a (+ b)
    if ambient is Ambient.P1:
        return sum(1 for a in range(degree + 1) if a >= order)
    return sum(1 for a in range(degree + 1) for b in range(degree - a + 1) if a + b >= order)


def h0_vanishing(case: ToricCase, k: int, order: int) -> int:
    """h0(L^k) restricted to sections vanishing to ``order`` at p."""
    return _count_vanishing(case.ambient, case.d * k, max(order, 0))


def h0_count(case: ToricCase, k: int, j: int) -> int:
    """h0(L^k (x) I_Z^j) with Z = m p, by monomial enumeration."""
    if k < 0 or j < 0:
        raise ValueError("k and j must be nonnegative")
    return h0_vanishing(case, k, case.m * j)


def brute_normal_cone_weight(case: ToricCase, c: RatLike, k: int) -> int:
    """Total weight of the deformation to the normal cone of Z on H0(L^k).

    The central fibre splits into pieces t^j H0(L^k I^{ck-j}) / H0(L^k I^{ck-j+1}),
    j = 0..ck (with I^{ck+1} read as 0 for j = 0 ... and I^0 = O); the weight
    is -sum j * dim.
    """
    ck = as_rat(c) * k
    if ck.denominator != 1:
        raise ValueError(f"c*k = {ck} is not an integer")
    ck = int(ck)
    total = 0
    for j in range(ck + 1):
        top = h0_count(case, k, ck - j)
        below = h0_count(case, k, ck - j + 1) if j > 0 else 0
        total -= j * (top - below)
    return total


def weight_decomposition(case: ToricCase, c: RatLike, k: int) -> list[int]:
    """Dimensions of the weight pieces used by :func:`brute_normal_cone_weight`."""
    ck = as_rat(c) * k
    if ck.denominator != 1:
        raise ValueError(f"c*k = {ck} is not an integer")
    ck = int(ck)
    return [
        h0_count(case, k, ck - j) - (h0_count(case, k, ck - j + 1) if j > 0 else 0)
        for j in range(ck + 1)
    ]


@dataclass(frozen=True)
class GradedTC:
    """I = I_p^{m_0} + t I_p^{m_1} + ... + t^{r-1} I_p^{m_{r-1}} + (t^r).

    ``ideal_layers`` holds the non-increasing multiplicities m_0, m_1, ...;
    the case's own multiplicity is ignored (layers act on the reduced point).
    """

    case: ToricCase
    ideal_layers: tuple[int, ...]

    def __post_init__(self):
        layers = tuple(int(x) for x in self.ideal_layers)
        if any(x < 0 for x in layers):
            raise ValueError("multiplicities must be nonnegative")
        if any(b > a for a, b in zip(layers, layers[1:])):
            raise ValueError("multiplicities must be non-increasing")
        object.__setattr__(self, "ideal_layers", layers)

    @property
    def generators(self) -> tuple[tuple[int, int], ...]:
        """(z-exponent, t-exponent) of the monomial generators, ending with (0, r)."""
        layers = self.ideal_layers
        return tuple((m, i) for i, m in enumerate(layers)) + ((0, len(layers)),)


def _power_exponents(gens: Sequence[tuple[int, int]], k: int) -> list[int]:
    """e[j] = least z-exponent of t^j in I^k, for j = 0..r*k.

    Products of k generators are built one factor at a time; multiplication
    by t is then applied through a running minimum over j.
    """
    r = gens[-1][1]
    top = r * k
    INF = 10**18
    best = [INF] * (top + 1)
    best[0] = 0
    for _ in range(k):
        nxt = [INF] * (top + 1)
        for s, e in enumerate(best):
            if e == INF:
                continue
            for gz, gt in gens:
                if s + gt <= top and e + gz < nxt[s + gt]:
                    nxt[s + gt] = e + gz
        best = nxt
    out = []
    running = INF
    for e in best:
        running = min(running, e)
        out.append(running)
    return out


def graded_decomposition(tc: GradedTC, k: int) -> list[int]:
    """Dimensions of the t^j pieces of H0(L^k I^k) / t H0(L^k I^k), j = 0..rk."""
    reduced = ToricCase(tc.case.ambient, tc.case.d, 1)
    e = _power_exponents(tc.generators, k)
    dims = []
    prev = 0
    for ej in e:
        cur = h0_vanishing(reduced, k, ej)
        dims.append(cur - prev)
        prev = cur
    return dims


def brute_graded_weight(tc: GradedTC, k: int) -> int:
    """-sum j * dim of the t-graded pieces of the central fibre."""
    return -sum(j * dim for j, dim in enumerate(graded_decomposition(tc, k)))


class FitError(ValueError):
    """Samples are not described by a single polynomial of the expected degree."""


def fit_weight_poly(samples: Sequence[tuple[int, RatLike]], degree: Optional[int] = None) -> Poly:
    """Exact polynomial through the samples.

    With ``degree`` given, the polynomial is fitted on the last degree+1
    samples and every other sample must agree with it.  Without it, the
    full interpolant is returned.
    """
    pts = [(Fraction(k), as_rat(w)) for k, w in samples]
    if len({k for k, _ in pts}) != len(pts):
        raise FitError("repeated sample abscissa")
    if degree is None:
        return interpolate(pts)
    if len(pts) < degree + 2:
        raise FitError(f"need at least {degree + 2} samples to fit and validate degree {degree}")
    p = interpolate(pts[-(degree + 1):])
    bad = [(k, w) for k, w in pts if p(k) != w]
    if bad:
        raise FitError(f"samples off the fitted polynomial at k = {[str(k) for k, _ in bad]}")
    return p


def normal_cone_samples(case: ToricCase, c: RatLike, ks: Sequence[int]) -> list[tuple[int, int]]:
    return [(k, brute_normal_cone_weight(case, c, k)) for k in ks]


# --- node model R = C[X, Y] / (XY) -----------------------------------------


Generator = tuple[RatLike, int, RatLike, int]


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[col]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                f *= inv
                ri = rows[i]
                for cc in range(col, ncols):
                    if pr[cc]:
                        ri[cc] -= f * pr[cc]
        rank += 1
    return rank


def node_colength(gens: Sequence[Generator], k: int) -> int:
    """dim R / I^k for I generated by a X^p + b Y^q in R = C[X, Y] / (XY)."""
    clean = [(as_rat(a), int(p), as_rat(b), int(q)) for a, p, b, q in gens]
    if not any(a for a, _, _, _ in clean) or not any(b for _, _, b, _ in clean):
        raise ValueError("ideal is not supported at the origin")
    for a, p, b, q in clean:
        if (a and p < 1) or (b and q < 1):
            raise ValueError("ideal is not supported at the origin")
        if not a and not b:
            raise ValueError("zero generator")
    T = max(max(p, q) for _, p, _, q in clean) * k + 1
    # basis: 1, X^1..X^T, Y^1..Y^T; X^s and Y^s with s > T lie in I^k anyway
    size = 2 * T + 1

    def col_x(s: int) -> int:
        return s if s else 0

    def col_y(s: int) -> int:
        return T + s if s else 0

    # products of generators have the form A X^P + B Y^Q since XY = 0
    products = set()
    for combo in itertools.combinations_with_replacement(range(len(clean)), k):
        A, B, P, Q = Fraction(1), Fraction(1), 0, 0
        for idx in combo:
            a, p, b, q = clean[idx]
            A, B, P, Q = A * a, B * b, P + p, Q + q
        products.add((A, P, B, Q))
    rows = []
    for A, P, B, Q in products:
        row = [Fraction(0)] * size
        if A and P <= T:
            row[col_x(P)] += A
        if B and Q <= T:
            row[col_y(Q)] += B
        rows.append(row)
        for s in range(1, T + 1):
            if A and P + s <= T:
                r = [Fraction(0)] * size
                r[col_x(P + s)] = A
                rows.append(r)
            if B and Q + s <= T:
                r = [Fraction(0)] * size
                r[col_y(Q + s)] = B
                rows.append(r)
    return size - _rank(rows)


def curve_local_rho(gens: Sequence[Generator], kmax: int = 12) -> tuple[int, int]:
    """(e, rho) with dim R / I^k = e k - rho for large k, on the node model."""
    if kmax < 4:
        raise ValueError("kmax must be at least 4")
    ks = list(range(2, kmax + 1))
    vals = {k: node_colength(gens, k) for k in ks}
    upper = ks[len(ks) // 2:]
    k0, k1 = upper[0], upper[1]
    e = vals[k1] - vals[k0]
    rho = e * k0 - vals[k0]
    if any(vals[k] != e * k - rho for k in upper):
        raise FitError("colength is not affine on the upper half of the range")
    return e, rho


__all__ = [
    "P1_KMAX",
    "P2_KMAX",
    "kmax_cap",
    "Ambient",
    "ToricCase",
    "h0_count",
    "h0_vanishing",
    "brute_normal_cone_weight",
    "weight_decomposition",
    "GradedTC",
    "graded_decomposition",
    "brute_graded_weight",
    "FitError",
    "fit_weight_poly",
    "normal_cone_samples",
    "node_colength",
    "curve_local_rho",
]

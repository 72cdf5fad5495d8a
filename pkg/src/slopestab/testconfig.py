"""Weights of test configurations built from a subscheme or a monomial flag ideal.

Conventions: a weight polynomial w(k) = b0 k^{n+1} + b1 k^n + ...; the
Donaldson-Futaki invariant is F = b0 a1 - b1 a0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .exactalg import Poly, RatLike, as_rat, bernoulli_beta
from .hilbert import HSModel, ModelError


class Accuracy(str, enum.Enum):
    EXACT = "exact"
    UP_TO_KN1 = "up-to-k^{n-1}"
    UP_TO_KN = "up-to-k^n"


@dataclass(frozen=True)
class WeightExpansion:
    b0: Fraction
    b1: Fraction
    full: Optional[Poly] = None
    accuracy: Accuracy = Accuracy.UP_TO_KN1

    def __post_init__(self):
        if self.full is not None:
            top = self.full.degree
            if (self.full[top], self.full[top - 1]) != (self.b0, self.b1):
                raise ValueError("full polynomial disagrees with (b0, b1)")

    def futaki(self, a0: Fraction, a1: Fraction) -> Fraction:
        return self.b0 * a1 - self.b1 * a0

    def __add__(self, other: WeightExpansion) -> WeightExpansion:
        return WeightExpansion(self.b0 + other.b0, self.b1 + other.b1, None, _worst(self.accuracy, other.accuracy))

    def scale(self, s: RatLike) -> WeightExpansion:
        s = as_rat(s)
        return WeightExpansion(self.b0 * s, self.b1 * s, None, self.accuracy)


_ORDER = [Accuracy.EXACT, Accuracy.UP_TO_KN1, Accuracy.UP_TO_KN]


def _worst(a: Accuracy, b: Accuracy) -> Accuracy:
    return max(a, b, key=_ORDER.index)


def normal_cone_weight(h: HSModel, c: RatLike, allow_boundary: bool = False) -> WeightExpansion:
    """(b0, b1) for the deformation to the normal cone of Z with L - cE.

    c = eps is admitted only when the model saturates there, unless
    ``allow_boundary`` is set (the closed form is then taken at face value).
    """
    c = as_rat(c)
    if c <= 0 or c > h.eps:
        raise ModelError(f"c = {c} outside (0, eps] = (0, {h.eps}]")
    if c == h.eps and not (h.saturates_at_eps or allow_boundary):
        raise ModelError("c = eps needs a model that saturates at eps")
    b0 = h.a0.integrate(0, c) - c * h.a0_const
    b1 = h.a1.integrate(0, c) + (h.a0(c) - h.a0(0)) / 2 - c * h.a1_const
    return WeightExpansion(b0, b1)


# --- normalised weights --------------------------------------------------

SectionCounts = Callable[[int, int], int]


def _section_sum(h0: SectionCounts, k: int, top: int) -> int:
    return sum(h0(k, j) for j in range(1, top + 1))


def _int_product(c: Fraction, k: int) -> int:
    ck = c * k
    if ck.denominator != 1:
        raise ModelError(f"c*k = {ck} is not an integer")
    return int(ck)


def normalized_weight(
    h: HSModel,
    c: RatLike,
    r: int,
    k: int,
    h0: Optional[SectionCounts] = None,
    chi: Optional[Callable[[int], RatLike]] = None,
) -> Fraction:
    """w~_{r,k}(c) = r chi_r S_k - k chi_k w(r) - c k chi_k r chi_r.

    S_k = sum_{j=1}^{ck} h0(L^k I^j) and w(r) = S_r - c r h0(L^r).  With
    ``h0`` omitted the counts are replaced by chi(L^k I^j) from the model's
    full coefficient list, which is the large-r form.  ``chi`` defaults to
    h0(k, 0).
    """
    c = as_rat(c)
    ck, cr = _int_product(c, k), _int_product(c, r)
    if h0 is None:
        if not h.has_full_coefficients:
            raise ModelError("closed form needs a_2..a_n")

        def h0(kk: int, j: int) -> Fraction:  # noqa: F811
            return h.chi_twisted(kk, j) if j else h.chi(kk)

    if chi is None:
        chi_k, chi_r = as_rat(h0(k, 0)), as_rat(h0(r, 0))
    else:
        chi_k, chi_r = as_rat(chi(k)), as_rat(chi(r))
    s_k = _section_sum(h0, k, ck)
    w_r = _section_sum(h0, r, cr) - cr * as_rat(h0(r, 0))
    return r * chi_r * s_k - k * chi_k * w_r - c * k * chi_k * r * chi_r


def section_sum_coefficients(h: HSModel, c: RatLike) -> list[Fraction]:
    """C_0..C_{n+1} with sum_{j=1}^{ck} chi(L^k I^j) = sum_m C_m k^{n+1-m}."""
    c = as_rat(c)
    out = []
    for m in range(h.n + 2):
        total = Fraction(0)
        for i in range(min(m, h.n) + 1):
            ell = m - i
            f = h.coefficient(i)
            if ell == 0:
                total += f.integrate(0, c)
            else:
                g = f
                for _ in range(ell - 1):
                    g = g.derivative()
                total += bernoulli_beta(ell) * (g(c) - g(0))
        out.append(total)
    return out


def normalized_weight_bivariate(h: HSModel, c: RatLike) -> dict[tuple[int, int], Fraction]:
    """Coefficients E[(i, j)] of r^{n+1-i} k^{n+1-j} in the large-r normalised weight.

    The normalised weight equals r chi(r) S(k) - k chi(k) S(r), so
    E[(i, j)] = X_i C_j - X_j C_i with X_i the ambient constants.  The
    diagonal vanishes and E[(1, 0)] is the Futaki invariant.
    """
    C = section_sum_coefficients(h, c)
    X = [h.ambient_constant(i) for i in range(h.n + 1)] + [Fraction(0)]
    size = h.n + 2
    return {(i, j): X[i] * C[j] - X[j] * C[i] for i in range(size) for j in range(size)}


# --- Newton diagrams -----------------------------------------------------


@dataclass(frozen=True)
class NewtonDiagram:
    raw_points: tuple[tuple[int, int], ...]
    hull_vertices: tuple[tuple[int, Fraction], ...]
    slopes: tuple[Fraction, ...]  # m_1..m_{l-1}; m_0 = 0 is implicit

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """m_i - m_{i-1} for i = 1..l-1."""
        prev = Fraction(0)
        out = []
        for m in self.slopes:
            out.append(m - prev)
            prev = m
        return tuple(out)


def _slope(a: tuple[int, Fraction], b: tuple[int, Fraction]) -> Fraction:
    return Fraction(b[1] - a[1]) / (a[0] - b[0])


def concave_hull(raw_points: Sequence[tuple[int, RatLike]]) -> NewtonDiagram:
    """Boundary of the Newton diagram of I = z^{p_1} + t^{i_2} z^{p_2} + ... + (t^r).

    Points are (p, i) with p the z-exponent and i the t-exponent, listed by
    increasing i.  Collinear points stay on the hull (their coefficient is
    then zero); a point with the same p as an earlier one is dropped.
    """
    pts = [(int(p), as_rat(i)) for p, i in raw_points]
    if not pts:
        raise ValueError("empty point list")
    if pts[0][1] != 0:
        raise ValueError("first point must have t-exponent 0")
    if pts[-1][0] != 0:
        raise ValueError("last point must have z-exponent 0")
    for (p0, i0), (p1, i1) in zip(pts, pts[1:]):
        if p1 > p0 or i1 <= i0:
            raise ValueError("points must have non-increasing p and increasing t-exponent")
        if p0 < 0:
            raise ValueError("negative exponent")
    distinct = [pts[0]]
    for pt in pts[1:]:
        if pt[0] != distinct[-1][0]:
            distinct.append(pt)
    hull: list[tuple[int, Fraction]] = []
    for pt in distinct:
        while len(hull) >= 2 and _slope(hull[-2], hull[-1]) > _slope(hull[-1], pt):
            hull.pop()
        hull.append(pt)
    slopes = tuple(_slope(a, b) for a, b in zip(hull, hull[1:]))
    return NewtonDiagram(tuple((int(p), as_rat(i)) for p, i in raw_points), tuple(hull), slopes)


def basechange(diagram: NewtonDiagram, M: int) -> NewtonDiagram:
    """Replace t by t^M: every t-exponent (and slope) is multiplied by M."""
    if M < 1:
        raise ValueError("M must be a positive integer")
    return NewtonDiagram(
        tuple((p, i * M) for p, i in diagram.raw_points),
        tuple((k, rho * M) for k, rho in diagram.hull_vertices),
        tuple(m * M for m in diagram.slopes),
    )


def divisor_tc_weight(diagram: NewtonDiagram, hD: HSModel, ample: bool = False) -> WeightExpansion:
    """Weight of the blow-up of X x C in a flag ideal supported on a reduced divisor D.

    Sum over hull vertices of (m_i - m_{i-1}) * normal_cone_weight(hD, k_i).
    Fractional slopes are cleared by a basechange t -> t^M first and the
    result divided by M.  ``ample`` asserts L ample and I integrally
    closed, which together with integral slopes sharpens the accuracy.
    """
    M = math.lcm(*(m.denominator for m in diagram.slopes)) if diagram.slopes else 1
    work = basechange(diagram, M) if M > 1 else diagram
    total = WeightExpansion(Fraction(0), Fraction(0), None, Accuracy.EXACT)
    for coeff, (k, _) in zip(work.coefficients, work.hull_vertices):
        if coeff == 0:
            continue
        if coeff < 0:
            raise ArithmeticError("hull is not concave")
        total = total + normal_cone_weight(hD, k).scale(coeff)
    acc = Accuracy.UP_TO_KN1 if (ample and M == 1) else Accuracy.UP_TO_KN
    return WeightExpansion(total.b0 / M, total.b1 / M, None, acc)


def seshadri_of_chain(eps_list: Sequence[RatLike]) -> Fraction:
    if not eps_list:
        raise ValueError("empty list of Seshadri constants")
    vals = [as_rat(e) for e in eps_list]
    if any(v <= 0 for v in vals):
        raise ValueError("Seshadri constants must be positive")
    return min(vals)


__all__ = [
    "Accuracy",
    "WeightExpansion",
    "normal_cone_weight",
    "normalized_weight",
    "section_sum_coefficients",
    "normalized_weight_bivariate",
    "NewtonDiagram",
    "concave_hull",
    "basechange",
    "divisor_tc_weight",
    "seshadri_of_chain",
]

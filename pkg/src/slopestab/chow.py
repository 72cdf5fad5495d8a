"""Chow slopes, the asymptotic Chow slope eta_c, and curve thresholds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .exactalg import RatLike, as_rat
from .hilbert import HSModel, ModelError
from .testconfig import normal_cone_weight, section_sum_coefficients

INF = math.inf
Slope = Union[Fraction, float]  # float only for the infinite sentinel


@dataclass(frozen=True)
class ChowData:
    """Section counts h0(I_Z^i(1)) for i = 1..c and N + 1 = h0(O(1)).

    The embedding is assumed to be by the complete linear system, so
    N + 1 = h0_X(L).
    """

    h0_ideal: Mapping[int, int]
    N_plus_1: int
    base: HSModel
    kodaira_embedded: bool = field(default=True)

    def __post_init__(self):
        keys = sorted(self.h0_ideal)
        if any(i < 1 for i in keys):
            raise ModelError("powers of the ideal start at 1")
        vals = [self.h0_ideal[i] for i in keys]
        if any(v < 0 or v > self.N_plus_1 for v in vals):
            raise ModelError("h0(I^i(1)) must lie in [0, N+1]")
        for (i, v), (j, w) in zip(zip(keys, vals), zip(keys[1:], vals[1:])):
            if w > v:
                raise ModelError(f"h0 counts increase between powers {i} and {j}")

    def counts(self, c: int) -> list[int]:
        missing = [i for i in range(1, c + 1) if i not in self.h0_ideal]
        if missing:
            raise ModelError(f"missing h0(I^i(1)) for i in {missing}")
        return [self.h0_ideal[i] for i in range(1, c + 1)]


@dataclass(frozen=True)
class EtaExpansion:
    coeffs: tuple[Fraction, ...]  # c_0..c_{n+1}, c_0 = 1

    def __call__(self, r: int) -> Fraction:
        top = len(self.coeffs) - 1
        return sum((cj * Fraction(r) ** (top - j) for j, cj in enumerate(self.coeffs)), Fraction(0))


def _check_c(d: ChowData, c: int) -> None:
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise ModelError("c must be a positive integer")
    if c > d.base.eps:
        raise ModelError(f"c = {c} exceeds eps = {d.base.eps}")


def chow_slope(d: ChowData, c: int) -> Slope:
    """Ch_c(I_Z) = sum_{i<=c} h0(I^i(1)) / int_0^c a0; ``math.inf`` if the integral vanishes."""
    _check_c(d, c)
    num = sum(d.counts(c))
    den = d.base.a0.integrate(0, c)
    if den == 0:
        return INF
    return Fraction(num) / den


def chow_slope_X(d: ChowData) -> Fraction:
    """Ch(X) = (N + 1) / a0."""
    return Fraction(d.N_plus_1) / d.base.a0_const


def chow_quotient_slope(d: ChowData, c: int) -> Fraction:
    _check_c(d, c)
    num = sum(d.N_plus_1 - v for v in d.counts(c))
    den = c * d.base.a0_const - d.base.a0.integrate(0, c)
    if den == 0:
        raise ZeroDivisionError("int_0^c (a0 - a0(x)) vanishes")
    return Fraction(num) / den


def _curve_range(g: int, d: int) -> None:
    if g < 1:
        raise ModelError("genus must be at least 1")
    if d <= 2 * g - 2:
        raise ModelError("need d > 2g - 2")


def uniform_constant_curve(g: int, d: int) -> Fraction:
    _curve_range(g, d)
    return Fraction(g, d)


def chow_threshold_curve(g: int, d: int) -> Fraction:
    if d <= 2 * g - 2:
        raise ModelError("need d > 2g - 2")
    if d <= g:
        raise ModelError("need d > g")
    return (1 + Fraction(1, d - g)) * (g - Fraction(1, 2)) / d


def decide_asymptotic_chow_curve(g: int, d: int) -> bool:
    """Does the uniform constant g/d strictly beat the threshold?

    Returns False when d <= g, where the threshold is undefined.
    """
    _curve_range(g, d)
    if d <= g:
        return False
    return uniform_constant_curve(g, d) > chow_threshold_curve(g, d)


def eta(h: HSModel, c: RatLike) -> EtaExpansion:
    """c_j = C_j / C_0 where sum_{j=1}^{cr} chi(L^r I^j) = sum_j C_j r^{n+1-j}."""
    if not h.has_full_coefficients:
        raise ModelError("eta needs a_2..a_n")
    C = section_sum_coefficients(h, c)
    if C[0] == 0:
        raise ZeroDivisionError("int_0^c a0 vanishes")
    return EtaExpansion(tuple(x / C[0] for x in C))


def eta_X(h: HSModel) -> EtaExpansion:
    """eta_X(r) = r chi(L^r) / a0, as an expansion in r."""
    if not h.has_full_coefficients:
        raise ModelError("eta_X needs a_2..a_n")
    return EtaExpansion(tuple(h.ambient_constant(i) / h.a0_const for i in range(h.n + 1)) + (Fraction(0),))


def chow_weight_coeff(h: HSModel, c: RatLike, r: int, w_r: RatLike, chi_r: RatLike) -> Fraction:
    """e_{n+1}(r) = b0 r chi(L^r) - a0 w(r); negative means Chow unstable at r."""
    b0 = normal_cone_weight(h, c, allow_boundary=True).b0
    return b0 * r * as_rat(chi_r) - h.a0_const * as_rat(w_r)


def mumford_check(a: RatLike, rhos: Sequence[RatLike], a0: RatLike, N_plus_1: int, delta: RatLike = 0) -> bool:
    """-(N+1)/a0 * a < sum(rho) + delta, with delta the user's h^1 correction."""
    a, a0, delta = as_rat(a), as_rat(a0), as_rat(delta)
    if len(rhos) != N_plus_1:
        raise ModelError("need one weight per basis vector of H0(O(1))")
    return -Fraction(N_plus_1) / a0 * a < sum((as_rat(x) for x in rhos), Fraction(0)) + delta


def h1_bound_curve(g: int, h0_L: int) -> int:
    """Clifford-type bound h1(L) <= max(1 + g - h0(L), 0) on a smooth curve."""
    return max(1 + g - h0_L, 0)


__all__ = [
    "INF",
    "ChowData",
    "EtaExpansion",
    "chow_slope",
    "chow_slope_X",
    "chow_quotient_slope",
    "uniform_constant_curve",
    "chow_threshold_curve",
    "decide_asymptotic_chow_curve",
    "eta",
    "eta_X",
    "chow_weight_coeff",
    "mumford_check",
    "h1_bound_curve",
]

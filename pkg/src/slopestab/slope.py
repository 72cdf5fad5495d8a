"""K-slopes, Donaldson-Futaki invariants and slope-stability verdicts."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactalg import IntervalSign, Poly, RatLike, Sign, as_rat, sign_on_interval
from .hilbert import HSModel, ModelError, quotient_of


class Status(str, enum.Enum):
    STABLE = "stable-wrt-Z"
    DESTABILISED = "strictly-destabilised"
    BOUNDARY = "boundary-semistable"


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    margin: Poly
    zero_set: tuple
    c_star: Optional[Fraction]
    sign: IntervalSign
    polystability_note: str = ""


def _admissible(h: HSModel, c: RatLike) -> Fraction:
    c = as_rat(c)
    if not 0 < c <= h.eps:
        raise ModelError(f"c = {c} outside (0, eps] = (0, {h.eps}]")
    return c


def mu_X(h: HSModel) -> Fraction:
    if h.a0_const <= 0:
        raise ModelError("a0 must be positive")
    return h.a1_const / h.a0_const


def _ideal_numerator(h: HSModel, c: Fraction) -> Fraction:
    # int_0^c a1 + a0'/2 = int a1 + (a0(c) - a0(0)) / 2
    return h.a1.integrate(0, c) + (h.a0(c) - h.a0(0)) / 2


def mu_c_ideal(h: HSModel, c: RatLike) -> Fraction:
    c = _admissible(h, c)
    denom = h.a0.integrate(0, c)
    if denom == 0:
        raise ZeroDivisionError("int_0^c a0 vanishes")
    return _ideal_numerator(h, c) / denom


def mu_c_quotient(h: HSModel, c: RatLike) -> Fraction:
    c = _admissible(h, c)
    q = quotient_of(h)
    denom = q.t0.integrate(0, c)
    if denom == 0:
        raise ZeroDivisionError("int_0^c (a0 - a0(x)) vanishes; Z is empty to leading order")
    num = q.t1.integrate(0, c) + (q.t0(c) - q.t0(0)) / 2
    return num / denom


def futaki(h: HSModel, c: RatLike, cross_check: bool = True) -> Fraction:
    """Donaldson-Futaki invariant of the deformation to the normal cone at c.

    Computed as a0 (mu(X) - mu_c) int_0^c a0; with ``cross_check`` the
    value is also rebuilt from the weight coefficients as b0 a1 - b1 a0.
    """
    c = _admissible(h, c)
    integral = h.a0.integrate(0, c)
    value = h.a0_const * (mu_X(h) * integral - _ideal_numerator(h, c))
    if cross_check:
        from .testconfig import normal_cone_weight

        w = normal_cone_weight(h, c, allow_boundary=True)
        other = w.b0 * h.a1_const - w.b1 * h.a0_const
        if other != value:
            raise ArithmeticError(f"Futaki paths disagree: {value} vs {other}")
    return value


def margin_poly(h: HSModel) -> Poly:
    """N(c) = mu(X) int_0^c a0 - int_0^c (a1 + a0'/2), a polynomial in c."""
    mu = mu_X(h)
    A0 = h.a0.antiderivative()
    A1 = h.a1.antiderivative()
    return A0.scale(mu) - A1 - (h.a0 - h.a0(0)).scale(Fraction(1, 2))


def decide(h: HSModel) -> StabilityVerdict:
    """Sign-analyse N on (0, eps), plus c = eps when the model saturates there."""
    N = margin_poly(h)
    s = sign_on_interval(N, 0, h.eps, include_hi=h.saturates_at_eps)
    zeros = s.witnesses
    if s.verdict in (Sign.CHANGES_SIGN, Sign.STRICTLY_NEGATIVE, Sign.NONPOSITIVE_WITH_ZERO):
        return StabilityVerdict(Status.DESTABILISED, N, zeros, s.negative_at, s)
    if s.verdict is Sign.IDENTICALLY_ZERO:
        return StabilityVerdict(
            Status.BOUNDARY, N, (), h.eps, s,
            "equality for every c; polystability needs a product configuration",
        )
    if s.verdict is Sign.NONNEGATIVE_WITH_ZERO:
        exact = s.exact_roots()
        return StabilityVerdict(
            Status.BOUNDARY, N, zeros, exact[0] if exact else None, s,
            "polystable only if the degeneration at c_star is a product configuration",
        )
    return StabilityVerdict(Status.STABLE, N, (), None, s)


def slope_comparisons(h: HSModel, c: RatLike) -> tuple[bool, bool, bool]:
    """(mu_c(I_Z) < mu(X), mu(X) < mu_c(O_Z), mu_c(I_Z) < mu_c(O_Z))."""
    mu = mu_X(h)
    ideal = mu_c_ideal(h, c)
    quot = mu_c_quotient(h, c)
    return ideal < mu, mu < quot, ideal < quot


def cy_canonical_check(h: HSModel, alpha: RatLike) -> bool:
    """Check slope stability along Z when K_X is numerically alpha * L, alpha >= 0.

    Confirms -mu(X) a0(x) + a1(x) <= 0 on (0, eps] and then that the margin
    N(c) is strictly positive on (0, eps].
    """
    alpha = as_rat(alpha)
    if alpha < 0:
        raise ModelError("alpha must be nonnegative")
    mu = mu_X(h)
    if mu != -h.n * alpha / 2:
        raise ModelError(f"mu(X) = {mu} is inconsistent with K = {alpha} L")
    q = quotient_of(h)
    if q.t0.is_zero() and q.t1.is_zero():
        return True
    pointwise = h.a1 - h.a0.scale(mu)
    s = sign_on_interval(pointwise, 0, h.eps, include_hi=True)
    if s.verdict not in (Sign.STRICTLY_NEGATIVE, Sign.NONPOSITIVE_WITH_ZERO, Sign.IDENTICALLY_ZERO):
        return False
    m = sign_on_interval(margin_poly(h), 0, h.eps, include_hi=True)
    return m.verdict is Sign.STRICTLY_POSITIVE


__all__ = [
    "Status",
    "StabilityVerdict",
    "mu_X",
    "mu_c_ideal",
    "mu_c_quotient",
    "futaki",
    "margin_poly",
    "decide",
    "slope_comparisons",
    "cy_canonical_check",
]

"""Hilbert-Samuel coefficient models a_i(x) for a subscheme Z of (X, L).

An :class:`HSModel` stores the polynomials a_0(x), a_1(x) (and optionally
a_2..a_n) defined by chi(L^k (x) I_Z^{xk}) = a_0(x) k^n + a_1(x) k^{n-1} + ...,
together with the ambient constants a_0, a_1 and the Seshadri constant of Z.
Seshadri constants are always supplied by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .exactalg import Poly, RatLike, Sign, as_rat, sign_on_interval


class ModelError(ValueError):
    """Inconsistent or out-of-range Hilbert-Samuel data."""


@dataclass(frozen=True)
class HSModel:
    n: int
    a0: Poly
    a1: Poly
    a0_const: Fraction
    a1_const: Fraction
    eps: Fraction
    saturates_at_eps: bool = False
    higher: Optional[tuple[Poly, ...]] = None
    normal: bool = True
    label: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ModelError("dimension must be positive")
        if self.eps <= 0:
            raise ModelError("Seshadri constant must be positive")
        if self.a0.degree > self.n:
            raise ModelError("a0(x) has degree above n")
        if self.a1.degree > self.n - 1 and not self.a1.is_zero():
            raise ModelError("a1(x) has degree above n-1")
        if self.higher is None and self.n == 1:
            object.__setattr__(self, "higher", ())
        if self.higher is not None and len(self.higher) != self.n - 1:
            raise ModelError(f"expected {self.n - 1} higher coefficients a_2..a_n")

    @property
    def has_full_coefficients(self) -> bool:
        return self.higher is not None

    def coefficient(self, i: int) -> Poly:
        """a_i(x), for 0 <= i <= n (higher ones only when present)."""
        if i == 0:
            return self.a0
        if i == 1:
            return self.a1
        if not 2 <= i <= self.n:
            return Poly()
        if self.higher is None:
            raise ModelError(f"model {self.label!r} carries no a_{i}(x)")
        return self.higher[i - 2]

    def ambient_constant(self, i: int) -> Fraction:
        if i == 0:
            return self.a0_const
        if i == 1:
            return self.a1_const
        return self.coefficient(i)(0)

    def chi(self, k: int) -> Fraction:
        """chi(L^k) from the ambient constants (needs the full coefficient list)."""
        return sum(
            (self.ambient_constant(i) * Fraction(k) ** (self.n - i) for i in range(self.n + 1)),
            Fraction(0),
        )

    def chi_twisted(self, k: int, j: int) -> Fraction:
        """chi(L^k (x) I_Z^j) evaluated through the a_i(j/k)."""
        x = Fraction(j, k)
        return sum(
            (self.coefficient(i)(x) * Fraction(k) ** (self.n - i) for i in range(self.n + 1)),
            Fraction(0),
        )

    def check(self) -> None:
        """Verify the geometric invariants on (0, eps); raise ModelError otherwise."""
        if self.a0(0) != self.a0_const:
            raise ModelError(f"a0(0) = {self.a0(0)} differs from a0 = {self.a0_const}")
        if self.normal and self.a1(0) != self.a1_const:
            raise ModelError("normal model must have a1(0) = a1")
        slope = sign_on_interval(-self.a0.derivative(), 0, self.eps, include_hi=True)
        if slope.verdict not in (Sign.STRICTLY_POSITIVE, Sign.NONNEGATIVE_WITH_ZERO, Sign.IDENTICALLY_ZERO):
            raise ModelError("a0(x) must be non-increasing on [0, eps]")
        pos = sign_on_interval(self.a0, 0, self.eps)
        if pos.verdict is not Sign.STRICTLY_POSITIVE:
            raise ModelError("a0(x) must be positive on (0, eps)")


@dataclass(frozen=True)
class QuotientHS:
    """Coefficients of chi(L^k (x) O_{xkZ}): t_i(x) = a_i - a_i(x)."""

    t0: Poly
    t1: Poly


def _positive(name: str, value: RatLike) -> Fraction:
    v = as_rat(value)
    if v <= 0:
        raise ModelError(f"{name} must be positive, got {v}")
    return v


def hs_point_on_smooth(
    n: int,
    Ln: RatLike,
    KLn1: RatLike,
    eps: RatLike,
    saturates: bool = False,
    label: str = "",
) -> HSModel:
    """A reduced point on a smooth n-fold with L^n and K.L^{n-1} given."""
    Ln = _positive("L^n", Ln)
    KLn1 = as_rat(KLn1)
    eps = _positive("eps", eps)
    a0c = Ln / math.factorial(n)
    a1c = -KLn1 / (2 * math.factorial(n - 1))
    a0 = Poly.const(a0c) - Poly.monomial(Fraction(1, math.factorial(n)), n)
    a1 = Poly.const(a1c) - Poly.monomial(Fraction(n - 1, 2 * math.factorial(n - 1)), n - 1)
    h = HSModel(n, a0, a1, a0c, a1c, eps, saturates, label=label or f"point on smooth {n}-fold")
    h.check()
    return h


def hs_projective_point(n: int, d: int = 1, label: str = "") -> HSModel:
    """A reduced point on (P^n, O(d)) with all coefficients a_0..a_n.

    chi(O(dk) (x) I_p^{xk}) = C(dk+n, n) - C(xk+n-1, n) exactly, so the
    coefficient of k^{n-i} is (d^{n-i} e_i(1..n) - x^{n-i} e_i(0..n-1)) / n!,
    with e_i the elementary symmetric functions.
    """
    if n < 1 or d < 1:
        raise ModelError("need n >= 1 and d >= 1")

    def elem(vals: list[int]) -> list[int]:
        e = [1]
        for v in vals:
            e = [a + v * b for a, b in zip(e + [0], [0] + e)]
        return e

    e_amb = elem(list(range(1, n + 1)))
    e_pt = elem(list(range(0, n)))
    nf = math.factorial(n)
    coeffs = []
    for i in range(n + 1):
        amb = Fraction(d ** (n - i) * e_amb[i], nf)
        pt = Poly.monomial(Fraction(e_pt[i], nf), n - i)
        coeffs.append(Poly.const(amb) - pt)
    h = HSModel(
        n,
        coeffs[0],
        coeffs[1],
        coeffs[0](0),
        coeffs[1](0),
        Fraction(d),
        True,
        higher=tuple(coeffs[2:]),
        label=label or f"point on (P^{n}, O({d}))",
    )
    h.check()
    return h


def hs_divisor_on_curve(g: int, d: RatLike, degZ: int, saturates: bool = True, label: str = "") -> HSModel:
    """Effective divisor of degree ``degZ`` on a smooth genus-g curve, deg L = d."""
    if degZ <= 0:
        raise ModelError("degZ must be positive")
    d = _positive("deg L", d)
    if g < 0:
        raise ModelError("genus must be nonnegative")
    a0 = Poly([d, -degZ])
    a1 = Poly.const(1 - g)
    h = HSModel(
        1, a0, a1, d, Fraction(1 - g), d / degZ, saturates,
        higher=(), label=label or f"degree-{degZ} divisor, g={g}, d={d}",
    )
    h.check()
    return h


def hs_curve_subscheme(
    g: int,
    d: RatLike,
    e: RatLike,
    rho: RatLike,
    eps: RatLike,
    saturates: bool = False,
    label: str = "",
) -> HSModel:
    """Subscheme of an irreducible curve with h^0(L^k / L^k I^{xk}) = e x k - rho."""
    e = as_rat(e)
    if e <= 0:
        raise ModelError("multiplicity e must be positive")
    d = _positive("deg L", d)
    rho = as_rat(rho)
    eps = _positive("eps", eps)
    a0 = Poly([d, -e])
    a1 = Poly.const(1 - g + rho)
    h = HSModel(
        1, a0, a1, d, Fraction(1 - g), eps, saturates,
        higher=(), normal=(rho == 0), label=label or f"curve subscheme e={e}, rho={rho}",
    )
    h.check()
    return h


def quotient_of(h: HSModel) -> QuotientHS:
    return QuotientHS(Poly.const(h.a0_const) - h.a0, Poly.const(h.a1_const) - h.a1)


def _same_ambient(h1: HSModel, h2: HSModel) -> None:
    if (h1.n, h1.a0_const, h1.a1_const) != (h2.n, h2.a0_const, h2.a1_const):
        raise ModelError("models live on different ambient (X, L)")


def combine_disjoint(h1: HSModel, h2: HSModel, saturates: bool = False) -> HSModel:
    """Model for Z1 u Z2 with Z1, Z2 disjoint.

    Quotient coefficients add.  The stored eps is min(eps1, eps2), which is
    only known to be an upper bound for the union; pass a smaller value via
    :func:`dataclasses.replace` when a better bound is known.  ``saturates``
    may be set only if both inputs saturate.
    """
    _same_ambient(h1, h2)
    if saturates and not (h1.saturates_at_eps and h2.saturates_at_eps):
        raise ModelError("union can only saturate if both components do")
    q1, q2 = quotient_of(h1), quotient_of(h2)
    a0 = Poly.const(h1.a0_const) - (q1.t0 + q2.t0)
    a1 = Poly.const(h1.a1_const) - (q1.t1 + q2.t1)
    higher = None
    if h1.higher is not None and h2.higher is not None:
        higher = tuple(
            Poly.const(p(0)) - ((Poly.const(p(0)) - p) + (Poly.const(q(0)) - q))
            for p, q in zip(h1.higher, h2.higher)
        )
    return HSModel(
        h1.n, a0, a1, h1.a0_const, h1.a1_const, min(h1.eps, h2.eps), saturates,
        higher=higher, normal=h1.normal and h2.normal,
        label=f"({h1.label}) + ({h2.label})",
    )


def empty_subscheme(h: HSModel) -> HSModel:
    """Z = empty on the ambient of ``h``: a_i(x) constant."""
    higher = None if h.higher is None else tuple(Poly.const(p(0)) for p in h.higher)
    return replace(
        h, a0=Poly.const(h.a0_const), a1=Poly.const(h.a1_const), higher=higher, label="empty"
    )


def thicken(h: HSModel, m: int) -> HSModel:
    """Model of mZ: a_i(x) -> a_i(m x), eps -> eps / m."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ModelError("thickening order must be a positive integer")
    higher = None if h.higher is None else tuple(p.compose_scale(m) for p in h.higher)
    return replace(
        h,
        a0=h.a0.compose_scale(m),
        a1=h.a1.compose_scale(m),
        higher=higher,
        eps=h.eps / m,
        label=f"{m}*({h.label})" if m != 1 else h.label,
    )


def scale_polarisation(h: HSModel, r: int) -> HSModel:
    """Replace L by L^r: a_i(x) -> r^{n-i} a_i(x/r), constants likewise, eps -> r eps."""
    if r < 1:
        raise ModelError("power must be positive")
    r = Fraction(r)

    def tr(p: Poly, i: int) -> Poly:
        return p.compose_scale(1 / r).scale(r ** (h.n - i))

    higher = None if h.higher is None else tuple(tr(p, i + 2) for i, p in enumerate(h.higher))
    return replace(
        h,
        a0=tr(h.a0, 0),
        a1=tr(h.a1, 1),
        a0_const=h.a0_const * r**h.n,
        a1_const=h.a1_const * r ** (h.n - 1),
        eps=h.eps * r,
        higher=higher,
        label=f"({h.label}) with L^{r}",
    )


__all__ = [
    "HSModel",
    "QuotientHS",
    "ModelError",
    "hs_point_on_smooth",
    "hs_projective_point",
    "hs_divisor_on_curve",
    "hs_curve_subscheme",
    "quotient_of",
    "combine_disjoint",
    "empty_subscheme",
    "thicken",
    "scale_polarisation",
]

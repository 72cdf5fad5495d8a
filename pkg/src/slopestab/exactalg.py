"""Exact rational scalars and dense univariate polynomials.

Rationals are plain :class:`fractions.Fraction` values (aliased as ``Rat``).
:class:`Poly` is an immutable dense polynomial over the rationals with the
calculus needed by the slope computations, plus Sturm-sequence sign analysis
on intervals.  Nothing here touches floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction, str]


def as_rat(value: RatLike) -> Fraction:
    """Coerce ``value`` to a Fraction; floats and bools are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"expected int, Fraction or 'p/q' string, got {type(value).__name__}")


def rat_str(value: Fraction) -> str:
    return str(Fraction(value))


def _trim(coeffs: Iterable[RatLike]) -> tuple[Fraction, ...]:
    out = [as_rat(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # construction helpers
    @classmethod
    def const(cls, c: RatLike) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, c: RatLike, k: int) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    # arithmetic
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: RatLike) -> Poly:
        c = as_rat(c)
        return Poly(c * a for a in self.coeffs)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead()
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            q = rem[i] / lc
            quot[i - dq] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= q * b
        return Poly(quot), Poly(rem[:dq])

    def __call__(self, x: RatLike) -> Fraction:
        return poly_eval(self, as_rat(x))

    # calculus
    def derivative(self) -> Poly:
        return poly_derivative(self)

    def antiderivative(self) -> Poly:
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integrate(self, a: RatLike, b: RatLike) -> Fraction:
        return poly_integrate(self, as_rat(a), as_rat(b))

    def compose_scale(self, m: RatLike) -> Poly:
        """Return x -> p(m*x)."""
        m = as_rat(m)
        return Poly(c * m**i for i, c in enumerate(self.coeffs))

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_integrate(p: Poly, a: Fraction, b: Fraction) -> Fraction:
    if a == b:
        return Fraction(0)
    anti = p.antiderivative()
    return poly_eval(anti, b) - poly_eval(anti, a)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


def squarefree_part(p: Poly) -> Poly:
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].monic()


def interpolate(points: Sequence[tuple[RatLike, RatLike]]) -> Poly:
    """Exact Lagrange interpolation through distinct abscissae."""
    pts = [(as_rat(x), as_rat(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    out = Poly()
    for i, (xi, yi) in enumerate(pts):
        basis = Poly.const(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        out = out + basis.scale(yi / denom)
    return out


# ---------------------------------------------------------------------------
# Sign analysis


class Sign(str, enum.Enum):
    STRICTLY_POSITIVE = "strictly-positive"
    NONNEGATIVE_WITH_ZERO = "nonnegative-with-zero"
    CHANGES_SIGN = "changes-sign"
    STRICTLY_NEGATIVE = "strictly-negative"
    NONPOSITIVE_WITH_ZERO = "nonpositive-with-zero"
    IDENTICALLY_ZERO = "identically-zero"


Witness = Union[Fraction, "tuple[Fraction, Fraction]"]


@dataclass(frozen=True)
class IntervalSign:
    """Sign classification of a polynomial on (lo, hi) or (lo, hi].

    ``witnesses`` holds the zeros in the range, each either an exact
    Fraction or an isolating open interval ``(a, b)`` with rational ends.
    ``negative_at``/``positive_at`` are rational sample points where the
    polynomial is strictly negative/positive, when such points exist.
    """

    verdict: Sign
    witnesses: tuple = ()
    negative_at: Fraction | None = None
    positive_at: Fraction | None = None

    @property
    def has_zero(self) -> bool:
        return bool(self.witnesses) or self.verdict is Sign.IDENTICALLY_ZERO

    def exact_roots(self) -> list[Fraction]:
        return [w for w in self.witnesses if isinstance(w, Fraction)]


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        rem = seq[-2].divmod(seq[-1])[1]
        if rem.is_zero():
            break
        seq.append(-rem)
    return seq


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    vals = [s for s in (poly_eval(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(vals, vals[1:]) if (a > 0) != (b > 0))


def count_roots(seq: list[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct roots of seq[0] in (a, b]."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _integer_coeffs(p: Poly) -> list[int]:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g else ints


def _rational_root_in(p: Poly, a: Fraction, b: Fraction) -> Fraction | None:
    """The rational root of squarefree ``p`` in (a, b), if the unique root there is rational."""
    lc = _integer_coeffs(p)[-1]
    for q in _divisors(lc):
        lo = math.floor(a * q) + 1
        hi = math.ceil(b * q) - 1
        for num in range(lo, hi + 1):
            cand = Fraction(num, q)
            if a < cand < b and poly_eval(p, cand) == 0:
                return cand
    return None


def isolate_roots(p: Poly, lo: Fraction, hi: Fraction) -> list[Witness]:
    """Isolate the distinct real roots of ``p`` in the open interval (lo, hi).

    Irrational roots come back as isolating intervals (a, b) with
    b - a small enough that the rational-root check is conclusive.
    """
    if p.degree < 1:
        return []
    sqf = squarefree_part(p)
    seq = sturm_sequence(sqf)
    # (lo, hi) open: count on (lo, hi] then drop hi if it is a root
    stack = [(lo, hi)]
    found: list[Witness] = []
    lc = abs(_integer_coeffs(sqf)[-1])
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if poly_eval(sqf, b) == 0:
            if b != hi:
                found.append(b)
            n -= 1
        if n <= 0:
            continue
        if n == 1 and (b - a) * lc < 1 and a != lo:
            r = _rational_root_in(sqf, a, b)
            if r is None:
                # keep the ends off neighbouring roots so they carry p's sign
                while poly_eval(sqf, a) == 0:
                    mid = (a + b) / 2
                    if count_roots(seq, a, mid) == 1:
                        b = mid
                    else:
                        a = mid
                found.append((a, b))
            else:
                found.append(r)
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    return sorted(found, key=lambda w: w if isinstance(w, Fraction) else w[0])


def _sample_points(lo: Fraction, hi: Fraction, roots: list[Witness]) -> list[Fraction]:
    """Rational points strictly inside each gap between consecutive roots."""
    edges = [lo]
    for w in roots:
        if isinstance(w, Fraction):
            edges.extend([w, w])
        else:
            edges.extend([w[0], w[1]])
    edges.append(hi)
    pts = []
    for i in range(0, len(edges), 2):
        a, b = edges[i], edges[i + 1]
        pts.append((a + b) / 2)
    return pts


def sign_on_interval(p: Poly, lo: RatLike, hi: RatLike, include_hi: bool = False) -> IntervalSign:
    """Classify the sign of ``p`` on (lo, hi), or (lo, hi] when ``include_hi``."""
    lo, hi = as_rat(lo), as_rat(hi)
    if not lo < hi:
        raise ValueError("sign_on_interval needs lo < hi")
    if p.is_zero():
        return IntervalSign(Sign.IDENTICALLY_ZERO)
    roots = isolate_roots(p, lo, hi)
    witnesses = list(roots)
    if include_hi and poly_eval(p, hi) == 0:
        witnesses.append(hi)
    # irrational roots sit strictly inside their isolating intervals, so the
    # gap samples below never land on a root of p
    pos = neg = None
    for x in _sample_points(lo, hi, roots):
        v = poly_eval(p, x)
        if v > 0 and pos is None:
            pos = x
        elif v < 0 and neg is None:
            neg = x
    for w in roots:
        if not isinstance(w, Fraction):
            # the isolating interval ends carry p's sign on either side
            for x in w:
                v = poly_eval(p, x)
                if v > 0 and pos is None:
                    pos = x
                elif v < 0 and neg is None:
                    neg = x
    if pos is not None and neg is not None:
        verdict = Sign.CHANGES_SIGN
    elif pos is not None:
        verdict = Sign.NONNEGATIVE_WITH_ZERO if witnesses else Sign.STRICTLY_POSITIVE
    else:
        verdict = Sign.NONPOSITIVE_WITH_ZERO if witnesses else Sign.STRICTLY_NEGATIVE
    return IntervalSign(verdict, tuple(witnesses), neg, pos)


# ---------------------------------------------------------------------------
# Bernoulli numbers and Euler-Maclaurin summation


@lru_cache(maxsize=None)
def _bernoulli_plus(n: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; yields the B1 = +1/2 convention directly
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli_beta(i: int) -> Fraction:
    """Return B_i / i! with the B_1 = +1/2 convention (so beta_1 = 1/2)."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return _bernoulli_plus(i)[i] / math.factorial(i)


def euler_maclaurin_sum(f: Poly, c: RatLike, r: int) -> Fraction:
    """Sum of f(j/r) for j = 1..c*r, computed through Bernoulli-weighted integrals."""
    c = as_rat(c)
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ValueError("r must be a positive integer")
    top = c * r
    if top.denominator != 1 or top < 0:
        raise ValueError(f"c*r must be a nonnegative integer, got {top}")
    total = Fraction(0)
    deriv = f
    rpow = Fraction(r)  # r**(1 - i) starting at i = 0
    for i in range(f.degree + 1):
        total += bernoulli_beta(i) * rpow * deriv.integrate(0, c)
        deriv = deriv.derivative()
        rpow /= r
    return total


def literal_sum(f: Poly, c: RatLike, r: int) -> Fraction:
    c = as_rat(c)
    top = c * r
    if top.denominator != 1:
        raise ValueError("c*r must be an integer")
    return sum((poly_eval(f, Fraction(j, r)) for j in range(1, int(top) + 1)), Fraction(0))


__all__ = [
    "Rat",
    "as_rat",
    "rat_str",
    "Poly",
    "poly_eval",
    "poly_derivative",
    "poly_integrate",
    "poly_gcd",
    "squarefree_part",
    "interpolate",
    "Sign",
    "IntervalSign",
    "sign_on_interval",
    "isolate_roots",
    "sturm_sequence",
    "bernoulli_beta",
    "euler_maclaurin_sum",
    "literal_sum",
]

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _strategies import polys, rationals
from slopestab.exactalg import (
    Poly,
    Sign,
    as_rat,
    bernoulli_beta,
    euler_maclaurin_sum,
    interpolate,
    isolate_roots,
    literal_sum,
    poly_gcd,
    rat_str,
    sign_on_interval,
    squarefree_part,
)

F = Fraction
x = Poly.x()


def test_as_rat_accepts_exact_inputs():
    assert as_rat("3/6") == F(1, 2)
    assert as_rat(4) == 4
    assert as_rat(F(2, 3)) == F(2, 3)


@pytest.mark.parametrize("bad", [0.5, True, None, "1/0", "abc"])
def test_as_rat_rejects(bad):
    with pytest.raises((TypeError, ValueError, ZeroDivisionError)):
        as_rat(bad)


def test_rat_str_integers_have_no_denominator():
    assert rat_str(F(3)) == "3"
    assert rat_str(F(-1, 2)) == "-1/2"


def test_poly_arithmetic():
    p = Poly([1, 2, 3])
    assert (p * p)(2) == p(2) ** 2
    assert (p - p).is_zero()
    assert p.derivative() == Poly([2, 6])
    assert p.antiderivative().derivative() == p
    assert p.integrate(0, 1) == 1 + 1 + 1
    assert p.compose_scale(2) == Poly([1, 4, 12])
    assert (x**3).degree == 3
    q, r = (x**3 - 1).divmod(x - 1)
    assert r.is_zero() and q == Poly([1, 1, 1])


def test_gcd_and_squarefree():
    p = (x - 1) ** 2 * (x + 2)
    assert poly_gcd(p, p.derivative()).monic() == (x - 1).monic()
    assert squarefree_part(p).monic() == ((x - 1) * (x + 2)).monic()


def test_interpolate_recovers_polynomial():
    p = Poly([0, F(-1, 2), F(-1, 2)])
    assert interpolate([(k, p(k)) for k in range(1, 4)]) == p


@pytest.mark.parametrize(
    "p, lo, hi, verdict",
    [
        (Poly([1, 0, 1]), 0, 1, Sign.STRICTLY_POSITIVE),
        (x - F(1, 2), 0, 1, Sign.CHANGES_SIGN),
        ((x - 1) ** 2, 0, 2, Sign.NONNEGATIVE_WITH_ZERO),
        (-((x - 1) ** 2), 0, 2, Sign.NONPOSITIVE_WITH_ZERO),
        (Poly([-1]), 0, 2, Sign.STRICTLY_NEGATIVE),
        (Poly(), 0, 2, Sign.IDENTICALLY_ZERO),
    ],
)
def test_sign_verdicts(p, lo, hi, verdict):
    assert sign_on_interval(p, lo, hi).verdict is verdict


def test_sign_witnesses_are_exact_when_rational():
    s = sign_on_interval(x - F(1, 2), 0, 1)
    assert s.exact_roots() == [F(1, 2)]
    s = sign_on_interval((x - 1) ** 2, 0, 2)
    assert s.exact_roots() == [F(1)]


def test_endpoint_only_counts_when_included():
    p = x * (1 - x)
    assert sign_on_interval(p, 0, 1).verdict is Sign.STRICTLY_POSITIVE
    closed = sign_on_interval(p, 0, 1, include_hi=True)
    assert closed.verdict is Sign.NONNEGATIVE_WITH_ZERO
    assert closed.exact_roots() == [F(1)]


def test_irrational_root_isolated():
    roots = isolate_roots(x**2 - 2, F(0), F(2))
    assert len(roots) == 1
    a, b = roots[0]
    assert a * a < 2 < b * b


@settings(max_examples=300, deadline=None)
@given(polys(6), rationals(-3, 0), rationals(1, 4))
def test_sign_verdict_consistent_with_samples(p, lo, hi):
    s = sign_on_interval(p, lo, hi)
    grid = [lo + (hi - lo) * F(i, 37) for i in range(1, 37)]
    vals = [p(t) for t in grid]
    if s.verdict is Sign.STRICTLY_POSITIVE:
        assert all(v > 0 for v in vals)
    elif s.verdict is Sign.STRICTLY_NEGATIVE:
        assert all(v < 0 for v in vals)
    elif s.verdict is Sign.NONNEGATIVE_WITH_ZERO:
        assert all(v >= 0 for v in vals)
    elif s.verdict is Sign.NONPOSITIVE_WITH_ZERO:
        assert all(v <= 0 for v in vals)
    elif s.verdict is Sign.IDENTICALLY_ZERO:
        assert p.is_zero()
    if s.negative_at is not None:
        assert lo < s.negative_at < hi and p(s.negative_at) < 0
    if s.positive_at is not None:
        assert lo < s.positive_at < hi and p(s.positive_at) > 0


def test_bernoulli_beta_values():
    assert [bernoulli_beta(i) for i in range(5)] == [1, F(1, 2), F(1, 12), 0, F(-1, 720)]


@pytest.mark.parametrize(
    "f, c, r, expected",
    [(x, 1, 2, F(3, 2)), (x**2, 1, 3, F(14, 9)), (Poly([1]), 2, 5, 10)],
)
def test_euler_maclaurin_examples(f, c, r, expected):
    assert euler_maclaurin_sum(f, c, r) == expected


def test_euler_maclaurin_needs_integral_cr():
    with pytest.raises(ValueError):
        euler_maclaurin_sum(x, F(1, 2), 3)


@settings(max_examples=200, deadline=None)
@given(polys(8), st.integers(1, 12), st.integers(0, 30))
def test_euler_maclaurin_matches_literal(f, r, m):
    c = F(m, r)
    assert euler_maclaurin_sum(f, c, r) == literal_sum(f, c, r)

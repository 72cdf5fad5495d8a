from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _strategies import graded_cases
from slopestab.exactalg import Poly
from slopestab.hilbert import hs_projective_point
from slopestab.oracle import (
    Ambient,
    FitError,
    GradedTC,
    ToricCase,
    brute_graded_weight,
    brute_normal_cone_weight,
    curve_local_rho,
    fit_weight_poly,
    graded_decomposition,
    h0_count,
    kmax_cap,
    node_colength,
    normal_cone_samples,
    weight_decomposition,
)
from slopestab.testconfig import normal_cone_weight

F = Fraction
P1, P2 = Ambient.P1, Ambient.P2


def test_h0_counts():
    assert h0_count(ToricCase(P1, 3), 4, 2) == 11
    assert h0_count(ToricCase(P1, 3), 4, 0) == 13
    assert h0_count(ToricCase(P2, 1), 2, 1) == 5
    assert h0_count(ToricCase(P1, 2), 1, 9) == 0
    assert h0_count(ToricCase(P1, 2, m=2), 3, 2) == 7 - 4


def test_brute_normal_cone_weight_examples():
    case = ToricCase(P1, 3)
    assert brute_normal_cone_weight(case, 1, 4) == -10
    assert brute_normal_cone_weight(case, 1, 1) == -1
    assert brute_normal_cone_weight(case, 0, 3) == 0
    with pytest.raises(ValueError):
        brute_normal_cone_weight(case, F(1, 2), 3)


def test_fit_examples():
    case = ToricCase(P1, 3)
    p = fit_weight_poly(normal_cone_samples(case, 1, range(1, 5)), 2)
    assert p == Poly([0, F(-1, 2), F(-1, 2)])
    assert fit_weight_poly([(1, 7), (2, 7), (3, 7)], 0) == Poly([7])
    p2 = fit_weight_poly(normal_cone_samples(ToricCase(P2, 1), 1, range(2, 7)), 3)
    assert (p2[3], p2[2]) == (F(-1, 6), F(-1, 2))


def test_fit_detects_inconsistent_samples():
    with pytest.raises(FitError):
        fit_weight_poly([(1, 0), (2, 1), (3, 4), (4, 10)], 2)
    with pytest.raises(FitError):
        fit_weight_poly([(1, 0), (2, 1)], 2)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([P1, P2]), st.integers(1, 3), st.integers(1, 2), st.integers(1, 8))
def test_flatness(ambient, d, c, k):
    case = ToricCase(ambient, d)
    assert sum(weight_decomposition(case, c, k)) == h0_count(case, k, 0)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("c", [1, 2])
def test_p1_fit_matches_formula(d, c):
    h = hs_projective_point(1, d)
    if c > h.eps:
        pytest.skip("c beyond eps")
    p = fit_weight_poly(normal_cone_samples(ToricCase(P1, d), c, range(1, 13)), 2)
    w = normal_cone_weight(h, c)
    assert (p[2], p[1]) == (w.b0, w.b1)


@settings(max_examples=100, deadline=None)
@given(graded_cases(), st.integers(1, 8))
def test_graded_flatness(tc, k):
    assert sum(graded_decomposition(tc, k)) == h0_count(tc.case, k, 0)


@pytest.mark.parametrize("d", [1, 3, 5])
def test_single_layer_matches_normal_cone(d):
    case = ToricCase(P1, d)
    tc = GradedTC(case, (1,))
    for k in range(1, 15):
        assert brute_graded_weight(tc, k) == brute_normal_cone_weight(case, 1, k)


def test_trivial_configuration_has_zero_weight():
    tc = GradedTC(ToricCase(P1, 4), (0, 0))
    assert all(brute_graded_weight(tc, k) == 0 for k in range(1, 6))


def test_graded_layers_validated():
    with pytest.raises(ValueError):
        GradedTC(ToricCase(P1, 4), (1, 2))
    with pytest.raises(ValueError):
        ToricCase(P1, 0)


def test_node_model():
    assert curve_local_rho([(1, 1, 0, 1), (0, 1, 1, 1)]) == (2, 1)
    assert curve_local_rho([(1, 1, 1, 1)]) == (2, 0)
    assert curve_local_rho([(1, 2, 1, 1)]) == (3, 0)
    assert node_colength([(1, 1, 0, 1), (0, 1, 1, 1)], 5) == 9


@pytest.mark.parametrize("gens", [[(1, 0, 1, 1)], [(1, 1, 0, 1)], [(0, 1, 0, 1)]])
def test_node_model_rejects_unsupported(gens):
    with pytest.raises(ValueError):
        node_colength(gens, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(1, 3), st.integers(-2, 2), st.integers(1, 3)), min_size=1, max_size=2))
def test_node_model_rho_bounds(gens):
    if not any(a for a, _, _, _ in gens) or not any(b for _, _, b, _ in gens):
        return
    if any(a == 0 and b == 0 for a, _, b, _ in gens):
        return
    e, rho = curve_local_rho(gens, 10)
    assert -1 <= rho <= 1
    assert 2 * rho <= e


def test_kmax_env(monkeypatch):
    monkeypatch.setenv("SLOPESTAB_KMAX", "7")
    assert kmax_cap(50) == 7
    assert ToricCase(P1, 1).kmax == 7
    monkeypatch.delenv("SLOPESTAB_KMAX")
    assert ToricCase(P2, 1).kmax == 20

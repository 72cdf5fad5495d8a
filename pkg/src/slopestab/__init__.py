"""Exact slope-stability invariants of polarised varieties."""

from .exactalg import Poly, Sign, as_rat, sign_on_interval
from .hilbert import HSModel, ModelError, hs_curve_subscheme, hs_divisor_on_curve, hs_point_on_smooth, hs_projective_point
from .slope import Status, decide, futaki, margin_poly, mu_c_ideal, mu_X
from .testconfig import WeightExpansion, concave_hull, divisor_tc_weight, normal_cone_weight

__all__ = [
    "Poly",
    "Sign",
    "as_rat",
    "sign_on_interval",
    "HSModel",
    "ModelError",
    "hs_curve_subscheme",
    "hs_divisor_on_curve",
    "hs_point_on_smooth",
    "hs_projective_point",
    "Status",
    "decide",
    "futaki",
    "margin_poly",
    "mu_c_ideal",
    "mu_X",
    "WeightExpansion",
    "concave_hull",
    "divisor_tc_weight",
    "normal_cone_weight",
]

"""JSON variety specifications and exact-rational JSON output."""

from __future__ import annotations

import dataclasses
import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactalg import Poly, as_rat, rat_str
from .hilbert import (
    HSModel,
    ModelError,
    hs_curve_subscheme,
    hs_divisor_on_curve,
    hs_point_on_smooth,
)

SCHEMA_VERSION = 1


class SpecError(ValueError):
    """Schema violation; the message names the offending field."""


# kind -> (required parameters, optional parameters with defaults)
_PARAMS: dict[str, tuple[dict[str, str], dict[str, Any]]] = {
    "point-on-smooth": ({"n": "int", "Ln": "rat", "KLn1": "rat", "eps": "rat"}, {}),
    "curve-divisor": ({"g": "int", "d": "rat", "degZ": "int"}, {}),
    "curve-subscheme": ({"g": "int", "d": "rat", "e": "rat", "rho": "rat", "eps": "rat"}, {}),
    "custom-hs": (
        {"n": "int", "a0": "poly", "a1": "poly", "a0_const": "rat", "a1_const": "rat", "eps": "rat"},
        {"higher": None},
    ),
    "toric-oracle-case": ({"ambient": "str", "d": "int"}, {"m": 1}),
    "newton-diagram": ({"points": "points", "divisor": "spec"}, {}),
}

_FLAGS: dict[str, dict[str, bool]] = {
    "point-on-smooth": {"saturates_at_eps": False},
    "curve-divisor": {"saturates_at_eps": True},
    "curve-subscheme": {"saturates_at_eps": False},
    "custom-hs": {"saturates_at_eps": False, "normal": True},
    "toric-oracle-case": {},
    "newton-diagram": {"ample": False},
}

_TOP = {"schema_version", "kind", "label", "parameters", "flags"}


@dataclass(frozen=True)
class VarietySpecDoc:
    kind: str
    parameters: dict
    flags: dict = field(default_factory=dict)
    label: str = ""

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "parameters": {k: _dump_value(v) for k, v in self.parameters.items()},
            "flags": dict(self.flags),
        }
        if self.label:
            out["label"] = self.label
        return out


def _dump_value(v: Any) -> Any:
    if isinstance(v, VarietySpecDoc):
        return v.to_dict()
    if isinstance(v, Fraction):
        return rat_str(v)
    if isinstance(v, Poly):
        return [rat_str(c) for c in v.coeffs]
    if isinstance(v, (list, tuple)):
        return [_dump_value(x) for x in v]
    return v


def _rat(path: str, v: Any) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise SpecError(f"{path}: expected an exact rational string like \"3/2\", got {v!r}")
    try:
        return as_rat(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"{path}: {exc}") from None


def _int(path: str, v: Any) -> int:
    r = _rat(path, v)
    if r.denominator != 1:
        raise SpecError(f"{path}: expected an integer, got {r}")
    return int(r)


def _poly(path: str, v: Any) -> Poly:
    if not isinstance(v, list):
        raise SpecError(f"{path}: expected a list of coefficients (constant term first)")
    return Poly([_rat(f"{path}[{i}]", c) for i, c in enumerate(v)])


def _convert(path: str, kind: str, v: Any) -> Any:
    if kind == "int":
        return _int(path, v)
    if kind == "rat":
        return _rat(path, v)
    if kind == "poly":
        return _poly(path, v)
    if kind == "str":
        if not isinstance(v, str):
            raise SpecError(f"{path}: expected a string")
        return v
    if kind == "points":
        if not isinstance(v, list) or not v:
            raise SpecError(f"{path}: expected a nonempty list of [p, i] pairs")
        pts = []
        for idx, pt in enumerate(v):
            if not isinstance(pt, list) or len(pt) != 2:
                raise SpecError(f"{path}[{idx}]: expected a pair [p, i]")
            pts.append((_int(f"{path}[{idx}][0]", pt[0]), _rat(f"{path}[{idx}][1]", pt[1])))
        return tuple(pts)
    if kind == "spec":
        return parse_spec(v, path)
    raise AssertionError(kind)


def parse_spec(doc: Any, path: str = "$") -> VarietySpecDoc:
    if not isinstance(doc, dict):
        raise SpecError(f"{path}: expected an object")
    extra = set(doc) - _TOP
    if extra:
        raise SpecError(f"{path}: unknown field(s) {sorted(extra)}")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise SpecError(f"{path}.schema_version: expected {SCHEMA_VERSION}")
    kind = doc.get("kind")
    if kind not in _PARAMS:
        raise SpecError(f"{path}.kind: expected one of {sorted(_PARAMS)}, got {kind!r}")
    required, optional = _PARAMS[kind]
    params_in = doc.get("parameters", {})
    if not isinstance(params_in, dict):
        raise SpecError(f"{path}.parameters: expected an object")
    extra = set(params_in) - set(required) - set(optional)
    if extra:
        raise SpecError(f"{path}.parameters: unknown field(s) {sorted(extra)}")
    params: dict[str, Any] = {}
    for name, typ in required.items():
        if name not in params_in:
            raise SpecError(f"{path}.parameters.{name}: missing")
        params[name] = _convert(f"{path}.parameters.{name}", typ, params_in[name])
    for name, default in optional.items():
        if name in params_in:
            raw = params_in[name]
            if name == "higher":
                if not isinstance(raw, list):
                    raise SpecError(f"{path}.parameters.higher: expected a list of coefficient lists")
                params[name] = tuple(_poly(f"{path}.parameters.higher[{i}]", p) for i, p in enumerate(raw))
            else:
                params[name] = _int(f"{path}.parameters.{name}", raw)
        elif default is not None:
            params[name] = default
    flags_in = doc.get("flags", {})
    if not isinstance(flags_in, dict):
        raise SpecError(f"{path}.flags: expected an object")
    allowed = _FLAGS[kind]
    extra = set(flags_in) - set(allowed)
    if extra:
        raise SpecError(f"{path}.flags: unknown flag(s) {sorted(extra)}")
    flags = dict(allowed)
    for name, value in flags_in.items():
        if not isinstance(value, bool):
            raise SpecError(f"{path}.flags.{name}: expected true or false")
        flags[name] = value
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise SpecError(f"{path}.label: expected a string")
    return VarietySpecDoc(kind, params, flags, label)


def load_spec_file(path: str) -> VarietySpecDoc:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc})") from None
    return parse_spec(doc)


def build_model(spec: VarietySpecDoc) -> HSModel:
    """HSModel described by ``spec`` (newton-diagram specs give their divisor's model)."""
    p, f = spec.parameters, spec.flags
    try:
        if spec.kind == "point-on-smooth":
            return hs_point_on_smooth(p["n"], p["Ln"], p["KLn1"], p["eps"], f["saturates_at_eps"], spec.label)
        if spec.kind == "curve-divisor":
            return hs_divisor_on_curve(p["g"], p["d"], p["degZ"], f["saturates_at_eps"], spec.label)
        if spec.kind == "curve-subscheme":
            return hs_curve_subscheme(p["g"], p["d"], p["e"], p["rho"], p["eps"], f["saturates_at_eps"], spec.label)
        if spec.kind == "custom-hs":
            h = HSModel(
                p["n"], p["a0"], p["a1"], p["a0_const"], p["a1_const"], p["eps"],
                f["saturates_at_eps"], p.get("higher"), f["normal"], spec.label or "custom",
            )
            h.check()
            return h
        if spec.kind == "toric-oracle-case":
            return toric_case(spec).model()
        if spec.kind == "newton-diagram":
            return build_model(p["divisor"])
    except ModelError as exc:
        raise SpecError(f"$.parameters: {exc}") from None
    raise SpecError(f"$.kind: no model for {spec.kind}")


def toric_case(spec: VarietySpecDoc):
    from .oracle import Ambient, ToricCase

    p = spec.parameters
    try:
        return ToricCase(Ambient(p["ambient"]), p["d"], p.get("m", 1))
    except ValueError as exc:
        raise SpecError(f"$.parameters: {exc}") from None


def jsonable(obj: Any) -> Any:
    """Recursively convert results to JSON values; rationals become "p/q" strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rat_str(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        raise TypeError("floating point values are not emitted")
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Poly):
        return [rat_str(c) for c in obj.coeffs]
    if isinstance(obj, VarietySpecDoc):
        return obj.to_dict()
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True) + "\n"


__all__ = [
    "SCHEMA_VERSION",
    "SpecError",
    "VarietySpecDoc",
    "parse_spec",
    "load_spec_file",
    "build_model",
    "toric_case",
    "jsonable",
    "dumps",
]

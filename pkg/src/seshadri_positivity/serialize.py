"""JSON encoding of presentations, classes, series, varieties and verdicts.

Rationals are always strings (``"3"``, ``"-5/8"``) so no float ever enters a
computation.  Variety description files are validated against
:data:`VARIETY_SCHEMA` first and then checked semantically; both kinds of
problem raise :class:`SpecError` with one ``field: message`` line per issue.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping

import jsonschema

from . import chern as ch
from .chow import ChowPresentation, CycleClass, hirzebruch, multiprojective, table
from .delta import VarietyData
from .exactmath import UniPoly, as_rational, format_rational
from .seshadri import (
    Big,
    BignessVerdict,
    Exact,
    Inconclusive,
    LowerBound,
    SeshadriInfo,
    seshadri_complete_intersection,
    seshadri_defined_in_degree,
)


class SpecError(ValueError):
    """A variety description failed schema or semantic validation."""

    def __init__(self, problems: list[str]):
        super().__init__("\n".join(problems))
        self.problems = problems


_RATIONAL = {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}
_CLASS = {"type": "object", "additionalProperties": _RATIONAL}
_SERIES = {
    "type": "object",
    "required": ["kind", "rank", "coeffs"],
    "additionalProperties": False,
    "properties": {
        "kind": {"enum": ["chern", "segre"]},
        "rank": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array", "items": _CLASS, "minItems": 1},
    },
}
_PRESENTATION = {
    "type": "object",
    "required": ["type"],
    "properties": {"type": {"enum": ["multiproj", "hirzebruch", "table"]}},
    "allOf": [
        {
            "if": {"properties": {"type": {"const": "multiproj"}}},
            "then": {
                "required": ["factors"],
                "additionalProperties": False,
                "properties": {
                    "type": True,
                    "factors": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
                },
            },
        },
        {
            "if": {"properties": {"type": {"const": "hirzebruch"}}},
            "then": {
                "required": ["e"],
                "additionalProperties": False,
                "properties": {"type": True, "e": {"type": "integer", "minimum": 0}},
            },
        },
        {
            "if": {"properties": {"type": {"const": "table"}}},
            "then": {
                "required": ["dim", "basis", "products", "point"],
                "additionalProperties": False,
                "properties": {
                    "type": True,
                    "dim": {"type": "integer", "minimum": 1},
                    "basis": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "prefixItems": [{"type": "string"}, {"type": "integer", "minimum": 0}],
                            "minItems": 2,
                            "maxItems": 2,
                        },
                    },
                    "products": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "prefixItems": [{"type": "string"}, {"type": "string"}, _CLASS],
                            "minItems": 3,
                            "maxItems": 3,
                        },
                    },
                    "point": {"type": "string"},
                    "integral_scale": _RATIONAL,
                },
            },
        },
    ],
}
_EULER = {
    "type": "object",
    "required": ["euler"],
    "additionalProperties": False,
    "properties": {
        "euler": {
            "type": "object",
            "required": ["k", "h", "tangent"],
            "additionalProperties": False,
            "properties": {
                "k": {"type": "integer"},
                "h": _CLASS,
                "tangent": {"anyOf": [{"const": "builtin"}, _SERIES]},
            },
        }
    },
}
_SESHADRI = {
    "type": "object",
    "anyOf": [{"required": ["exact"]}, {"required": ["lower_bound"]}, {"required": ["rule"]}],
    "allOf": [
        {
            "if": {"required": ["exact"]},
            "then": {"additionalProperties": False, "properties": {"exact": _RATIONAL}},
        },
        {
            "if": {"required": ["lower_bound"]},
            "then": {"additionalProperties": False, "properties": {"lower_bound": _RATIONAL}},
        },
        {
            "if": {"required": ["rule"]},
            "then": {"properties": {"rule": {"enum": ["ci", "degree"]}}},
        },
        {
            "if": {"required": ["rule"], "properties": {"rule": {"const": "ci"}}},
            "then": {
                "required": ["degrees"],
                "additionalProperties": False,
                "properties": {
                    "rule": True,
                    "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
                },
            },
        },
        {
            "if": {"required": ["rule"], "properties": {"rule": {"const": "degree"}}},
            "then": {
                "required": ["t"],
                "additionalProperties": False,
                "properties": {"rule": True, "t": {"type": "integer", "minimum": 1}, "sharp": {"type": "boolean"}},
            },
        },
    ],
}
_NORMAL = {"if": {"type": "object", "required": ["euler"]}, "then": _EULER, "else": _SERIES}

VARIETY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["name", "k", "y", "chow", "normal", "polarization"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "k": {"type": "integer"},
        "y": {"type": "integer"},
        "chow": _PRESENTATION,
        "normal": _NORMAL,
        "polarization": _CLASS,
        "seshadri": _SESHADRI,
        "projective": {"type": "boolean"},
    },
}


def _field(path) -> str:
    parts = [str(p) for p in path]
    return ".".join(parts) if parts else "<root>"


def validate_schema(doc: Any) -> None:
    validator = jsonschema.Draft202012Validator(VARIETY_SCHEMA)
    errors = []
    for err in validator.iter_errors(doc):
        # report the innermost failure of oneOf/anyOf branches
        while err.context:
            err = jsonschema.exceptions.best_match(err.context)
        errors.append(err)
    errors.sort(key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        raise SpecError([f"{_field(e.absolute_path)}: {e.message}" for e in errors])


# -- encoders -------------------------------------------------------------------


def rational_to_json(q: Fraction) -> str:
    return format_rational(q)


def class_to_json(c: CycleClass) -> dict[str, str]:
    return {name: format_rational(q) for name, q in c.terms().items()}


def series_to_json(s: ch.ChernSeries) -> dict:
    return {"kind": s.kind, "rank": s.rank, "coeffs": [class_to_json(c) for c in s.coeffs]}


def poly_to_json(p: UniPoly) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def presentation_to_json(pres: ChowPresentation) -> dict:
    if pres.integral_scale == 1 and pres.kind == "multiproj":
        return {"type": "multiproj", "factors": list(pres.params)}
    if pres.integral_scale == 1 and pres.kind == "hirzebruch":
        return {"type": "hirzebruch", "e": pres.params[0]}
    products = [[a, b, {t: format_rational(q) for t, q in terms.items()}] for (a, b), terms in pres.structure_constants().items()]
    out = {
        "type": "table",
        "dim": pres.dim,
        "basis": [[n, c] for n, c in zip(pres.basis, pres.codims)],
        "products": products,
        "point": pres.point,
    }
    if pres.integral_scale != 1:
        out["integral_scale"] = format_rational(pres.integral_scale)
    return out


def seshadri_to_json(info: SeshadriInfo) -> dict:
    key = "exact" if info.exact else "lower_bound"
    return {key: format_rational(info.value)}


def variety_to_spec(v: VarietyData) -> dict:
    """A description file that rebuilds ``v`` exactly."""
    doc = {
        "name": v.name,
        "k": v.k,
        "y": v.y,
        "chow": presentation_to_json(v.chow),
        "normal": series_to_json(v.normal),
        "polarization": class_to_json(v.polarization),
        "projective": v.projective,
    }
    if v.seshadri is not None:
        doc["seshadri"] = seshadri_to_json(v.seshadri)
    return doc


def verdict_to_json(verdict: BignessVerdict) -> dict:
    out: dict[str, Any] = {"verdict": verdict.name, "evidence": verdict.evidence}
    if isinstance(verdict, Big):
        out["witness"] = format_rational(verdict.witness)
        out["value"] = format_rational(verdict.value)
    if isinstance(verdict, Inconclusive):
        out["checked_up_to"] = format_rational(verdict.checked_up_to)
    if verdict.annotation:
        out["annotation"] = verdict.annotation
    return out


def dumps(obj: Any) -> str:
    """Deterministic single-line JSON."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


# -- decoders ---------------------------------------------------------------------


def presentation_from_json(doc: Mapping) -> ChowPresentation:
    kind = doc["type"]
    if kind == "multiproj":
        return multiprojective(doc["factors"])
    if kind == "hirzebruch":
        return hirzebruch(doc["e"])
    products = {}
    for a, b, terms in doc["products"]:
        if (a, b) in products or (b, a) in products:
            raise ValueError(f"product {a}*{b} given twice")
        products[(a, b)] = {t: as_rational(q) for t, q in terms.items()}
    scale = as_rational(doc.get("integral_scale", "1"))
    return table(doc["dim"], [tuple(x) for x in doc["basis"]], products, doc["point"], integral_scale=scale)


def class_from_json(pres: ChowPresentation, doc: Mapping[str, str]) -> CycleClass:
    return pres.from_terms({name: as_rational(q) for name, q in doc.items()})


def series_from_json(pres: ChowPresentation, doc: Mapping) -> ch.ChernSeries:
    classes = [class_from_json(pres, c) for c in doc["coeffs"]]
    if len(classes) > pres.dim + 1:
        extra = classes[pres.dim + 1 :]
        if any(not c.is_zero() for c in extra):
            raise ValueError(f"series has nonzero terms beyond order {pres.dim}")
        classes = classes[: pres.dim + 1]
    classes += [pres.zero()] * (pres.dim + 1 - len(classes))
    return ch.ChernSeries(doc["kind"], doc["rank"], tuple(classes))


def seshadri_from_json(doc: Mapping) -> SeshadriInfo:
    if "exact" in doc:
        return Exact(as_rational(doc["exact"]))
    if "lower_bound" in doc:
        return LowerBound(as_rational(doc["lower_bound"]))
    if doc["rule"] == "ci":
        return seshadri_complete_intersection(doc["degrees"])
    return seshadri_defined_in_degree(doc["t"], bool(doc.get("sharp", False)))


def _step(field: str, fn, *args):
    try:
        return fn(*args)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        raise SpecError([f"{field}: {msg}"]) from None


def variety_from_json(doc: Any) -> VarietyData:
    """Validate and build a :class:`VarietyData` from a parsed description."""
    validate_schema(doc)
    k, y = doc["k"], doc["y"]
    if not 1 <= y <= k - 1:
        raise SpecError([f"y: dimension must satisfy 1 ≤ y ≤ k−1 (got y={y}, k={k})"])
    pres = _step("chow", presentation_from_json, doc["chow"])
    if pres.dim != y:
        raise SpecError([f"chow: presentation has dimension {pres.dim}, but y = {y}"])
    polarization = _step("polarization", class_from_json, pres, doc["polarization"])

    normal_doc = doc["normal"]
    projective = False
    if "euler" in normal_doc:
        e = normal_doc["euler"]
        if e["k"] != k:
            raise SpecError([f"normal.euler.k: ambient P^{e['k']} does not match k = {k}"])
        h = _step("normal.euler.h", class_from_json, pres, e["h"])
        if e["tangent"] == "builtin":
            tangent = _step("normal.euler.tangent", ch.tangent_series, pres)
        else:
            tangent = _step("normal.euler.tangent", series_from_json, pres, e["tangent"])
        normal = _step("normal.euler", ch.normal_from_euler, k, h, tangent)
        projective = h == polarization
    else:
        series = _step("normal", series_from_json, pres, normal_doc)
        normal = series if series.kind == ch.CHERN else _step("normal", ch.chern_from_segre, series)
    projective = doc.get("projective", projective)

    info = _step("seshadri", seshadri_from_json, doc["seshadri"]) if "seshadri" in doc else None
    return _step(
        "<root>",
        lambda: VarietyData(
            name=doc["name"],
            k=k,
            y=y,
            chow=pres,
            normal=normal,
            polarization=polarization,
            seshadri=info,
            projective=projective,
        ),
    )


def load_variety(path: str) -> VarietyData:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecError([f"{path}: {exc.strerror}"]) from None
    except json.JSONDecodeError as exc:
        raise SpecError([f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}"]) from None
    return variety_from_json(doc)

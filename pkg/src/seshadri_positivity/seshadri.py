"""Seshadri-constant rules and the three-valued bigness decision.

The Seshadri constant is either known exactly (complete intersections,
varieties cut out by quadrics) or only bounded below (varieties defined in
degree ``t``).  :func:`decide_bigness` looks for ``eta`` in ``(0, bound)`` with
``delta_eta > 0``; a negative answer is only conclusive for an exact constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import (
    OpenInterval,
    UniPoly,
    as_rational,
    exists_positive,
    format_rational,
    sign_scan,
)

AMPLE_NOTE = (
    "Seshadri O(1)-ample as well: for submanifolds of projective space, "
    "bigness and ampleness coincide"
)


class EmptyDegrees(ValueError):
    pass


class SharpFlagInvalid(ValueError):
    pass


@dataclass(frozen=True)
class SeshadriInfo:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))
        if self.value <= 0:
            raise ValueError("a Seshadri constant is strictly positive")

    exact = False


@dataclass(frozen=True)
class Exact(SeshadriInfo):
    """The Seshadri constant equals ``value``."""

    exact = True


@dataclass(frozen=True)
class LowerBound(SeshadriInfo):
    """Only ``epsilon >= value`` is known."""


def seshadri_complete_intersection(degrees: Sequence[int]) -> Exact:
    """``1/d1`` for a complete intersection of degrees ``d1 >= d2 >= ...``."""
    if not degrees:
        raise EmptyDegrees("a complete intersection needs at least one degree")
    if any(int(d) < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    return Exact(Fraction(1, max(int(d) for d in degrees)))


def seshadri_defined_in_degree(t: int, quadratic_sharp: bool = False) -> SeshadriInfo:
    """Bound ``epsilon >= 1/t`` for ``Y`` cut out in degree ``t``.

    With ``quadratic_sharp`` (a non-linear ``Y`` in ``P^k`` cut out by
    quadrics) the bound is attained and the result is ``Exact(1/2)``.
    """
    if t < 1:
        raise ValueError("degree t must be >= 1")
    if quadratic_sharp:
        if t != 2:
            raise SharpFlagInvalid("the sharp rule only applies in degree 2")
        return Exact(Fraction(1, 2))
    return LowerBound(Fraction(1, t))


def scale_seshadri(info: SeshadriInfo, s: int) -> SeshadriInfo:
    if s < 1:
        raise ValueError("scaling factor must be >= 1")
    return type(info)(info.value * s)


@dataclass(frozen=True)
class BignessVerdict:
    evidence: dict = field(default_factory=dict, compare=False)
    annotation: str | None = None

    name = ""


@dataclass(frozen=True)
class Big(BignessVerdict):
    witness: Fraction = Fraction(0)
    value: Fraction = Fraction(0)

    name = "big"


@dataclass(frozen=True)
class NotBig(BignessVerdict):
    name = "not_big"


@dataclass(frozen=True)
class Inconclusive(BignessVerdict):
    checked_up_to: Fraction = Fraction(0)

    name = "inconclusive"


def decide_bigness(p, info: SeshadriInfo, *, projective: bool = False) -> BignessVerdict:
    """Decide bigness from the delta polynomial ``p`` and Seshadri data ``info``.

    ``p`` may be a :class:`UniPoly` or anything with a ``poly`` attribute.
    ``projective`` marks ``Y`` as a submanifold of projective space, which
    adds the ampleness note to a positive verdict.
    """
    poly: UniPoly = getattr(p, "poly", p)
    bound = info.value
    interval = OpenInterval(Fraction(0), bound)
    if poly.is_zero():
        evidence = {"interval": ["0", format_rational(bound)], "roots_inside": None, "identically_zero": True}
    else:
        evidence = sign_scan(poly, interval).summary()
    evidence["seshadri"] = "exact" if info.exact else "lower_bound"

    witness = exists_positive(poly, interval)
    if witness is not None:
        value = poly(witness)
        return Big(
            evidence=evidence,
            annotation=AMPLE_NOTE if projective else None,
            witness=witness,
            value=value,
        )
    if info.exact:
        return NotBig(evidence=evidence)
    return Inconclusive(evidence=evidence, checked_up_to=bound)

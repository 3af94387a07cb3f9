"""Truncated Chern and Segre series with cycle-class coefficients.

A series ``1 + a_1 t + ... + a_y t^y`` lives on one Chow presentation of
dimension ``y``; everything beyond order ``y`` is dropped.  The Segre series is
the multiplicative inverse of the Chern series, computed by

    s_n = -(s_{n-1} c_1 + s_{n-2} c_2 + ... + s_1 c_{n-1} + c_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .chow import ChowPresentation, CycleClass, PresentationMismatch

CHERN = "chern"
SEGRE = "segre"


class KindMismatch(ValueError):
    """A Chern series was given where a Segre series was expected, or vice versa."""


class NonInvertible(ValueError):
    """The order-0 term of a series is not the unit class."""


class UnsupportedPresentation(ValueError):
    """No built-in tangent bundle is known for this presentation."""


@dataclass(frozen=True)
class ChernSeries:
    kind: str
    rank: int
    coeffs: tuple[CycleClass, ...]

    def __post_init__(self):
        if self.kind not in (CHERN, SEGRE):
            raise ValueError(f"series kind must be 'chern' or 'segre', got {self.kind!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")
        pres = self.presentation
        if len(self.coeffs) != pres.dim + 1:
            raise ValueError(f"a series on {pres.describe()} needs {pres.dim + 1} coefficients")
        if self.coeffs[0] != pres.unit():
            raise NonInvertible("order-0 coefficient must be the unit class")
        for i, c in enumerate(self.coeffs):
            if c.presentation != pres:
                raise PresentationMismatch("series coefficients on different presentations")
            if not c.is_homogeneous(i):
                raise ValueError(f"order-{i} coefficient is not of codimension {i}: {c}")
            if self.kind == CHERN and i > self.rank and not c.is_zero():
                raise ValueError(f"c_{i} must vanish for a bundle of rank {self.rank}")

    @property
    def presentation(self) -> ChowPresentation:
        return self.coeffs[0].presentation

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> CycleClass:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.presentation.zero()

    def __str__(self) -> str:
        sym = "c" if self.kind == CHERN else "s"
        return ", ".join(f"{sym}{i} = {c}" for i, c in enumerate(self.coeffs))


def make_series(kind: str, rank: int, classes: Sequence[CycleClass]) -> ChernSeries:
    """Series ``1 + classes[0] t + classes[1] t^2 + ...``, zero-padded to order ``y``."""
    if not classes:
        raise ValueError("need at least the order-1 class to fix the presentation")
    pres = classes[0].presentation
    if len(classes) > pres.dim:
        extra = classes[pres.dim:]
        if any(not c.is_zero() for c in extra):
            raise ValueError("classes beyond the dimension of Y must be zero")
        classes = classes[: pres.dim]
    coeffs = [pres.unit(), *classes] + [pres.zero()] * (pres.dim - len(classes))
    return ChernSeries(kind, rank, tuple(coeffs))


def trivial_series(pres: ChowPresentation, rank: int = 1, kind: str = CHERN) -> ChernSeries:
    return ChernSeries(kind, rank, (pres.unit(),) + (pres.zero(),) * pres.dim)


def line_bundle_series(c1: CycleClass, kind: str = CHERN) -> ChernSeries:
    """Series of the line bundle with first Chern class ``c1``."""
    if not c1.is_homogeneous(1):
        raise ValueError("a line bundle class must have codimension 1")
    chern = make_series(CHERN, 1, [c1])
    return chern if kind == CHERN else segre_from_chern(chern)


def _invert(coeffs: Sequence[CycleClass]) -> list[CycleClass]:
    out = [coeffs[0]]
    for n in range(1, len(coeffs)):
        acc = coeffs[n]
        for i in range(1, n):
            acc = acc + out[n - i] * coeffs[i]
        out.append(-acc)
    return out


def _convolve(a: Sequence[CycleClass], b: Sequence[CycleClass]) -> list[CycleClass]:
    out = []
    for n in range(len(a)):
        acc = a[0].presentation.zero()
        for i in range(n + 1):
            acc = acc + a[i] * b[n - i]
        out.append(acc)
    return out


def segre_from_chern(c: ChernSeries) -> ChernSeries:
    if c.kind != CHERN:
        raise KindMismatch("segre_from_chern needs a Chern series")
    return ChernSeries(SEGRE, c.rank, tuple(_invert(c.coeffs)))


def chern_from_segre(s: ChernSeries) -> ChernSeries:
    if s.kind != SEGRE:
        raise KindMismatch("chern_from_segre needs a Segre series")
    return ChernSeries(CHERN, s.rank, tuple(_invert(s.coeffs)))


def whitney(a: ChernSeries, b: ChernSeries) -> ChernSeries:
    """Series of the direct sum; the product of the two series."""
    if a.kind != b.kind:
        raise KindMismatch("whitney needs two series of the same kind")
    if a.presentation != b.presentation:
        raise PresentationMismatch("whitney needs series on the same presentation")
    return ChernSeries(a.kind, a.rank + b.rank, tuple(_convolve(a.coeffs, b.coeffs)))


def euler_series(k: int, h: CycleClass) -> ChernSeries:
    """``c_t(T_{P^k}|Y) = (1 + h t)^(k+1)`` truncated at ``dim Y``."""
    pres = h.presentation
    terms = []
    hp = pres.unit()
    for i in range(1, pres.dim + 1):
        hp = hp * h
        terms.append(hp * comb(k + 1, i))
    return make_series(CHERN, k, terms)


def normal_from_euler(k: int, h: CycleClass, tangent: ChernSeries) -> ChernSeries:
    """Chern series of the normal bundle of ``Y`` in ``P^k``.

    Solves ``(1 + h t)^(k+1) = c_t(T_Y) c_t(N)`` for ``c_t(N)``, where ``h`` is
    the hyperplane class restricted to ``Y``.
    """
    pres = tangent.presentation
    if tangent.kind != CHERN:
        raise KindMismatch("the tangent series must be a Chern series")
    if h.presentation != pres:
        raise PresentationMismatch("hyperplane class and tangent series on different presentations")
    if not h.is_homogeneous(1):
        raise ValueError("the hyperplane class must have codimension 1")
    if k <= pres.dim:
        raise ValueError(f"ambient dimension {k} must exceed dim Y = {pres.dim}")
    if tangent[0] != pres.unit():
        raise NonInvertible("tangent series must start with 1")
    ambient = euler_series(k, h)
    coeffs = _convolve(ambient.coeffs, _invert(tangent.coeffs))
    rank = k - pres.dim
    try:
        return ChernSeries(CHERN, rank, tuple(coeffs))
    except ValueError as exc:
        raise ValueError(f"tangent data inconsistent with an embedding in P^{k}: {exc}") from None


def tangent_series(pres: ChowPresentation) -> ChernSeries:
    """Chern series of ``T_Y`` for the built-in presentations.

    Products of projective spaces use the Euler sequence on each factor;
    ``F_e`` has ``c_1 = 2 C0 + (e+2) F`` and ``c_2 = 4 pt``.
    """
    if pres.kind == "multiproj":
        total = trivial_series(pres, 1).coeffs
        for i, n in enumerate(pres.params, start=1):
            h = pres.hyperplane(i)
            factor = [pres.unit()]
            hp = pres.unit()
            for j in range(1, pres.dim + 1):
                hp = hp * h
                factor.append(hp * comb(n + 1, j))
            total = _convolve(total, factor)
        return ChernSeries(CHERN, pres.dim, tuple(total))
    if pres.kind == "hirzebruch":
        e = pres.params[0]
        c1 = pres.from_terms({"C0": 2, "F": e + 2})
        c2 = pres.from_terms({"pt": 4})
        return make_series(CHERN, 2, [c1, c2])
    raise UnsupportedPresentation("table presentations need an explicit tangent series")

"""The bigness invariant ``delta_eta(Y, A)`` as an exact polynomial in ``eta``.

For ``Y`` of dimension ``y`` in ``X`` of dimension ``k`` with normal bundle
``N`` and polarization class ``A`` restricted to ``Y``::

    delta_eta = - sum_{t=0}^{k-2} C(k-2, t) eta^t  int_Y s_{y-k+t+2}(N) A^{k-t-2}

Besides this general form the module carries the closed forms for curves,
surfaces, codimension one and codimension two, so that they can be checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Optional

from .chern import CHERN, ChernSeries, line_bundle_series, segre_from_chern, whitney
from .chow import ChowPresentation, CycleClass, integrate, power
from .exactmath import RationalLike, UniPoly, as_rational
from .seshadri import SeshadriInfo, scale_seshadri


class InvalidVariety(ValueError):
    pass


class NotCodimensionOne(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class UnsupportedK(ValueError):
    pass


class IdentityViolation(AssertionError):
    """A polynomial identity that must hold exactly failed."""


@dataclass(frozen=True)
class VarietyData:
    """Numerical data of ``Y`` inside the polarized manifold ``(X, A)``.

    ``normal`` is the Chern series of ``N_{Y|X}``; ``polarization`` is
    ``c_1(A|_Y)``.  ``projective`` records that ``X`` is a projective space
    and ``A`` its hyperplane bundle.
    """

    name: str
    k: int
    y: int
    chow: ChowPresentation
    normal: ChernSeries
    polarization: CycleClass
    seshadri: Optional[SeshadriInfo] = None
    projective: bool = False

    def __post_init__(self):
        if not 1 <= self.y <= self.k - 1:
            raise InvalidVariety(f"dimension must satisfy 1 ≤ y ≤ k−1 (got y={self.y}, k={self.k})")
        if self.chow.dim != self.y:
            raise InvalidVariety(f"Chow ring has dimension {self.chow.dim}, expected y = {self.y}")
        if self.normal.kind != CHERN:
            raise InvalidVariety("normal bundle must be given by its Chern series")
        if self.normal.presentation != self.chow or self.polarization.presentation != self.chow:
            raise InvalidVariety("normal series and polarization must live on the Chow ring of Y")
        if self.normal.rank != self.k - self.y:
            raise InvalidVariety(f"normal bundle rank {self.normal.rank} != k - y = {self.k - self.y}")
        if not self.polarization.is_homogeneous(1):
            raise InvalidVariety("polarization must be a codimension-1 class")
        if self.degree <= 0:
            raise InvalidVariety(f"degree of Y must be positive, got {self.degree}")

    @cached_property
    def degree(self) -> Fraction:
        return integrate(power(self.polarization, self.y))

    @cached_property
    def segre(self) -> ChernSeries:
        return segre_from_chern(self.normal)

    @property
    def codim(self) -> int:
        return self.k - self.y


@dataclass(frozen=True)
class EtaPolynomial:
    poly: UniPoly
    provenance: str = "general"

    def __call__(self, eta: RationalLike) -> Fraction:
        return self.poly(eta)


def _a_power(v: VarietyData, n: int) -> CycleClass:
    return power(v.polarization, n)


def segre_integral(v: VarietyData, t: int) -> Fraction:
    """``int_Y s_{y-k+t+2}(N) A^{k-t-2}``; zero for orders outside ``0..y``."""
    if not 0 <= t <= v.k - 2:
        raise ValueError(f"t must lie in 0..{v.k - 2}")
    order = v.y - v.k + t + 2
    if order < 0 or order > v.y:
        return Fraction(0)
    return integrate(v.segre[order] * _a_power(v, v.k - t - 2))


def blowup_intersection(v: VarietyData, r: int) -> Fraction:
    """``int_{X_Y} E^{k-r} (A^*)^r`` pushed down to ``Y``."""
    if not 0 <= r <= v.k:
        raise ValueError(f"r must lie in 0..{v.k}")
    if r >= v.y + 1:
        return Fraction(0)
    sign = -1 if (v.k - r - 1) % 2 else 1
    return sign * integrate(v.segre[v.y - r] * _a_power(v, r))


def delta_poly(v: VarietyData) -> EtaPolynomial:
    coeffs = [-comb(v.k - 2, t) * segre_integral(v, t) for t in range(v.k - 1)]
    return EtaPolynomial(UniPoly(coeffs), "general")


def delta_at(v: VarietyData, eta: RationalLike) -> Fraction:
    return delta_poly(v).poly(as_rational(eta))


def delta_terms(v: VarietyData) -> list[dict]:
    """Per-``t`` breakdown of the general formula (for hand checking)."""
    rows = []
    for t in range(v.k - 1):
        integral = segre_integral(v, t)
        rows.append(
            {
                "t": t,
                "binomial": comb(v.k - 2, t),
                "segre_order": v.y - v.k + t + 2,
                "polarization_power": v.k - t - 2,
                "segre_integral": integral,
                "coefficient": -comb(v.k - 2, t) * integral,
            }
        )
    return rows


def blowup_expansion(v: VarietyData) -> UniPoly:
    """``int_{X_Y} E^2 (A^* - eta E)^{k-2}`` expanded through blow-up intersection numbers.

    This is the self-intersection of the exceptional curve on a general
    complete-intersection surface, divided by ``m^{k-2}``; it must agree with
    :func:`delta_poly`.
    """
    coeffs = []
    for t in range(v.k - 1):
        sign = -1 if t % 2 else 1
        coeffs.append(sign * comb(v.k - 2, t) * blowup_intersection(v, v.k - 2 - t))
    return UniPoly(coeffs)


# -- closed forms ---------------------------------------------------------


def delta_codim1_poly(v: VarietyData) -> EtaPolynomial:
    """``int_Y c_1(N) (A - eta c_1(N))^{k-2}`` expanded binomially."""
    if v.codim != 1:
        raise NotCodimensionOne(f"Y has codimension {v.codim}")
    n = v.normal[1]
    coeffs = []
    for t in range(v.k - 1):
        integral = integrate(power(n, t + 1) * _a_power(v, v.k - 2 - t))
        coeffs.append((-1) ** t * comb(v.k - 2, t) * integral)
    return EtaPolynomial(UniPoly(coeffs), "codim1")


def delta_curve_poly(v: VarietyData) -> EtaPolynomial:
    """``eta^{k-3} (eta deg N - (k-2) d)`` for a curve."""
    if v.y != 1:
        raise PreconditionViolated("curve formula needs y = 1")
    deg_n = integrate(v.normal[1])
    d = v.degree
    if v.k == 2:
        return EtaPolynomial(UniPoly([deg_n]), "curve")
    poly = UniPoly.monomial(v.k - 2, deg_n) - UniPoly.monomial(v.k - 3, (v.k - 2) * d)
    return EtaPolynomial(poly, "curve")


def _shifted(terms: dict[int, Fraction]) -> UniPoly:
    coeffs: dict[int, Fraction] = {}
    for exp, c in terms.items():
        if exp < 0:
            if c != 0:
                raise IdentityViolation(f"negative power of eta with coefficient {c}")
            continue
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + c
    top = max(coeffs, default=-1)
    return UniPoly(coeffs.get(i, Fraction(0)) for i in range(top + 1))


def delta_surface_poly(v: VarietyData) -> EtaPolynomial:
    """Surface form in terms of ``c_1(N)``, ``c_2(N)`` and ``deg Y``."""
    if v.y != 2:
        raise PreconditionViolated("surface formula needs y = 2")
    k = v.k
    c1, c2, a = v.normal[1], v.normal[2], v.polarization
    s2 = integrate(c1 * c1 - c2)
    c1a = integrate(c1 * a)
    const = Fraction((k - 2) * (k - 3), 2) * v.degree
    poly = _shifted({k - 2: -s2, k - 3: (k - 2) * c1a, k - 4: -const})
    return EtaPolynomial(poly, "surface")


def delta_codim2_poly(v: VarietyData) -> EtaPolynomial:
    """Explicit codimension-two forms for ``(k, y)`` in ``(4,2), (5,3), (6,4)``."""
    if v.codim != 2 or v.k not in (4, 5, 6):
        raise PreconditionViolated("codimension-two closed forms exist for k = 4, 5, 6")
    c1, c2, a = v.normal[1], v.normal[2], v.polarization
    d = v.degree
    s2 = c1 * c1 - c2
    if v.k == 4:
        coeffs = [-d, 2 * integrate(c1 * a), -integrate(s2)]
    elif v.k == 5:
        coeffs = [
            -d,
            3 * integrate(c1 * a * a),
            -3 * integrate(s2 * a),
            -integrate(c1 * c2 * 2 - power(c1, 3)),
        ]
    else:
        s3 = c1 * c2 * 2 - power(c1, 3)
        coeffs = [
            -d,
            4 * integrate(c1 * power(a, 3)),
            -6 * integrate(s2 * a * a),
            -4 * integrate(s3 * a),
            integrate(c1 * c1 * c2 * 3 - c2 * c2 - power(c1, 4)),
        ]
    return EtaPolynomial(UniPoly(coeffs), "codim2")


def delta1_decomposable(v: VarietyData, L: CycleClass, M: CycleClass) -> Fraction:
    """``sum_{j=1}^{y-1} int_Y L^{y-j} M^j`` for ``N = L + M`` and ``A = L + M``.

    Checks the preconditions first: codimension two, split normal bundle and
    polarization equal to the determinant.
    """
    if v.codim != 2:
        raise PreconditionViolated("needs codimension two")
    split = whitney(line_bundle_series(L), line_bundle_series(M))
    if split != v.normal:
        raise PreconditionViolated("normal bundle is not L + M")
    if v.polarization != L + M:
        raise PreconditionViolated("polarization is not c_1(L) + c_1(M)")
    total = Fraction(0)
    for j in range(1, v.y):
        total += integrate(power(L, v.y - j) * power(M, j))
    return total


def schur_delta1(bundle: ChernSeries, k: int) -> Fraction:
    """``delta_1`` of a zero locus of a rank-2 bundle ``E`` with ``A = det E``.

    ``bundle`` is the Chern series of ``E`` restricted to ``Y`` (dimension
    ``k - 2``).
    """
    if k not in (4, 5, 6, 7):
        raise UnsupportedK(f"closed forms exist for k = 4..7, got {k}")
    if bundle.kind != CHERN or bundle.rank != 2:
        raise PreconditionViolated("need the Chern series of a rank-2 bundle")
    if bundle.presentation.dim != k - 2:
        raise PreconditionViolated(f"Y must have dimension {k - 2}")
    c1, c2 = bundle[1], bundle[2]
    if k == 4:
        cls = c2
    elif k == 5:
        cls = c1 * c2
    elif k == 6:
        cls = c2 * (c1 * c1 - c2)
    else:
        cls = c1 * c2 * (c1 * c1 - c2 * 2)
    return integrate(cls)


def scale_polarization(v: VarietyData, s: int) -> VarietyData:
    """Data of ``(Y, A^s)``; the Seshadri information scales along."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    info = scale_seshadri(v.seshadri, s) if v.seshadri is not None else None
    return replace(v, name=f"{v.name} (A^{s})", polarization=v.polarization * s, seshadri=info)


def scale_delta(v: VarietyData, s: int) -> VarietyData:
    """Scale the polarization by ``s`` and check ``p_s(s eta) = s^{k-2} p(eta)``."""
    scaled = scale_polarization(v, s)
    lhs = delta_poly(scaled).poly.scale_argument(s)
    rhs = delta_poly(v).poly * (Fraction(s) ** (v.k - 2))
    if lhs != rhs:
        raise IdentityViolation(f"scaling law fails for {v.name} at s = {s}: {lhs} != {rhs}")
    return scaled


def finite_cover(v: VarietyData, degf: int) -> VarietyData:
    """Data of the preimage of ``Y`` under a finite cover of degree ``degf``.

    Normal bundle and polarization pull back, so only the degree map on
    zero-cycles changes.
    """
    if degf < 1:
        raise ValueError("covering degree must be positive")
    if degf == 1:
        return v
    pres = v.chow.covering(degf)
    normal = ChernSeries(v.normal.kind, v.normal.rank, tuple(c.rebase(pres) for c in v.normal.coeffs))
    return replace(
        v,
        name=f"{v.name} (degree-{degf} cover)",
        chow=pres,
        normal=normal,
        polarization=v.polarization.rebase(pres),
    )


def finite_cover_delta(v: VarietyData, degf: int) -> EtaPolynomial:
    return EtaPolynomial(delta_poly(finite_cover(v, degf)).poly, "cover")

"""Built-in varieties and their expected invariants.

Constructors only assemble raw data: a Chow ring, the tangent bundle or the
normal bundle's Chern classes, the polarization and the Seshadri rule.  The
delta polynomials are always recomputed from that data; the values they are
compared against live in the ``expected`` functions, which the verification
harness consumes.

Every constructor accepts an optional ``adjust`` hook applied to the Chow
ring right after it is built.  Classes are created by basis name afterwards,
so a corrupted ring (see ``ChowPresentation.with_structure_constant``) flows
through every later computation.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping, Optional

from . import chern as ch
from .chow import ChowPresentation, CycleClass, hirzebruch, integrate, multiprojective, table
from .delta import VarietyData, delta_at, delta_poly, finite_cover
from .exactmath import UniPoly
from .seshadri import (
    LowerBound,
    decide_bigness,
    seshadri_complete_intersection,
    seshadri_defined_in_degree,
)

Adjust = Optional[Callable[[ChowPresentation], ChowPresentation]]


class UnknownEntry(KeyError):
    def __init__(self, name: str, suggestions: list[str]):
        super().__init__(name)
        self.name = name
        self.suggestions = suggestions

    def __str__(self) -> str:
        hint = f"; did you mean {', '.join(self.suggestions)}?" if self.suggestions else ""
        return f"unknown catalog entry {self.name!r}{hint}"


class BadParams(ValueError):
    pass


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "int" or "ints"
    default: Any
    doc: str


@dataclass(frozen=True)
class Expectation:
    """One exact value to reproduce.

    ``compute`` maps the built variety to the value; ``expected`` is what it
    must equal.  Cycle classes are compared through their term dictionaries.
    """

    label: str
    source: str
    expected: Any
    compute: Callable[[VarietyData], Any]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    params: tuple[Param, ...]
    constructor: Callable[..., VarietyData]
    expected: Callable[[dict], list[Expectation]]
    instances: tuple[dict, ...] = field(default=({},))

    def resolve(self, params: Mapping[str, Any] | None = None) -> dict:
        params = dict(params or {})
        known = {p.name for p in self.params}
        extra = set(params) - known
        if extra:
            raise BadParams(f"{self.name}: unknown parameter(s) {sorted(extra)}; expected {sorted(known)}")
        out = {}
        for p in self.params:
            value = params.get(p.name, p.default)
            out[p.name] = _coerce_param(self.name, p, value)
        return out

    def build(self, params: Mapping[str, Any] | None = None, adjust: Adjust = None) -> VarietyData:
        resolved = self.resolve(params)
        return self.constructor(adjust=adjust, **resolved)


def _coerce_param(entry: str, p: Param, value: Any):
    try:
        if p.kind == "int":
            if isinstance(value, bool):
                raise TypeError
            return int(value)
        if isinstance(value, str):
            value = [v for v in value.replace(" ", "").split(",") if v]
        return tuple(int(v) for v in value)
    except (TypeError, ValueError):
        raise BadParams(f"{entry}: parameter {p.name!r} expects {p.kind}, got {value!r}") from None


# -- helpers ---------------------------------------------------------------


def _adjusted(pres: ChowPresentation, adjust: Adjust) -> ChowPresentation:
    return adjust(pres) if adjust is not None else pres


def _rebased_tangent(original: ChowPresentation, pres: ChowPresentation) -> ch.ChernSeries:
    tangent = ch.tangent_series(original)
    if pres is original:
        return tangent
    return ch.ChernSeries(tangent.kind, tangent.rank, tuple(c.rebase(pres) for c in tangent.coeffs))


def _mono(*exps: int) -> str:
    return "*".join(f"h{i}^{a}" for i, a in enumerate(exps, start=1))


def _line(pres: ChowPresentation, *degrees: int) -> CycleClass:
    terms = {}
    for i, a in enumerate(degrees):
        exps = [0] * len(degrees)
        exps[i] = 1
        terms[_mono(*exps)] = a
    return pres.from_terms(terms)


def hyperplane_ring(y: int, degree: int) -> ChowPresentation:
    """Subring generated by one hyperplane class ``H`` with ``int H^y = degree``.

    Basis ``1, H, H^2, ..., H^{y-1}, pt`` with ``H^y = degree * pt``.
    """
    names = ["1"] + ["H" if i == 1 else f"H^{i}" for i in range(1, y)] + ["pt"]
    basis = [(n, i) for i, n in enumerate(names)]
    products = {}
    for i in range(1, y + 1):
        for j in range(i, y + 1):
            if i + j < y:
                products[(names[i], names[j])] = {names[i + j]: 1}
            elif i + j == y:
                products[(names[i], names[j])] = {"pt": degree}
    return table(y, basis, products, "pt")


def _complete_intersection(
    degrees: tuple[int, ...], y: int, ambient_degree: int, adjust: Adjust
) -> tuple[ChowPresentation, CycleClass, ch.ChernSeries]:
    d = ambient_degree
    for x in degrees:
        d *= x
    pres = _adjusted(hyperplane_ring(y, d), adjust)
    if y == 1:
        h = pres.basis_class("pt", d)
    else:
        h = pres.basis_class("H")
    normal = ch.trivial_series(pres, 1)
    for x in degrees:
        normal = ch.whitney(normal, ch.line_bundle_series(h * x))
    normal = ch.ChernSeries(ch.CHERN, len(degrees), normal.coeffs)
    return pres, h, normal


def _check_descending(entry: str, degrees: tuple[int, ...]) -> None:
    if any(x < 1 for x in degrees):
        raise BadParams(f"{entry}: degrees must be positive")
    if list(degrees) != sorted(degrees, reverse=True):
        raise BadParams(f"{entry}: degrees must be sorted descending (d1 >= d2 >= ...)")


# -- constructors -------------------------------------------------------------


def build_ci_codim2(d1: int, d2: int, k: int, ambient_degree: int, adjust: Adjust = None) -> VarietyData:
    _check_descending("ci_codim2", (d1, d2))
    if k < 3:
        raise BadParams("ci_codim2: k must be >= 3")
    if ambient_degree < 1:
        raise BadParams("ci_codim2: ambient_degree must be positive")
    pres, h, normal = _complete_intersection((d1, d2), k - 2, ambient_degree, adjust)
    return VarietyData(
        name=f"complete intersection ({d1},{d2}) of dimension {k - 2}",
        k=k,
        y=k - 2,
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_complete_intersection([d1, d2]),
        projective=ambient_degree == 1,
    )


def build_ci_surface_p5(d1: int, d2: int, d3: int, adjust: Adjust = None) -> VarietyData:
    _check_descending("ci_surface_p5", (d1, d2, d3))
    pres, h, normal = _complete_intersection((d1, d2, d3), 2, 1, adjust)
    return VarietyData(
        name=f"complete intersection surface ({d1},{d2},{d3}) in P^5",
        k=5,
        y=2,
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_complete_intersection([d1, d2, d3]),
        projective=True,
    )


def build_ci_curve(degrees: tuple[int, ...], adjust: Adjust = None) -> VarietyData:
    _check_descending("ci_curve", degrees)
    if len(degrees) < 2:
        raise BadParams("ci_curve: need at least two degrees (k >= 3)")
    k = len(degrees) + 1
    pres, h, normal = _complete_intersection(degrees, 1, 1, adjust)
    return VarietyData(
        name=f"complete intersection curve {degrees} in P^{k}",
        k=k,
        y=1,
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_complete_intersection(list(degrees)),
        projective=True,
    )


def build_hypersurface(d: int, k: int, adjust: Adjust = None) -> VarietyData:
    if d < 1:
        raise BadParams("hypersurface: d must be >= 1")
    if k < 2:
        raise BadParams("hypersurface: k must be >= 2")
    pres, h, normal = _complete_intersection((d,), k - 1, 1, adjust)
    return VarietyData(
        name=f"hypersurface of degree {d} in P^{k}",
        k=k,
        y=k - 1,
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_complete_intersection([d]),
        projective=True,
    )


def build_scroll(e: int, adjust: Adjust = None) -> VarietyData:
    if e < 0:
        raise BadParams("scroll: e must be >= 0")
    original = hirzebruch(e)
    pres = _adjusted(original, adjust)
    h = pres.from_terms({"C0": 1, "F": e + 1})
    k = e + 3
    normal = ch.normal_from_euler(k, h, _rebased_tangent(original, pres))
    return VarietyData(
        name=f"rational normal scroll Y_{e} in P^{k}",
        k=k,
        y=2,
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_defined_in_degree(2, quadratic_sharp=True),
        projective=True,
    )


def build_veronese(adjust: Adjust = None) -> VarietyData:
    original = multiprojective([2])
    pres = _adjusted(original, adjust)
    h = _line(pres, 2)
    normal = ch.normal_from_euler(5, h, _rebased_tangent(original, pres))
    return VarietyData(
        name="Veronese surface in P^5",
        k=5,
        y=2,
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_defined_in_degree(2, quadratic_sharp=True),
        projective=True,
    )


def build_veronese_projected(adjust: Adjust = None) -> VarietyData:
    original = multiprojective([2])
    pres = _adjusted(original, adjust)
    h = _line(pres, 2)
    normal = ch.normal_from_euler(4, h, _rebased_tangent(original, pres))
    return VarietyData(
        name="projected Veronese surface in P^4",
        k=4,
        y=2,
        chow=pres,
        normal=normal,
        polarization=h,
        # ideal generated by cubics
        seshadri=seshadri_defined_in_degree(3),
        projective=True,
    )


def _segre(factors: tuple[int, ...], adjust: Adjust) -> VarietyData:
    original = multiprojective(factors)
    pres = _adjusted(original, adjust)
    h = _line(pres, *([1] * len(factors)))
    k = 1
    for n in factors:
        k *= n + 1
    k -= 1
    normal = ch.normal_from_euler(k, h, _rebased_tangent(original, pres))
    label = " x ".join(f"P^{n}" for n in factors)
    return VarietyData(
        name=f"Segre embedding of {label} in P^{k}",
        k=k,
        y=sum(factors),
        chow=pres,
        normal=normal,
        polarization=h,
        seshadri=seshadri_defined_in_degree(2, quadratic_sharp=True),
        projective=True,
    )


def build_segre_p2p1(adjust: Adjust = None) -> VarietyData:
    return _segre((2, 1), adjust)


def build_segre_p3p1(adjust: Adjust = None) -> VarietyData:
    return _segre((3, 1), adjust)


def build_segre_p2p2(adjust: Adjust = None) -> VarietyData:
    return _segre((2, 2), adjust)


def elliptic_ruled_ring() -> ChowPresentation:
    """Numerical ring of ``C x P^1``, ``C`` an elliptic curve.

    ``f`` is a fibre ``{p} x P^1`` and ``sigma`` a section ``C x {q}``.
    """
    return table(
        2,
        [("1", 0), ("f", 1), ("sigma", 1), ("pt", 2)],
        {("f", "sigma"): {"pt": 1}},
        "pt",
    )


def elliptic_tangent(pres: ChowPresentation) -> ch.ChernSeries:
    # K_Y = -2 sigma, topological Euler number 0
    return ch.make_series(ch.CHERN, 2, [pres.from_terms({"sigma": 2}), pres.zero()])


def build_elliptic_scroll(adjust: Adjust = None) -> VarietyData:
    pres = _adjusted(elliptic_ruled_ring(), adjust)
    # O_Y(1) = L x O(1) with deg L = 3
    h = pres.from_terms({"f": 3, "sigma": 1})
    normal = ch.normal_from_euler(5, h, elliptic_tangent(pres))
    return VarietyData(
        name="elliptic scroll C x P^1 in P^5",
        k=5,
        y=2,
        chow=pres,
        normal=normal,
        polarization=h,
        # ideal generated in degree 3
        seshadri=seshadri_defined_in_degree(3),
        projective=True,
    )


def build_decomposable_rank2(
    factors: tuple[int, ...], L: tuple[int, ...], M: tuple[int, ...], adjust: Adjust = None
) -> VarietyData:
    if not (len(factors) == len(L) == len(M)):
        raise BadParams("decomposable_rank2: factors, L and M need the same length")
    try:
        original = multiprojective(factors)
    except ValueError as exc:
        raise BadParams(f"decomposable_rank2: {exc}") from None
    pres = _adjusted(original, adjust)
    lc, mc = _line(pres, *L), _line(pres, *M)
    normal = ch.whitney(ch.line_bundle_series(lc), ch.line_bundle_series(mc))
    y = sum(factors)
    return VarietyData(
        name=f"zero locus of O{L} + O{M} on {' x '.join(f'P^{n}' for n in factors)}",
        k=y + 2,
        y=y,
        chow=pres,
        normal=normal,
        polarization=lc + mc,
        # A*-E is ample when A = det of an ample rank-2 bundle
        seshadri=LowerBound(1),
        projective=False,
    )


def build_veronese_double_cover(n: int, adjust: Adjust = None) -> VarietyData:
    if n < 1:
        raise BadParams("veronese_double_cover: n must be >= 1")
    base = build_veronese(adjust)
    cover = finite_cover(base, n)
    return VarietyData(
        name=f"preimage of the Veronese surface under a degree-{n} cyclic cover of P^5",
        k=cover.k,
        y=cover.y,
        chow=cover.chow,
        normal=cover.normal,
        polarization=cover.polarization,
        seshadri=cover.seshadri,
        projective=False,
    )


# -- expected values ------------------------------------------------------------


def _terms(c: CycleClass) -> dict:
    return c.terms()


def _int(c: CycleClass) -> Fraction:
    return integrate(c)


def _verdict(v: VarietyData) -> str:
    return decide_bigness(delta_poly(v), v.seshadri, projective=v.projective).name


def _witness_in(lo: Fraction, hi: Fraction):
    def check(v: VarietyData) -> bool:
        verdict = decide_bigness(delta_poly(v), v.seshadri)
        return verdict.name == "big" and lo < verdict.witness < hi

    return check


def _poly(v: VarietyData) -> UniPoly:
    return delta_poly(v).poly


def _at(eta) -> Callable[[VarietyData], Fraction]:
    eta = Fraction(eta)
    return lambda v: delta_at(v, eta)


def _eps_value(v: VarietyData) -> Fraction:
    return delta_at(v, v.seshadri.value)


def _expand(terms: Mapping[int, Fraction]) -> UniPoly:
    top = max(terms)
    return UniPoly(terms.get(i, 0) for i in range(top + 1))


def expected_ci_codim2(p: dict) -> list[Expectation]:
    d1, d2, k, dx = p["d1"], p["d2"], p["k"], p["ambient_degree"]
    d = dx * d1 * d2
    r = Fraction(d2, d1)
    out = [Expectation("verdict", "every codimension-two complete intersection is big", "big", _verdict)]
    if k == 4:
        poly = UniPoly([-d, 2 * d * (d1 + d2), -d * (d1 * d1 + d2 * d2 + d1 * d2)])
        out += [
            Expectation("delta_eta", "fourfold complete intersection, delta_eta", poly, _poly),
            Expectation("delta(eps)", "d (d2/d1 - d2^2/d1^2)", d * (r - r * r), _eps_value),
        ]
        if d1 == d2:
            out.append(
                Expectation(
                    "witness in (1/(3 d1), 1/d1)",
                    "positive between the roots 1/(3 d1) and 1/d1",
                    True,
                    _witness_in(Fraction(1, 3 * d1), Fraction(1, d1)),
                )
            )
    elif k == 5:
        poly = UniPoly(
            [
                -d,
                3 * d * (d1 + d2),
                -3 * d * (d1 * d1 + d1 * d2 + d2 * d2),
                d * (d1**3 + d1 * d1 * d2 + d1 * d2 * d2 + d2**3),
            ]
        )
        out += [
            Expectation("delta_eta", "fivefold complete intersection, delta_eta", poly, _poly),
            Expectation("delta(eps)", "(d d2/d1)(d2/d1 - 1)^2", d * r * (r - 1) ** 2, _eps_value),
        ]
        if d1 == d2:
            out.append(
                Expectation(
                    "witness in (1/(4 d1), 1/d1)",
                    "positive between the roots 1/(4 d1) and the double root 1/d1",
                    True,
                    _witness_in(Fraction(1, 4 * d1), Fraction(1, d1)),
                )
            )
    return out


def _ci_surface_f(d1: int, d2: int, d3: int) -> UniPoly:
    quad = d1 * d1 + d2 * d2 + d3 * d3 + d1 * d2 + d1 * d3 + d2 * d3
    return UniPoly([-3, 3 * (d1 + d2 + d3), -quad])


def expected_ci_surface_p5(p: dict) -> list[Expectation]:
    d1, d2, d3 = p["d1"], p["d2"], p["d3"]
    d = d1 * d2 * d3
    f = _ci_surface_f(d1, d2, d3)
    out = [
        Expectation(
            "delta_eta",
            "d eta f(eta) with f = -(sum d_i^2 + sum d_i d_j) x^2 + 3 (sum d_i) x - 3",
            f * UniPoly([0, d]),
            _poly,
        )
    ]
    if (d1, d2, d3) == (3, 2, 2):
        out += [
            Expectation("f", "f(x) = -33x^2 + 21x - 3", UniPoly([-3, 21, -33]), lambda v: _poly(v) // UniPoly([0, d])),
            Expectation("f(1/3)", "f(1/3) = 1/3", Fraction(1, 3), lambda v: delta_at(v, Fraction(1, 3)) / (d * Fraction(1, 3))),
            Expectation("verdict", "Big for degrees (3,2,2)", "big", _verdict),
        ]
    if (d1, d2, d3) == (9, 2, 2):

        def discriminant(v: VarietyData) -> Fraction:
            f_ = _poly(v) // UniPoly([0, d])
            a, b, c = f_.coefficient(2), f_.coefficient(1), f_.coefficient(0)
            return b * b - 4 * a * c

        out += [
            Expectation("f", "f(x) = -129x^2 + 39x - 3", UniPoly([-3, 39, -129]), lambda v: _poly(v) // UniPoly([0, d])),
            Expectation("discriminant", "discriminant of f is -27", Fraction(-27), discriminant),
            Expectation("verdict", "never big for degrees (9,2,2)", "not_big", _verdict),
        ]
    return out


def expected_ci_curve(p: dict) -> list[Expectation]:
    degrees = p["degrees"]
    k = len(degrees) + 1
    d = 1
    for x in degrees:
        d *= x
    deg_n = d * sum(degrees)
    terms = {k - 2: Fraction(deg_n)}
    if k >= 3:
        terms[k - 3] = terms.get(k - 3, 0) - (k - 2) * d
    big = sum(degrees[1:]) > (k - 3) * degrees[0]
    return [
        Expectation("delta_eta", "eta^{k-3} (eta deg N - (k-2) d)", _expand(terms), _poly),
        Expectation(
            "verdict",
            "big iff d2 + ... + d_{k-1} > (k-3) d1",
            "big" if big else "not_big",
            _verdict,
        ),
    ]


def expected_hypersurface(p: dict) -> list[Expectation]:
    d, k = p["d"], p["k"]
    poly = UniPoly([1, -d]) ** (k - 2) * (d * d)
    out = [Expectation("delta_eta", "d^2 (1 - d eta)^(k-2)", poly, _poly)]
    if k >= 3:
        out.append(Expectation("verdict", "positive on (0, 1/d)", "big", _verdict))
    return out


def expected_scroll(p: dict) -> list[Expectation]:
    e = p["e"]
    a = e**3 + 9 * e**2 + 22 * e + 16
    b = 2 * (e + 1) * (e**2 + 5 * e + 4)
    c = e * (e + 1) * (e + 2)
    terms = {e + 1: Fraction(-a, 2), e: Fraction(b, 2)}
    if e >= 1:
        terms[e - 1] = Fraction(-c, 2)
    return [
        Expectation("degree", "minimal degree e + 2", Fraction(e + 2), lambda v: v.degree),
        Expectation(
            "c1(N)",
            "c1(N) = (e+2) C0 + (e^2+4e+2) F",
            {"C0": Fraction(e + 2), "F": Fraction(e * e + 4 * e + 2)},
            lambda v: _terms(v.normal[1]),
        ),
        Expectation(
            "int c2(N)",
            "(e+4)(e+3)(e+2)/2 - e^2 - 8e - 12",
            Fraction((e + 4) * (e + 3) * (e + 2), 2) - e * e - 8 * e - 12,
            lambda v: _int(v.normal[2]),
        ),
        Expectation("int (c1^2 - c2)(N)", "(e^3+9e^2+22e+16)/2", Fraction(a, 2), lambda v: _int(v.segre[2])),
        Expectation(
            "int c1(N) h",
            "e^2 + 5e + 4",
            Fraction(e * e + 5 * e + 4),
            lambda v: _int(v.normal[1] * v.polarization),
        ),
        Expectation("delta_eta", "scroll delta_eta", _expand(terms), _poly),
        Expectation(
            "delta(1/2)",
            "e/2^(e+2) (-e^2 + 3e + 6)",
            Fraction(e, 2 ** (e + 2)) * (-e * e + 3 * e + 6),
            _at(Fraction(1, 2)),
        ),
        Expectation("verdict", "big iff 0 <= e <= 4", "big" if e <= 4 else "not_big", _verdict),
    ]


def expected_veronese(p: dict) -> list[Expectation]:
    return [
        Expectation("degree", "Veronese surface has degree 4", Fraction(4), lambda v: v.degree),
        Expectation("c1(N)", "c1(N) = c1(O(9))", {"h1^1": Fraction(9)}, lambda v: _terms(v.normal[1])),
        Expectation("int c2(N)", "int c2(N) = 30", Fraction(30), lambda v: _int(v.normal[2])),
        Expectation("int s2(N)", "int (c1^2 - c2) = 51", Fraction(51), lambda v: _int(v.segre[2])),
        Expectation("delta(1/2)", "-51/8 + 27/2 - 6 = 9/8", Fraction(9, 8), _at(Fraction(1, 2))),
        Expectation("verdict", "Veronese surface is big", "big", _verdict),
    ]


def expected_veronese_projected(p: dict) -> list[Expectation]:
    return [
        Expectation("c1(N)", "c1(N') = c1(O(7))", {"h1^1": Fraction(7)}, lambda v: _terms(v.normal[1])),
        Expectation("int c2(N)", "int c2(N') = 16", Fraction(16), lambda v: _int(v.normal[2])),
        Expectation("delta_eta", "-33 eta^2 + 28 eta - 4", UniPoly([-4, 28, -33]), _poly),
        Expectation("delta(1/3)", "-33/9 + 28/3 - 4 = 5/3", Fraction(5, 3), _at(Fraction(1, 3))),
        Expectation("verdict", "projected Veronese surface is big", "big", _verdict),
    ]


def expected_segre_p2p1(p: dict) -> list[Expectation]:
    return [
        Expectation(
            "c2(T_Y)",
            "c2(Y) = 3 (x x P1) + 6 (l x y)",
            {_mono(2, 0): Fraction(3), _mono(1, 1): Fraction(6)},
            lambda v: _terms(_rebased_tangent(multiprojective((2, 1)), v.chow)[2]),
        ),
        Expectation(
            "c1(N)", "c1(N) = c1(O(3,4))", {_mono(1, 0): Fraction(3), _mono(0, 1): Fraction(4)},
            lambda v: _terms(v.normal[1]),
        ),
        Expectation(
            "c2(N)",
            "c2(N) = 3 (x x P1) + 6 (l x y)",
            {_mono(2, 0): Fraction(3), _mono(1, 1): Fraction(6)},
            lambda v: _terms(v.normal[2]),
        ),
        Expectation("int c1(N) h^2", "= 10", Fraction(10), lambda v: _int(v.normal[1] * v.polarization**2)),
        Expectation(
            "int (c1^2 - c2) h", "= 24", Fraction(24), lambda v: _int(v.segre[2] * v.polarization)
        ),
        Expectation(
            "int (2 c1 c2 - c1^3)", "= -48", Fraction(-48),
            lambda v: _int(v.normal[1] * v.normal[2] * 2 - v.normal[1] ** 3),
        ),
        Expectation("delta_eta", "48 eta^3 - 72 eta^2 + 30 eta - 3", UniPoly([-3, 30, -72, 48]), _poly),
        Expectation("delta(1/3)", "= 7/9", Fraction(7, 9), _at(Fraction(1, 3))),
        Expectation("delta(1/2)", "= 0", Fraction(0), _at(Fraction(1, 2))),
        Expectation("verdict", "P2 x P1 is big", "big", _verdict),
    ]


def expected_segre_p3p1(p: dict) -> list[Expectation]:
    f = UniPoly([-1, 9, -26, 30, -12])
    tangent = lambda v: _rebased_tangent(multiprojective((3, 1)), v.chow)  # noqa: E731
    return [
        Expectation("c1(Y)", "4 (P x P1) + 2 (P3 x y)", {_mono(1, 0): 4, _mono(0, 1): 2}, lambda v: _terms(tangent(v)[1])),
        Expectation("c2(Y)", "6 (l x P1) + 8 (P x y)", {_mono(2, 0): 6, _mono(1, 1): 8}, lambda v: _terms(tangent(v)[2])),
        Expectation("c3(Y)", "4 (x x P1) + 12 (l x y)", {_mono(3, 0): 4, _mono(2, 1): 12}, lambda v: _terms(tangent(v)[3])),
        Expectation("c4(Y)", "8 (x x y)", {_mono(3, 1): 8}, lambda v: _terms(tangent(v)[4])),
        Expectation("c1(N)", "4 (P x P1) + 6 (P3 x y)", {_mono(1, 0): 4, _mono(0, 1): 6}, lambda v: _terms(v.normal[1])),
        Expectation("c2(N)", "6 (l x P1) + 16 (P x y)", {_mono(2, 0): 6, _mono(1, 1): 16}, lambda v: _terms(v.normal[2])),
        Expectation("c3(N)", "4 (x x P1) + 12 (l x y)", {_mono(3, 0): 4, _mono(2, 1): 12}, lambda v: _terms(v.normal[3])),
        Expectation("delta_eta", "20 eta (-1 + 9 eta - 26 eta^2 + 30 eta^3 - 12 eta^4)", f * UniPoly([0, 20]), _poly),
        Expectation("f(1/2)", "f(1/2) = 0", Fraction(0), lambda v: _poly(v)(Fraction(1, 2)) / 10),
        Expectation("delta(1/2)", "= 0", Fraction(0), _at(Fraction(1, 2))),
        Expectation("f(1/3)", "f(1/3) = 2/27", Fraction(2, 27), lambda v: _poly(v)(Fraction(1, 3)) * Fraction(3, 20)),
        Expectation("delta(1/3)", "(20/3)(2/27) = 40/81", Fraction(40, 81), _at(Fraction(1, 3))),
        Expectation("verdict", "P3 x P1 is big", "big", _verdict),
    ]


def expected_segre_p2p2(p: dict) -> list[Expectation]:
    f = UniPoly([-10, 80, -220, 252, -103])
    tangent = lambda v: _rebased_tangent(multiprojective((2, 2)), v.chow)  # noqa: E731
    return [
        Expectation("degree", "deg Y = 6", Fraction(6), lambda v: v.degree),
        Expectation("c1(Y)", "3 (l x P2) + 3 (P2 x l')", {_mono(1, 0): 3, _mono(0, 1): 3}, lambda v: _terms(tangent(v)[1])),
        Expectation(
            "c2(Y)", "3 (x x P2) + 9 (l x l') + 3 (P2 x y)",
            {_mono(2, 0): 3, _mono(1, 1): 9, _mono(0, 2): 3}, lambda v: _terms(tangent(v)[2]),
        ),
        Expectation("c3(Y)", "9 (l x y) + 9 (x x l')", {_mono(1, 2): 9, _mono(2, 1): 9}, lambda v: _terms(tangent(v)[3])),
        Expectation("c4(Y)", "9 (x x y)", {_mono(2, 2): 9}, lambda v: _terms(tangent(v)[4])),
        Expectation("c1(N)", "6 (l x P2) + 6 (P2 x l')", {_mono(1, 0): 6, _mono(0, 1): 6}, lambda v: _terms(v.normal[1])),
        Expectation(
            "c2(N)", "15 (x x P2) + 27 (l x l') + 15 (P2 x y)",
            {_mono(2, 0): 15, _mono(1, 1): 27, _mono(0, 2): 15}, lambda v: _terms(v.normal[2]),
        ),
        Expectation("c3(N)", "45 (l x y) + 45 (x x l')", {_mono(1, 2): 45, _mono(2, 1): 45}, lambda v: _terms(v.normal[3])),
        Expectation("c4(N)", "36 (x x y)", {_mono(2, 2): 36}, lambda v: _terms(v.normal[4])),
        Expectation("delta_eta", "9 eta^2 (-10 + 80 eta - 220 eta^2 + 252 eta^3 - 103 eta^4)", f * UniPoly([0, 0, 9]), _poly),
        Expectation("f(1/2)", "71.5 - 71.4375 = 1/16", Fraction(1, 16), lambda v: _poly(v)(Fraction(1, 2)) * 4 / 9),
        Expectation("delta(1/2)", "9/4 * 1/16 = 9/64", Fraction(9, 64), _at(Fraction(1, 2))),
        Expectation("verdict", "P2 x P2 is big", "big", _verdict),
    ]


def expected_elliptic_scroll(p: dict) -> list[Expectation]:
    return [
        Expectation("degree", "deg Y = 6", Fraction(6), lambda v: v.degree),
        Expectation("c1(N)", "c1(N) = L^6 x O(4)", {"f": Fraction(18), "sigma": Fraction(4)}, lambda v: _terms(v.normal[1])),
        Expectation("int c2(N)", "int c2(N) = 54", Fraction(54), lambda v: _int(v.normal[2])),
        Expectation("int (c1^2 - c2)(N)", "= 90", Fraction(90), lambda v: _int(v.segre[2])),
        Expectation("int c1(N) h", "= 30", Fraction(30), lambda v: _int(v.normal[1] * v.polarization)),
        Expectation("delta_eta", "eta (-90 eta^2 + 90 eta - 18)", UniPoly([0, -18, 90, -90]), _poly),
        Expectation("delta(1/3)", "(-10 + 30 - 18)/3 = 2/3", Fraction(2, 3), _at(Fraction(1, 3))),
        Expectation("verdict", "elliptic scroll is big (epsilon >= 1/3)", "big", _verdict),
    ]


def expected_decomposable_rank2(p: dict) -> list[Expectation]:
    from .delta import delta1_decomposable, schur_delta1

    factors, L, M = p["factors"], p["L"], p["M"]

    def split_sum(v: VarietyData) -> Fraction:
        return delta1_decomposable(v, _line(v.chow, *L), _line(v.chow, *M))

    def delta_one(v: VarietyData) -> Fraction:
        return delta_at(v, 1)

    # both sides are computed; expected holds the independent route's value
    out = [
        Expectation("delta_1 = sum int L^{y-j} M^j", "split normal bundle, delta at eta = 1", _LazyValue(split_sum), delta_one),
    ]
    y = sum(factors)
    if 4 <= y + 2 <= 7:
        out.append(
            Expectation(
                "delta_1 = Schur form",
                "delta_1 as a Schur polynomial in c1, c2 of E",
                _LazyValue(lambda v: schur_delta1(v.normal, v.k)),
                delta_one,
            )
        )
    # for y = 1 the sum is empty and delta_1 = 0
    if y >= 2 and all(a > 0 for a in L) and all(b > 0 for b in M):
        out.append(Expectation("verdict", "zero loci of ample split rank-2 bundles are big", "big", _verdict))
    return out


def expected_veronese_double_cover(p: dict) -> list[Expectation]:
    n = p["n"]
    base = UniPoly([0, -12, 54, -51])
    return [
        Expectation("delta_eta", "deg(f) times the Veronese delta", base * n, _poly),
        Expectation("delta(1/2)", "n * 9/8", Fraction(9, 8) * n, _at(Fraction(1, 2))),
        Expectation("verdict", "bigness is preserved by finite covers", "big", _verdict),
    ]


class _LazyValue:
    """Expected value that must itself be computed from the variety (cross-route checks)."""

    def __init__(self, fn: Callable[[VarietyData], Any]):
        self.fn = fn

    def resolve(self, v: VarietyData):
        return self.fn(v)


def resolve_expected(expectation: Expectation, v: VarietyData):
    exp = expectation.expected
    if isinstance(exp, _LazyValue):
        return exp.resolve(v)
    return exp


# -- registry -------------------------------------------------------------------

_ENTRIES = [
    CatalogEntry(
        "ci_codim2",
        "codimension-two complete intersection of degrees d1 >= d2 in X of dimension k",
        (
            Param("d1", "int", 2, "larger degree"),
            Param("d2", "int", 1, "smaller degree"),
            Param("k", "int", 4, "dimension of the ambient X"),
            Param("ambient_degree", "int", 1, "degree of X in P^n (1 means X = P^k)"),
        ),
        build_ci_codim2,
        expected_ci_codim2,
        tuple({"d1": a, "d2": b, "k": k} for k in (4, 5) for a in range(1, 7) for b in range(1, a + 1)),
    ),
    CatalogEntry(
        "ci_surface_p5",
        "complete intersection surface of degrees d1 >= d2 >= d3 in P^5",
        (
            Param("d1", "int", 3, "largest degree"),
            Param("d2", "int", 2, "middle degree"),
            Param("d3", "int", 2, "smallest degree"),
        ),
        build_ci_surface_p5,
        expected_ci_surface_p5,
        ({"d1": 3, "d2": 2, "d3": 2}, {"d1": 9, "d2": 2, "d3": 2}),
    ),
    CatalogEntry(
        "ci_curve",
        "complete intersection curve of degrees d1 >= ... >= d_{k-1} in P^k",
        (Param("degrees", "ints", (2, 2, 2), "defining degrees, descending"),),
        build_ci_curve,
        expected_ci_curve,
        tuple({"degrees": d} for d in ((2, 2), (2, 2, 2), (3, 1, 1), (3, 2, 2, 2), (2, 2, 2, 2), (4, 3, 2))),
    ),
    CatalogEntry(
        "hypersurface",
        "smooth hypersurface of degree d in P^k",
        (Param("d", "int", 3, "degree"), Param("k", "int", 4, "ambient dimension")),
        build_hypersurface,
        expected_hypersurface,
        tuple({"d": d, "k": k} for d in (1, 2, 3, 5) for k in (3, 4, 6)),
    ),
    CatalogEntry(
        "scroll",
        "rational normal scroll Y_e = F_e in P^{e+3}",
        (Param("e", "int", 1, "Hirzebruch index, e >= 0"),),
        build_scroll,
        expected_scroll,
        tuple({"e": e} for e in range(9)),
    ),
    CatalogEntry("veronese", "Veronese surface in P^5", (), build_veronese, expected_veronese),
    CatalogEntry(
        "veronese_projected",
        "projection of the Veronese surface to P^4",
        (),
        build_veronese_projected,
        expected_veronese_projected,
    ),
    CatalogEntry("segre_p2p1", "Segre embedding P^2 x P^1 in P^5", (), build_segre_p2p1, expected_segre_p2p1),
    CatalogEntry("segre_p3p1", "Segre embedding P^3 x P^1 in P^7", (), build_segre_p3p1, expected_segre_p3p1),
    CatalogEntry("segre_p2p2", "Segre embedding P^2 x P^2 in P^8", (), build_segre_p2p2, expected_segre_p2p2),
    CatalogEntry(
        "elliptic_scroll",
        "C x P^1 in P^5 for a plane cubic C",
        (),
        build_elliptic_scroll,
        expected_elliptic_scroll,
    ),
    CatalogEntry(
        "decomposable_rank2",
        "zero locus Y of a section of L + M on a product of projective spaces, A = L + M",
        (
            Param("factors", "ints", (3,), "dimensions of the projective factors of Y"),
            Param("L", "ints", (2,), "multidegree of L"),
            Param("M", "ints", (1,), "multidegree of M"),
        ),
        build_decomposable_rank2,
        expected_decomposable_rank2,
        (
            {"factors": (1,), "L": (2,), "M": (1,)},
            {"factors": (2,), "L": (1,), "M": (1,)},
            {"factors": (3,), "L": (2,), "M": (1,)},
            {"factors": (1, 1), "L": (1, 2), "M": (2, 1)},
            {"factors": (2, 1), "L": (1, 1), "M": (2, 3)},
            {"factors": (2, 2), "L": (1, 2), "M": (3, 1)},
            {"factors": (5,), "L": (3,), "M": (2,)},
            {"factors": (3, 2), "L": (1, 1), "M": (1, 2)},
        ),
    ),
    CatalogEntry(
        "veronese_double_cover",
        "preimage of the Veronese surface under a cyclic cover of P^5 of degree n",
        (Param("n", "int", 2, "covering degree"),),
        build_veronese_double_cover,
        expected_veronese_double_cover,
        ({"n": 2}, {"n": 3}),
    ),
]

CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _ENTRIES}


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownEntry(name, difflib.get_close_matches(name, CATALOG, n=3)) from None


def build(name: str, params: Mapping[str, Any] | None = None, adjust: Adjust = None) -> VarietyData:
    return get(name).build(params, adjust)


def names() -> list[str]:
    return sorted(CATALOG)

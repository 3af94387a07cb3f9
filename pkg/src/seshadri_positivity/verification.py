"""Exact-value verification of the catalog plus randomized property suites.

Each catalog entry is rebuilt from its raw data and every expected value is
recomputed and compared by exact equality.  The property suites exercise
identities that should hold for any input (series inversion, Euler sequence,
scaling and covering laws, agreement of closed forms with the general
formula, exact positivity against brute-force sampling).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd as _gcd
from typing import Any, Callable, Iterable

from . import catalog
from . import chern as ch
from .chow import CycleClass, hirzebruch, integrate, multiprojective, power
from .delta import (
    IdentityViolation,
    VarietyData,
    blowup_expansion,
    delta1_decomposable,
    delta_at,
    delta_codim1_poly,
    delta_codim2_poly,
    delta_curve_poly,
    delta_poly,
    delta_surface_poly,
    finite_cover,
    finite_cover_delta,
    scale_delta,
    schur_delta1,
)
from .exactmath import OpenInterval, UniPoly, exists_positive, format_rational
from .seshadri import decide_bigness


@dataclass(frozen=True)
class CheckResult:
    suite: str
    case: str
    label: str
    source: str
    expected: str
    actual: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "case": self.case,
            "check": self.label,
            "source": self.source,
            "expected": self.expected,
            "actual": self.actual,
            "status": "pass" if self.passed else "fail",
        }


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def json_lines(self) -> list[str]:
        from .serialize import dumps

        return [dumps(r.to_json()) for r in self.results]

    def table(self) -> str:
        rows = [("status", "suite", "case", "check", "expected", "actual")]
        for r in self.results:
            rows.append(("PASS" if r.passed else "FAIL", r.suite, r.case, r.label, r.expected, r.actual))
        widths = [min(max(len(row[i]) for row in rows), 48) for i in range(len(rows[0]))]
        lines = []
        for row in rows:
            cells = [c if len(c) <= w else c[: w - 3] + "..." for c, w in zip(row, widths)]
            lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
        passed = len(self.results) - len(self.failures)
        lines.append(f"{passed}/{len(self.results)} checks passed")
        return "\n".join(lines)


def render(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    if isinstance(value, UniPoly):
        return value.pretty()
    if isinstance(value, dict):
        return ", ".join(f"{render(v)}*{k}" for k, v in value.items()) or "0"
    if isinstance(value, CycleClass):
        return str(value)
    return str(value)


def _same(a: Any, b: Any) -> bool:
    if isinstance(a, dict) and isinstance(b, dict):
        norm = lambda d: {k: Fraction(v) for k, v in d.items() if Fraction(v) != 0}  # noqa: E731
        return norm(a) == norm(b)
    return a == b


def _case(params: dict) -> str:
    return ",".join(f"{k}={'/'.join(map(str, v)) if isinstance(v, tuple) else v}" for k, v in sorted(params.items())) or "-"


# -- catalog ------------------------------------------------------------------------


@dataclass(frozen=True)
class Mutation:
    """Overwrite the structure constant ``a * b -> target`` in one entry's ring."""

    entry: str
    a: str
    b: str
    target: str
    value: Fraction

    def adjust(self, pres):
        return pres.with_structure_constant(self.a, self.b, self.target, self.value)


def verify_entry(entry: catalog.CatalogEntry, mutation: Mutation | None = None) -> list[CheckResult]:
    adjust = mutation.adjust if mutation is not None and mutation.entry == entry.name else None
    out = []
    for inst in entry.instances:
        params = entry.resolve(inst)
        case = _case(inst)
        expectations = entry.expected(params)
        try:
            v = entry.build(inst, adjust)
        except Exception as exc:  # noqa: BLE001 - a broken build is a reported failure
            for x in expectations:
                out.append(CheckResult(entry.name, case, x.label, x.source, "<lazy>", f"error: {exc}", False))
            continue
        for x in expectations:
            try:
                actual = x.compute(v)
                expected = catalog.resolve_expected(x, v)
                passed = _same(expected, actual)
                out.append(CheckResult(entry.name, case, x.label, x.source, render(expected), render(actual), passed))
            except Exception as exc:  # noqa: BLE001
                out.append(CheckResult(entry.name, case, x.label, x.source, render(x.expected), f"error: {exc}", False))
    return out


# -- property suites --------------------------------------------------------------


def _summary(suite: str, label: str, source: str, cases: int, failures: list[str]) -> CheckResult:
    actual = f"{cases - len(failures)} of {cases} cases hold"
    if failures:
        actual += f"; first failure: {failures[0]}"
    return CheckResult(suite, f"{cases} cases", label, source, f"{cases} of {cases} cases hold", actual, not failures)


def _random_class(rng: random.Random, pres, codim: int, spread: int = 4) -> CycleClass:
    terms = {n: rng.randint(-spread, spread) for n, c in zip(pres.basis, pres.codims) if c == codim}
    return pres.from_terms(terms)


_SERIES_RINGS = (
    lambda: multiprojective((2, 1)),
    lambda: multiprojective((3,)),
    lambda: multiprojective((2, 2)),
    lambda: multiprojective((1, 1, 1)),
    lambda: hirzebruch(2),
    lambda: catalog.elliptic_ruled_ring(),
    lambda: catalog.hyperplane_ring(5, 7),
)


def series_inverse_suite(rng: random.Random, n: int = 200) -> list[CheckResult]:
    rings = [make() for make in _SERIES_RINGS]
    inv_fail, closed_fail = [], []
    for i in range(n):
        pres = rng.choice(rings)
        classes = [_random_class(rng, pres, j) for j in range(1, pres.dim + 1)]
        c = ch.make_series(ch.CHERN, pres.dim, classes)
        s = ch.segre_from_chern(c)
        product = ch._convolve(c.coeffs, s.coeffs)
        if product != list(ch.trivial_series(pres).coeffs) or ch.chern_from_segre(s) != c:
            inv_fail.append(f"case {i} on {pres.describe()}")
        c1, c2, c3 = c[1], c[2], c[3]
        closed = [
            (1, -c1),
            (2, c1 * c1 - c2),
            (3, -(c1**3) + c1 * c2 * 2 - c3),
        ]
        if any(order <= pres.dim and s[order] != form for order, form in closed):
            closed_fail.append(f"case {i} on {pres.describe()}")
    return [
        _summary("property:series", "s(N) c(N) = 1 up to order y", "inverse of the total Chern class", n, inv_fail),
        _summary("property:series", "s1, s2, s3 closed forms", "-c1, c1^2 - c2, -c1^3 + 2 c1 c2 - c3", n, closed_fail),
    ]


def two_variable_identity_suite(max_y: int = 12) -> list[CheckResult]:
    """``sum_t (-1)^{t+1} C(y,t) (b1+b2)^{y-t} h_t(b1,b2) = sum_{j=1}^{y-1} b1^{y-j} b2^j``.

    ``h_t`` is the complete homogeneous polynomial of degree ``t``; checked
    in ``Q[b1, b2]/(b1^{y+1}, b2^{y+1})``, where all degree-``y`` monomials
    survive.
    """
    failures = []
    for y in range(1, max_y + 1):
        pres = multiprojective((y, y))
        b1, b2 = pres.hyperplane(1), pres.hyperplane(2)
        lhs = pres.zero()
        for t in range(y + 1):
            h_t = pres.zero()
            for i in range(t + 1):
                h_t = h_t + power(b1, i) * power(b2, t - i)
            term = power(b1 + b2, y - t) * h_t * comb(y, t)
            lhs = lhs + (term if t % 2 else -term)
        rhs = pres.zero()
        for j in range(1, y):
            rhs = rhs + power(b1, y - j) * power(b2, j)
        if lhs != rhs:
            failures.append(f"y = {y}")
    return [
        _summary(
            "property:two-variable",
            "alternating binomial identity for split rank-2 Segre classes",
            "polynomial identity in Q[b1, b2], every y <= 12",
            max_y,
            failures,
        )
    ]


def _instances(names: Iterable[str] | None = None) -> Iterable[tuple[str, dict, VarietyData]]:
    for name in names or catalog.names():
        entry = catalog.get(name)
        for inst in entry.instances:
            yield name, inst, entry.build(inst)


def _tangent_for(name: str, v: VarietyData) -> ch.ChernSeries | None:
    if v.chow.kind in ("multiproj", "hirzebruch"):
        return ch.tangent_series(v.chow)
    if name == "elliptic_scroll":
        return catalog.elliptic_tangent(v.chow)
    return None


def _known_euler_characteristic(name: str, inst: dict, v: VarietyData) -> Fraction | None:
    if name == "hypersurface":
        d, k = inst["d"], inst["k"]
        return Fraction((1 - d) ** (k + 1) - 1, d) + k + 1
    if name == "ci_curve":
        degrees = inst["degrees"]
        # 2g - 2 = deg(Y) (sum d_i - k - 1)
        return -v.degree * (sum(degrees) - v.k - 1)
    return None


def euler_consistency_suite() -> list[CheckResult]:
    failures, cases = [], 0
    for name, inst, v in _instances():
        if not v.projective:
            continue
        cases += 1
        h = v.polarization
        ambient = ch.euler_series(v.k, h)
        tangent = _tangent_for(name, v)
        if tangent is not None:
            if ch.whitney(tangent, v.normal).coeffs != ambient.coeffs:
                failures.append(f"{name} {_case(inst)}")
        else:
            # complete intersections: compare the implied top Chern class with
            # the known topological Euler characteristic where one is at hand
            implied = ch._convolve(ambient.coeffs, ch._invert(v.normal.coeffs))
            euler_char = _known_euler_characteristic(name, inst, v)
            if euler_char is None:
                cases -= 1
            elif integrate(implied[v.y]) != euler_char:
                failures.append(f"{name} {_case(inst)}: {integrate(implied[v.y])} != {euler_char}")
    return [
        _summary(
            "property:euler",
            "c(T_Y) c(N) = (1 + h)^(k+1) truncated",
            "Euler sequence on every projective-space entry",
            cases,
            failures,
        )
    ]


def scaling_suite(scales=(1, 2, 3)) -> list[CheckResult]:
    delta_fail, eps_fail, verdict_fail, cover_fail = [], [], [], []
    cases = 0
    for name, inst, v in _instances():
        base = decide_bigness(delta_poly(v), v.seshadri)
        for s in scales:
            cases += 1
            tag = f"{name} {_case(inst)} s={s}"
            try:
                scaled = scale_delta(v, s)
            except IdentityViolation as exc:
                delta_fail.append(str(exc))
                continue
            if scaled.seshadri.value != v.seshadri.value * s or scaled.seshadri.exact != v.seshadri.exact:
                eps_fail.append(tag)
            verdict = decide_bigness(delta_poly(scaled), scaled.seshadri)
            if verdict.name != base.name or (base.name == "big" and verdict.witness != base.witness * s):
                verdict_fail.append(tag)
            cover = finite_cover(v, s)
            if finite_cover_delta(v, s).poly != delta_poly(v).poly * s:
                cover_fail.append(tag)
            elif decide_bigness(delta_poly(cover), cover.seshadri).name != base.name:
                cover_fail.append(tag)
    return [
        _summary("property:scaling", "delta_{s eta}(Y, A^s) = s^(k-2) delta_eta(Y, A)", "polarization scaling", cases, delta_fail),
        _summary("property:scaling", "epsilon(Y, A^s) = s epsilon(Y, A)", "Seshadri constant scaling", cases, eps_fail),
        _summary("property:scaling", "verdict and rescaled witness invariant", "bigness independent of A^s", cases, verdict_fail),
        _summary("property:scaling", "finite cover multiplies delta by deg f, verdict kept", "finite covers", cases, cover_fail),
    ]


def _specialized_forms(v: VarietyData) -> list[tuple[str, Callable]]:
    forms = []
    if v.codim == 1:
        forms.append(("codimension one", delta_codim1_poly))
    if v.y == 1:
        forms.append(("curve", delta_curve_poly))
    if v.y == 2:
        forms.append(("surface", delta_surface_poly))
    if v.codim == 2 and v.k in (4, 5, 6):
        forms.append((f"codimension two, y = {v.y}", delta_codim2_poly))
    return forms


def specialized_forms_suite() -> list[CheckResult]:
    per_form: dict[str, list[str]] = {}
    counts: dict[str, int] = {}
    chain_fail, chain_cases = [], 0
    for name, inst, v in _instances():
        general = delta_poly(v).poly
        for label, fn in _specialized_forms(v):
            counts[label] = counts.get(label, 0) + 1
            if fn(v).poly != general:
                per_form.setdefault(label, []).append(f"{name} {_case(inst)}")
        chain_cases += 1
        if blowup_expansion(v) != general:
            chain_fail.append(f"{name} {_case(inst)}")
    out = [
        _summary("property:closed-forms", f"{label} form equals the general polynomial", "specialized closed form", n, per_form.get(label, []))
        for label, n in sorted(counts.items())
    ]
    out.append(
        _summary(
            "property:closed-forms",
            "sum_t (-1)^t C(k-2,t) eta^t E^{t+2} A*^{k-2-t} equals delta",
            "expansion of (A* - eta E)^{k-2} E^2 on the blow-up",
            chain_cases,
            chain_fail,
        )
    )
    return out


def _partition(rng: random.Random, y: int) -> tuple[int, ...]:
    parts = []
    left = y
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    return tuple(parts)


def schur_suite(rng: random.Random, per_case: int = 12) -> list[CheckResult]:
    out = []
    for k, y in ((4, 2), (5, 3), (6, 4), (7, 5)):
        failures = []
        for _ in range(per_case):
            factors = _partition(rng, y)
            L = tuple(rng.randint(1, 4) for _ in factors)
            M = tuple(rng.randint(1, 4) for _ in factors)
            v = catalog.build("decomposable_rank2", {"factors": factors, "L": L, "M": M})
            pres = v.chow
            d1 = delta_at(v, 1)
            schur = schur_delta1(v.normal, k)
            split = delta1_decomposable(v, pres.line_bundle(L), pres.line_bundle(M))
            if not (d1 == schur == split):
                failures.append(f"factors={factors} L={L} M={M}: {d1}, {schur}, {split}")
        out.append(
            _summary(
                "property:schur",
                f"Schur delta_1 = delta(1) = sum L^(y-j) M^j for (k, y) = ({k}, {y})",
                "rank-2 zero loci with split ample bundles",
                per_case,
                failures,
            )
        )
    return out


def brute_force_positive(p: UniPoly, interval: OpenInterval, steps: int = 1024) -> bool:
    """Is ``p`` positive at one of the interior grid points ``lo + j * width / steps``?

    Signs are evaluated on integers: with ``x = u / w`` the sign of ``p(x)``
    is the sign of ``sum c_i u^i w^(n-i)`` once denominators are cleared.
    """
    if p.is_zero():
        return False
    n = p.degree
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    coeffs = [int(c * den) for c in p.coeffs]
    lo, width = interval.lo, interval.width
    # x_j = (lo.num * width.den * steps + j * width.num * lo.den) / (lo.den * width.den * steps)
    w = lo.denominator * width.denominator * steps
    base = lo.numerator * width.denominator * steps
    inc = width.numerator * lo.denominator
    w_pows = [w**i for i in range(n + 1)]
    for j in range(1, steps):
        u = base + j * inc
        acc = 0
        u_pow = 1
        for i, c in enumerate(coeffs):
            acc += c * u_pow * w_pows[n - i]
            u_pow *= u
        if acc > 0:
            return True
    return False


def positivity_oracle_suite(rng: random.Random, n: int = 1000) -> list[CheckResult]:
    failures = []
    ends = [Fraction(1, 2), Fraction(1, 3), Fraction(1), Fraction(2), Fraction(1, 5)]
    for i in range(n):
        degree = rng.randint(0, 4)
        p = UniPoly([rng.randint(-6, 6) for _ in range(degree + 1)])
        interval = OpenInterval(Fraction(0), rng.choice(ends))
        witness = exists_positive(p, interval)
        brute = brute_force_positive(p, interval)
        if witness is not None and not (witness in interval and p(witness) > 0):
            failures.append(f"bad witness {witness} for {p.pretty('x')} on {interval}")
        elif (witness is not None) != brute:
            failures.append(f"{p.pretty('x')} on (0, {format_rational(interval.hi)})")
    return [
        _summary(
            "property:positivity",
            "exists_positive agrees with sampling at step width/1024",
            "exact Sturm decision against brute force",
            n,
            failures,
        )
    ]


def property_suites(seed: int = 20240229) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    results += series_inverse_suite(rng)
    results += two_variable_identity_suite()
    results += euler_consistency_suite()
    results += scaling_suite()
    results += specialized_forms_suite()
    results += schur_suite(rng)
    results += positivity_oracle_suite(rng)
    return results


def verify_all(
    only: Iterable[str] | None = None,
    mutation: Mutation | None = None,
    properties: bool = True,
    seed: int = 20240229,
) -> Report:
    """Recompute every expected catalog value, then run the property suites.

    ``only`` restricts the run to the named entries and skips the property
    suites.  Results are ordered by entry name.
    """
    names = sorted(only) if only else catalog.names()
    for name in names:
        catalog.get(name)
    report = Report()
    for name in names:
        report.results += verify_entry(catalog.get(name), mutation)
    if properties and not only:
        report.results += property_suites(seed)
    return report

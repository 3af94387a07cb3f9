"""Acceptance checks, one per criterion, each printing a single PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for just the ten lines, or
through pytest, where the lines are written past output capture.
"""

from __future__ import annotations

import contextlib
import io
import sys
from fractions import Fraction as Q

import pytest

from seshadri_positivity import catalog
from seshadri_positivity.cli import main
from seshadri_positivity.delta import delta_at, delta_poly
from seshadri_positivity.exactmath import UniPoly
from seshadri_positivity.seshadri import Big, LowerBound, NotBig, decide_bigness
from seshadri_positivity.verification import property_suites

ETA = UniPoly([0, 1])


def verdict_of(v):
    return decide_bigness(delta_poly(v), v.seshadri)


def veronese() -> list[str]:
    v = catalog.build("veronese")
    errors = []
    if delta_at(v, Q(1, 2)) != Q(9, 8):
        errors.append(f"delta(1/2) = {delta_at(v, Q(1, 2))}")
    if not isinstance(verdict_of(v), Big):
        errors.append("verdict is not big")
    return errors


def projected_veronese() -> list[str]:
    v = catalog.build("veronese_projected")
    errors = []
    if delta_poly(v).poly != UniPoly([-4, 28, -33]):
        errors.append(f"delta = {delta_poly(v).poly.pretty()}")
    if delta_at(v, Q(1, 3)) != Q(5, 3):
        errors.append(f"delta(1/3) = {delta_at(v, Q(1, 3))}")
    return errors


def segre_p2p1() -> list[str]:
    v = catalog.build("segre_p2p1")
    p = delta_poly(v).poly
    errors = []
    if p != UniPoly([-3, 30, -72, 48]):
        errors.append(f"delta = {p.pretty()}")
    if p(Q(1, 3)) != Q(7, 9) or p(Q(1, 2)) != 0:
        errors.append(f"values {p(Q(1, 3))}, {p(Q(1, 2))}")
    return errors


def segre_p3p1() -> list[str]:
    v = catalog.build("segre_p3p1")
    p = delta_poly(v).poly
    errors = []
    if p != ETA * UniPoly([-1, 9, -26, 30, -12]) * 20:
        errors.append(f"delta = {p.pretty()}")
    if p(Q(1, 2)) != 0 or p(Q(1, 3)) != Q(40, 81):
        errors.append(f"values {p(Q(1, 2))}, {p(Q(1, 3))}")
    return errors


def segre_p2p2() -> list[str]:
    v = catalog.build("segre_p2p2")
    inner = UniPoly([-10, 80, -220, 252, -103])
    errors = []
    if delta_poly(v).poly != UniPoly.monomial(2, 9) * inner:
        errors.append(f"delta = {delta_poly(v).poly.pretty()}")
    if inner(Q(1, 2)) != Q(1, 16):
        errors.append(f"f(1/2) = {inner(Q(1, 2))}")
    if not isinstance(verdict_of(v), Big):
        errors.append("verdict is not big")
    return errors


def scrolls() -> list[str]:
    errors = []
    for e in range(9):
        v = catalog.build("scroll", {"e": e})
        expected = Q(e, 2 ** (e + 2)) * (-e * e + 3 * e + 6)
        if delta_at(v, Q(1, 2)) != expected:
            errors.append(f"e={e}: delta(1/2) = {delta_at(v, Q(1, 2))}, want {expected}")
        want = Big if e <= 4 else NotBig
        if not isinstance(verdict_of(v), want):
            errors.append(f"e={e}: verdict {verdict_of(v).name}")
    return errors


def elliptic_scroll() -> list[str]:
    v = catalog.build("elliptic_scroll")
    errors = []
    if delta_poly(v).poly != ETA * UniPoly([-18, 90, -90]):
        errors.append(f"delta = {delta_poly(v).poly.pretty()}")
    if delta_at(v, Q(1, 3)) != Q(2, 3):
        errors.append(f"delta(1/3) = {delta_at(v, Q(1, 3))}")
    if v.seshadri != LowerBound(Q(1, 3)) or not isinstance(verdict_of(v), Big):
        errors.append("verdict is not big under the 1/3 lower bound")
    return errors


def complete_intersections() -> list[str]:
    errors = []
    for d1 in range(1, 7):
        for d2 in range(1, d1 + 1):
            d, r = d1 * d2, Q(d2, d1)
            for k, closed, lo in ((4, d * (r - r * r), Q(1, 3 * d1)), (5, d * r * (r - 1) ** 2, Q(1, 4 * d1))):
                v = catalog.build("ci_codim2", {"d1": d1, "d2": d2, "k": k})
                if delta_at(v, Q(1, d1)) != closed:
                    errors.append(f"k={k} ({d1},{d2}): delta(1/d1) = {delta_at(v, Q(1, d1))}, want {closed}")
                result = verdict_of(v)
                if not isinstance(result, Big):
                    errors.append(f"k={k} ({d1},{d2}): verdict {result.name}")
                elif d1 == d2 and not lo < result.witness < Q(1, d1):
                    errors.append(f"k={k} ({d1},{d2}): witness {result.witness} outside ({lo}, 1/{d1})")
    v = catalog.build("ci_surface_p5", {"d1": 3, "d2": 2, "d3": 2})
    f = UniPoly([-3, 21, -33])
    if delta_poly(v).poly != UniPoly([0, 12]) * f or f(Q(1, 3)) != Q(1, 3) or not isinstance(verdict_of(v), Big):
        errors.append("(3,2,2) surface")
    v = catalog.build("ci_surface_p5", {"d1": 9, "d2": 2, "d3": 2})
    f = delta_poly(v).poly // UniPoly([0, 36])
    c, b, a = f.coeffs
    if f != UniPoly([-3, 39, -129]) or b * b - 4 * a * c != -27 or not isinstance(verdict_of(v), NotBig):
        errors.append("(9,2,2) surface")
    return errors


def property_suites_pass() -> list[str]:
    return [f"{r.suite} {r.case}: {r.label}" for r in property_suites() if not r.passed]


def verify_command() -> list[str]:
    errors = []
    with contextlib.redirect_stdout(io.StringIO()):
        if main(["verify-paper"]) != 0:
            errors.append("pristine verify-paper exited nonzero")
        for name in catalog.names():
            v = catalog.build(name)
            for (a, b), terms in v.chow.structure_constants().items():
                for target, value in terms.items():
                    argv = ["verify-paper", "--only", name, "--mutate", name, a, b, target, str(value + 1)]
                    if main(argv) == 0:
                        errors.append(f"{name}: {a}*{b} -> {target} mutation went unnoticed")
    return errors


CRITERIA = [
    (1, "Veronese surface: delta(1/2) = 9/8, big", veronese),
    (2, "projected Veronese: -33 eta^2 + 28 eta - 4, delta(1/3) = 5/3", projected_veronese),
    (3, "P2 x P1: 48 eta^3 - 72 eta^2 + 30 eta - 3, values 7/9 and 0", segre_p2p1),
    (4, "P3 x P1: 20 eta (-1 + 9 eta - ...), values 0 and 40/81", segre_p3p1),
    (5, "P2 x P2: 9 eta^2 f(eta), f(1/2) = 1/16, big", segre_p2p2),
    (6, "scrolls: delta(1/2) for e = 0..8, big exactly for e <= 4", scrolls),
    (7, "elliptic scroll: eta (-90 eta^2 + 90 eta - 18), 2/3, big", elliptic_scroll),
    (8, "complete intersection families and the (3,2,2), (9,2,2) surfaces", complete_intersections),
    (9, "property suites", property_suites_pass),
    (10, "verify-paper: pristine exit 0, every single mutation nonzero", verify_command),
]


def report_line(number: int, title: str, errors: list[str]) -> str:
    status = "PASS" if not errors else "FAIL"
    detail = "" if not errors else f"  ({'; '.join(errors[:3])})"
    return f"criterion {number:>2}: {status}  {title}{detail}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion-{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    errors = check()
    with capsys.disabled():
        print("\n" + report_line(number, title, errors))
    assert not errors


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        errors = check()
        failed += bool(errors)
        print(report_line(number, title, errors))
    sys.exit(1 if failed else 0)

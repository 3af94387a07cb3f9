from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from seshadri_positivity.exactmath import (
    OpenInterval,
    UniPoly,
    ZeroPolynomial,
    as_rational,
    exists_positive,
    format_rational,
    isolate_roots,
    poly_gcd,
    sign_scan,
    squarefree_part,
    sturm_count,
)

X = sympy.Symbol("x")

small_ints = st.integers(min_value=-9, max_value=9)
polys = st.lists(small_ints, min_size=1, max_size=7).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=12)


@st.composite
def intervals(draw):
    a = draw(rationals)
    b = draw(rationals.filter(lambda b: b != a))
    return OpenInterval(min(a, b), max(a, b))


def to_sympy(p: UniPoly) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], X, domain="QQ")


def sympy_count_open(p: UniPoly, interval: OpenInterval) -> int:
    lo = sympy.Rational(interval.lo.numerator, interval.lo.denominator)
    hi = sympy.Rational(interval.hi.numerator, interval.hi.denominator)
    roots = set(sympy.real_roots(to_sympy(p)))
    return sum(1 for r in roots if lo < r < hi)


def sympy_positive_somewhere(p: UniPoly, interval: OpenInterval) -> bool:
    """Decide positivity on ``interval`` by sampling between sympy's exact real roots."""
    lo = sympy.Rational(interval.lo.numerator, interval.lo.denominator)
    hi = sympy.Rational(interval.hi.numerator, interval.hi.denominator)
    roots = sorted((r for r in set(sympy.real_roots(to_sympy(p))) if lo < r < hi), key=lambda r: r.evalf(60))
    points = [lo, *roots, hi]
    for u, v in zip(points, points[1:]):
        q = sympy.Rational((u.evalf(60) + v.evalf(60)) / 2)
        assert u < q < v
        if to_sympy(p).eval(q) > 0:
            return True
    return False


class TestRational:
    def test_parses_strings_and_ints(self):
        assert as_rational("3/6") == Q(1, 2)
        assert as_rational(" -7 ") == -7
        assert as_rational(Q(2, 4)) == Q(1, 2)

    @pytest.mark.parametrize("bad", [0.5, True, "1.5", "1e3", None])
    def test_rejects_inexact_input(self, bad):
        with pytest.raises((TypeError, ValueError)):
            as_rational(bad)

    def test_lowest_terms_and_formatting(self):
        q = Q(10, -4)
        assert (q.numerator, q.denominator) == (-5, 2)
        assert format_rational(q) == "-5/2"
        assert format_rational(Q(6, 3)) == "2"


class TestEvaluate:
    def test_pol2_at_one_third(self):
        assert UniPoly([-3, 21, -33])(Q(1, 3)) == Q(1, 3)

    def test_zero_polynomial(self):
        assert UniPoly()(Q(7, 2)) == 0
        assert UniPoly().degree == -1

    def test_segre_threefold_root(self):
        assert UniPoly([-3, 30, -72, 48])(Q(1, 2)) == 0

    @given(polys, polys, rationals)
    def test_evaluation_is_a_ring_homomorphism(self, p, q, x):
        assert (p + q)(x) == p(x) + q(x)
        assert (p * q)(x) == p(x) * q(x)
        assert (p - q)(x) == p(x) - q(x)

    @given(polys, nonzero_polys)
    def test_division_matches_sympy(self, p, q):
        quo, rem = divmod(p, q)
        assert quo * q + rem == p
        assert rem.degree < q.degree
        sq, sr = sympy.div(to_sympy(p), to_sympy(q))
        assert to_sympy(quo) == sq and to_sympy(rem) == sr

    @given(nonzero_polys, nonzero_polys)
    def test_gcd_matches_sympy(self, p, q):
        g = poly_gcd(p, q)
        assert to_sympy(g) == sympy.gcd(to_sympy(p), to_sympy(q)).monic()

    def test_leading_coefficient_never_zero(self):
        p = UniPoly([1, 2, 0, 0])
        assert p.degree == 1 and p.leading == 2

    def test_scale_argument(self):
        p = UniPoly([1, 2, 3])
        assert p.scale_argument(2) == UniPoly([1, 4, 12])

    def test_pretty(self):
        assert UniPoly([-3, 30, -72, 48]).pretty() == "48*eta^3 - 72*eta^2 + 30*eta - 3"
        assert UniPoly().pretty() == "0"


class TestSturm:
    def test_negative_discriminant_has_no_roots(self):
        assert sturm_count(UniPoly([-3, 39, -129]), OpenInterval(Q(0), Q(1, 2))) == 0

    def test_sqrt_two(self):
        assert sturm_count(UniPoly([-2, 0, 1]), OpenInterval(Q(0), Q(2))) == 1

    def test_pol2_has_two_roots_in_half_interval(self):
        # the roots (21 +- sqrt 45)/66 both lie in (0, 1/2)
        assert sturm_count(UniPoly([-3, 21, -33]), OpenInterval(Q(0), Q(1, 2))) == 2

    def test_zero_polynomial_raises(self):
        with pytest.raises(ZeroPolynomial):
            sturm_count(UniPoly(), OpenInterval(Q(0), Q(1)))

    def test_multiple_roots_counted_once(self):
        p = UniPoly([-1, 4]) ** 2 * UniPoly([-1, 1]) ** 3
        assert sturm_count(p, OpenInterval(Q(0), Q(2))) == 2
        assert squarefree_part(p).degree == 2

    def test_roots_at_endpoints_excluded(self):
        p = UniPoly([0, -1, 1])  # roots 0 and 1
        assert sturm_count(p, OpenInterval(Q(0), Q(1))) == 0
        assert sturm_count(p, OpenInterval(Q(-1), Q(1))) == 1

    @settings(max_examples=150, deadline=None)
    @given(nonzero_polys, intervals())
    def test_count_matches_sympy(self, p, interval):
        assert sturm_count(p, interval) == sympy_count_open(p, interval)

    @settings(max_examples=150, deadline=None)
    @given(
        st.lists(st.integers(min_value=-40, max_value=40), min_size=1, max_size=6, unique=True),
        st.integers(min_value=1, max_value=3),
        intervals(),
    )
    def test_count_matches_sign_change_bisection(self, root_numerators, lead, interval):
        # roots are multiples of 1/10, so sign changes on a 1/20 grid see every root
        roots = [Q(n, 10) for n in root_numerators]
        p = UniPoly([lead])
        for r in roots:
            p = p * UniPoly([-r, 1])
        assert sturm_count(p, interval) == _sign_change_oracle(p, interval)

    @settings(max_examples=100, deadline=None)
    @given(nonzero_polys, intervals())
    def test_isolating_brackets(self, p, interval):
        brackets = isolate_roots(p, interval)
        assert len(brackets) == sturm_count(p, interval)
        for b in brackets:
            assert interval.lo < b.lo <= b.hi < interval.hi
            assert b.hi - b.lo <= interval.width / 1024
            if b.exact:
                assert p(b.lo) == 0
            else:
                assert sturm_count(p, OpenInterval(b.lo, b.hi)) == 1
        for left, right in zip(brackets, brackets[1:]):
            assert left.hi < right.lo


def _sign_change_oracle(p: UniPoly, interval: OpenInterval) -> int:
    """Distinct roots inside ``interval`` for a square-free ``p`` whose roots lie on the 1/10 grid."""
    q = squarefree_part(p)
    step = Q(1, 20)
    grid = []
    x = (interval.lo // step + 1) * step
    while x < interval.hi:
        grid.append(x)
        x += step
    points = [interval.lo] + grid + [interval.hi]
    count = sum(1 for g in grid if q(g) == 0)
    for a, b in zip(points, points[1:]):
        # strictly between grid points a simple root shows up as a sign change
        if q(a) != 0 and q(b) != 0 and (q(a) > 0) != (q(b) > 0):
            count += 1
    return count


class TestExistsPositive:
    def test_pol2_is_positive_somewhere(self):
        p = UniPoly([-3, 21, -33])
        w = exists_positive(p, OpenInterval(Q(0), Q(1, 2)))
        assert w is not None and p(w) > 0 and 0 < w < Q(1, 2)

    def test_negative_definite_quadratic(self):
        assert exists_positive(UniPoly([-3, 39, -129]), OpenInterval(Q(0), Q(1, 2))) is None

    def test_segre_threefold(self):
        p = UniPoly([-3, 30, -72, 48])
        w = exists_positive(p, OpenInterval(Q(0), Q(1, 2)))
        assert w is not None and p(w) > 0
        assert p(Q(1, 3)) == Q(7, 9)

    def test_zero_polynomial_has_no_witness(self):
        assert exists_positive(UniPoly(), OpenInterval(Q(0), Q(1))) is None

    def test_positivity_only_at_endpoint_does_not_count(self):
        # -(x - 1)^2 touches 0 at x = 1 and p(2) < 0: nothing positive inside (0, 1)
        assert exists_positive(UniPoly([-1, 2, -1]), OpenInterval(Q(0), Q(1))) is None
        # x is zero at the open end 0 and positive inside
        assert exists_positive(UniPoly([0, 1]), OpenInterval(Q(0), Q(1))) == Q(1, 2)

    def test_double_root_inside(self):
        # (x - 1/2)^2 is positive everywhere except at 1/2
        p = UniPoly([-Q(1, 2), 1]) ** 2
        w = exists_positive(p, OpenInterval(Q(0), Q(1)))
        assert w is not None and p(w) > 0

    def test_deterministic(self):
        p = UniPoly([-3, 21, -33])
        interval = OpenInterval(Q(0), Q(1, 2))
        assert exists_positive(p, interval) == exists_positive(p, interval)

    @settings(max_examples=150, deadline=None)
    @given(nonzero_polys, intervals())
    def test_agrees_with_sympy_root_isolation(self, p, interval):
        w = exists_positive(p, interval)
        assert (w is not None) == sympy_positive_somewhere(p, interval)
        if w is not None:
            assert w in interval and p(w) > 0

    def test_sign_scan_segments_alternate_at_simple_roots(self):
        scan = sign_scan(UniPoly([-3, 21, -33]), OpenInterval(Q(0), Q(1, 2)))
        assert [s.sign for s in scan.segments] == [-1, 1, -1]
        assert scan.summary()["roots_inside"] == 2

    def test_interval_rejects_empty(self):
        with pytest.raises(ValueError):
            OpenInterval(Q(1), Q(1))

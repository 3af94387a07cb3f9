from fractions import Fraction as Q
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from seshadri_positivity.chern import (
    KindMismatch,
    NonInvertible,
    UnsupportedPresentation,
    chern_from_segre,
    euler_series,
    line_bundle_series,
    make_series,
    normal_from_euler,
    segre_from_chern,
    tangent_series,
    trivial_series,
    whitney,
)
from seshadri_positivity.chow import PresentationMismatch, hirzebruch, integrate, multiprojective, table

P2P1 = multiprojective((2, 1))
P4 = multiprojective((4,))


def hyperplane_power_ring(y: int):
    basis = [("1", 0)] + [(f"H{i}", i) for i in range(1, y + 1)]
    products = {}
    for i in range(1, y + 1):
        for j in range(i, y + 1 - i):
            products[(f"H{i}", f"H{j}")] = {f"H{i + j}": 1}
    return table(y, basis, products, f"H{y}")


def general_series(ring, values):
    """Chern series on the single-generator ring with c_i = values[i-1] H^i."""
    return make_series("chern", len(values), [ring.basis_class(f"H{i}", v) for i, v in enumerate(values, 1)])


class TestSegreRecurrence:
    def test_line_bundle_powers(self):
        c1 = P2P1.line_bundle((3, 4))
        s = segre_from_chern(line_bundle_series(c1))
        for j in range(P2P1.dim + 1):
            assert s[j] == (c1 ** j) * (-1) ** j

    def test_rank_two_low_orders(self):
        ring = hyperplane_power_ring(4)
        c = general_series(ring, [5, 7])
        s = segre_from_chern(c)
        c1, c2 = c[1], c[2]
        assert s[1] == -c1
        assert s[2] == c1 * c1 - c2
        assert s[3] == c1 * c2 * 2 - c1 ** 3

    def test_order_four_formula(self):
        ring = hyperplane_power_ring(4)
        c = general_series(ring, [2, -3, 5, 7])
        c1, c2, c3, c4 = c[1], c[2], c[3], c[4]
        expected = c1 * c1 * c2 * (-3) + c1 ** 4 + c2 * c2 + c1 * c3 * 2 - c4
        assert segre_from_chern(c)[4] == expected

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=6))
    def test_matches_sympy_series_inverse(self, values):
        y = len(values)
        ring = hyperplane_power_ring(y)
        s = segre_from_chern(general_series(ring, values))
        t = sympy.Symbol("t")
        c_t = 1 + sum(v * t ** i for i, v in enumerate(values, 1))
        inverse = sympy.series(1 / c_t, t, 0, y + 1).removeO()
        for i in range(y + 1):
            expected = inverse.coeff(t, i)
            assert s[i].terms().get(ring.basis[i], 0) == Q(int(expected))

    def test_round_trip(self):
        c = tangent_series(multiprojective((2, 2)))
        assert chern_from_segre(segre_from_chern(c)) == c

    def test_trivial_series_inverts_to_itself(self):
        s = trivial_series(P2P1, kind="segre")
        assert chern_from_segre(s) == trivial_series(P2P1)

    def test_rank_one_segre_inverts_to_line_bundle(self):
        c1 = P2P1.line_bundle((1, 2))
        s = line_bundle_series(c1, kind="segre")
        assert s[1] == -c1
        assert chern_from_segre(s) == line_bundle_series(c1)

    def test_kind_checks(self):
        c = trivial_series(P2P1)
        with pytest.raises(KindMismatch):
            chern_from_segre(c)
        with pytest.raises(KindMismatch):
            segre_from_chern(segre_from_chern(c))


class TestWhitney:
    def test_segre_of_split_sum(self):
        ring = multiprojective((2, 2))
        L, M = ring.line_bundle((1, 2)), ring.line_bundle((3, 1))
        s = whitney(line_bundle_series(L, "segre"), line_bundle_series(M, "segre"))
        for t in range(ring.dim + 1):
            expected = ring.zero()
            for i in range(t + 1):
                expected = expected + (L ** i) * (M ** (t - i))
            assert s[t] == expected * (-1) ** t
        assert s.rank == 2

    def test_trivial_is_identity(self):
        c = tangent_series(P2P1)
        assert whitney(c, trivial_series(P2P1)).coeffs == c.coeffs

    def test_mixed_line_bundles_on_segre_threefold(self):
        a = line_bundle_series(P2P1.line_bundle((3, 0)))
        b = line_bundle_series(P2P1.line_bundle((0, 2)))
        assert whitney(a, b)[2].terms() == {"h1^1*h2^1": 6}

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=-4, max_value=4), min_size=9, max_size=9))
    def test_commutative_and_associative(self, v):
        ring = hyperplane_power_ring(3)
        a, b, c = (general_series(ring, v[i : i + 3]) for i in (0, 3, 6))
        assert whitney(a, b) == whitney(b, a)
        assert whitney(whitney(a, b), c) == whitney(a, whitney(b, c))

    def test_rejects_mixed_inputs(self):
        with pytest.raises(KindMismatch):
            whitney(trivial_series(P2P1), trivial_series(P2P1, kind="segre"))
        with pytest.raises(PresentationMismatch):
            whitney(trivial_series(P2P1), trivial_series(P4))


class TestEulerSolver:
    def test_veronese(self):
        ring = multiprojective((2,))
        normal = normal_from_euler(5, ring.line_bundle((2,)), tangent_series(ring))
        assert normal[1] == ring.line_bundle((9,))
        assert integrate(normal[2]) == 30
        assert normal.rank == 3

    def test_segre_p2p1(self):
        normal = normal_from_euler(5, P2P1.line_bundle((1, 1)), tangent_series(P2P1))
        assert normal[1] == P2P1.line_bundle((3, 4))
        assert normal[2].terms() == {"h1^2*h2^0": 3, "h1^1*h2^1": 6}

    def test_segre_p2p2(self):
        ring = multiprojective((2, 2))
        normal = normal_from_euler(8, ring.line_bundle((1, 1)), tangent_series(ring))
        assert normal[1] == ring.line_bundle((6, 6))
        assert normal[2].terms() == {"h1^2*h2^0": 15, "h1^1*h2^1": 27, "h1^0*h2^2": 15}
        assert normal[3].terms() == {"h1^2*h2^1": 45, "h1^1*h2^2": 45}
        assert normal[4].terms() == {"h1^2*h2^2": 36}

    @pytest.mark.parametrize("e", range(5))
    def test_scroll_sums_back_to_ambient(self, e):
        ring = hirzebruch(e)
        h = ring.from_terms({"C0": 1, "F": e + 1})
        normal = normal_from_euler(e + 3, h, tangent_series(ring))
        assert whitney(tangent_series(ring), normal) == euler_series(e + 3, h)

    def test_euler_series_binomials(self):
        h = P4.line_bundle((1,))
        series = euler_series(6, h)
        for i in range(5):
            assert series[i] == (h ** i) * comb(7, i)

    def test_rejects_bad_input(self):
        h = P2P1.line_bundle((1, 1))
        with pytest.raises(ValueError):
            normal_from_euler(3, h, tangent_series(P2P1))
        with pytest.raises(KindMismatch):
            normal_from_euler(5, h, segre_from_chern(tangent_series(P2P1)))
        with pytest.raises(ValueError):
            normal_from_euler(5, h * h, tangent_series(P2P1))

    def test_series_must_start_with_unit(self):
        with pytest.raises(NonInvertible):
            type(trivial_series(P2P1))("chern", 1, (P2P1.zero(),) * 4)


class TestTangent:
    def test_p2p1(self):
        c = tangent_series(P2P1)
        assert c[1] == P2P1.line_bundle((3, 2))
        assert c[2].terms() == {"h1^2*h2^0": 3, "h1^1*h2^1": 6}

    @pytest.mark.parametrize("e", range(6))
    def test_hirzebruch_euler_characteristic(self, e):
        assert integrate(tangent_series(hirzebruch(e))[2]) == 4

    def test_p3p1(self):
        ring = multiprojective((3, 1))
        c = tangent_series(ring)
        assert c[1] == ring.line_bundle((4, 2))
        assert c[4].terms() == {"h1^3*h2^1": 8}

    def test_table_needs_explicit_tangent(self):
        with pytest.raises(UnsupportedPresentation):
            tangent_series(hyperplane_power_ring(2))

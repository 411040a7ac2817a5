from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfbounds.complex import f_vector, join
from mfbounds.constructions import construct_S, construct_S_idn, stacked_sphere
from mfbounds.errors import BadParams, DegreeTooHigh, NotSymmetric
from mfbounds.polyvec import (
    P,
    SymPoly,
    basis_B,
    binomial,
    f_to_h,
    g_expand,
    h_to_f,
    hierarchy_expand,
    join_expand,
    lift_g,
    pair_identity_residual,
    qr,
    reconstruct,
)

from zoo import complexes, feasible_ns


def ones(k):
    return SymPoly.ones(k)


class TestBinomialAndQR:
    def test_binomial_matches_math(self):
        import math

        for n in range(0, 25):
            for k in range(-1, n + 2):
                assert binomial(n, k) == (math.comb(n, k) if 0 <= k <= n else 0)

    @given(st.integers(0, 60), st.integers(1, 20))
    def test_qr_range(self, d, i):
        q, r = qr(d, i)
        assert d + 1 == q * i + r and 1 <= r <= i and q >= 0

    def test_qr_divisible_takes_r_equal_i(self):
        assert qr(3, 2) == (1, 2) and qr(2, 1) == (2, 1) and qr(3, 4) == (0, 4)


class TestTransforms:
    def test_triangle(self):
        assert f_to_h((1, 3, 3)) == (1, 1, 1)

    def test_octahedron(self):
        assert f_to_h((1, 6, 12, 8)) == (1, 3, 3, 1)

    def test_s24(self):
        assert f_to_h((1, 8, 27, 48, 45, 18)) == (1, 3, 5, 5, 3, 1)

    def test_rejects_bad_head(self):
        with pytest.raises(BadParams):
            f_to_h((2, 3))

    @given(st.lists(st.integers(-50, 50), max_size=8).map(lambda t: [1] + t))
    def test_round_trip(self, f):
        assert list(h_to_f(f_to_h(f))) == f

    @settings(max_examples=40)
    @given(complexes, complexes)
    def test_h_polynomial_of_join_multiplies(self, a, b):
        ha = SymPoly.of(f_to_h(f_vector(a)))
        hb = SymPoly.of(f_to_h(f_vector(b)))
        assert SymPoly.of(f_to_h(f_vector(join(a, b)))) == ha * hb

    @pytest.mark.parametrize("d", range(0, 7))
    def test_dehn_sommerville_on_constructions(self, d):
        for i in range(1, d + 2):
            assert f_to_h(f_vector(construct_S(i, d))).is_symmetric()
            for n in feasible_ns(i, d, 3):
                assert f_to_h(f_vector(construct_S_idn(i, d, n, validate=False))).is_symmetric()


class TestPAndBasis:
    def test_p42(self):
        assert P(4, 2).coeffs == (1, 3, 5, 5, 3, 1)

    @pytest.mark.parametrize("d", range(0, 8))
    def test_p_top(self, d):
        assert P(d, d + 1) == ones(d + 1)

    def test_p_minus_one(self):
        assert P(-1, 3).coeffs == (1,)

    def test_basis_21(self):
        assert basis_B(2, 1) == [ones(1) ** 3, ones(1).shift(1)]

    @pytest.mark.parametrize("bad", [(-2, 1), (1, 0)])
    def test_bad_params(self, bad):
        with pytest.raises(BadParams):
            P(*bad)

    @given(st.integers(-1, 12), st.integers(1, 13))
    def test_basis_elements_symmetric(self, d, i):
        for b in basis_B(d, i):
            assert b.is_symmetric(d + 1)


class TestGExpand:
    def test_octahedron_gamma(self):
        assert g_expand((1, 3, 3, 1), 2, 1) == (1, 0)

    def test_s24(self):
        assert g_expand((1, 3, 5, 5, 3, 1), 4, 2) == (1, 0, 0)

    def test_octahedron_classical(self):
        assert g_expand((1, 3, 3, 1), 2, 3) == (1, 2)

    @pytest.mark.parametrize("d", range(0, 9))
    def test_simplex_boundary(self, d):
        g = g_expand(ones(d + 1), d, d + 1)
        assert g == (1,) + (0,) * ((d + 1) // 2)

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            g_expand((1, 2, 3), 1, 1)

    def test_degree_too_high(self):
        with pytest.raises(DegreeTooHigh):
            g_expand((1, 1, 1, 1), 1, 1)

    def test_rational_input_stays_exact(self):
        g = g_expand((Fraction(1, 2), Fraction(1), Fraction(1, 2)), 1, 1)
        assert g == (Fraction(1, 2), 0)

    @given(st.integers(0, 11), st.integers(1, 12), st.data())
    def test_reconstruction(self, d, i, data):
        m = (d + 1) // 2 + 1
        g = data.draw(st.lists(st.integers(-20, 20), min_size=m, max_size=m))
        h = reconstruct(g, d, i)
        assert g_expand(h, d, i) == tuple(g)


class TestPairIdentity:
    @pytest.mark.parametrize("a", range(1, 13))
    def test_exact(self, a):
        for b in range(1, a + 1):
            assert pair_identity_residual(a, b).is_zero()

    def test_rejects_bad_order(self):
        with pytest.raises(BadParams):
            pair_identity_residual(1, 2)


class TestHierarchy:
    def test_21(self):
        assert hierarchy_expand(2, 1) == (1, 1)

    def test_32(self):
        assert hierarchy_expand(3, 2) == (1, 0, 1)

    @pytest.mark.parametrize("d", range(0, 8))
    def test_trivial_when_i_exceeds(self, d):
        assert hierarchy_expand(d, d + 1) == (1,) + (0,) * ((d + 1) // 2)

    @pytest.mark.parametrize("d", range(0, 12))
    def test_nonnegative_and_exact(self, d):
        for i in range(1, d + 1):
            coeffs = hierarchy_expand(d, i)
            assert min(coeffs) >= 0
            assert reconstruct(coeffs, d, i + 1) == P(d, i)

    @settings(max_examples=60)
    @given(st.integers(0, 11), st.data())
    def test_lift_is_transitive(self, d, data):
        i = data.draw(st.integers(1, d + 1))
        m = (d + 1) // 2 + 1
        g = data.draw(st.lists(st.integers(0, 30), min_size=m, max_size=m))
        h = reconstruct(g, d, i)
        lifted = lift_g(g, d, i)
        assert min(lifted) >= 0
        assert lifted == g_expand(h, d, i + 1)
        # composing single steps gives the expansion at every higher level
        cur = list(g)
        for k in range(i, d + 1):
            cur = lift_g(cur, d, k)
            assert tuple(cur) == g_expand(h, d, k + 1)


class TestJoinPoly:
    def test_222(self):
        assert join_expand(2, 2, 2) == (1, 1, 0, 0)

    def test_112_trivial(self):
        assert join_expand(1, 1, 2) == (1, 0, 0)

    def test_202(self):
        assert join_expand(2, 0, 2) == (1, 1, 0)

    @pytest.mark.parametrize("i", range(1, 12))
    def test_nonnegative_and_exact(self, i):
        for d in range(0, 9):
            for d2 in range(0, 9):
                coeffs = join_expand(d, d2, i)
                assert min(coeffs) >= 0
                assert reconstruct(coeffs, d + d2 + 1, i) == P(d, i) * P(d2, i)


class TestExtremalGVectors:
    @pytest.mark.parametrize("d", range(1, 7))
    def test_g_vanishes_beyond_one(self, d):
        for i in range(1, d + 2):
            for n in feasible_ns(i, d, 5):
                cx = construct_S_idn(i, d, n, validate=False)
                g = g_expand(f_to_h(f_vector(cx)), d, i)
                assert all(x == 0 for x in g[2:]), (i, d, n, g)

    @pytest.mark.parametrize("d", range(3, 7))
    def test_classical_g2(self, d):
        for n in range(d + 3, d + 8):
            cx = construct_S_idn(d - 1, d, n, validate=False)
            g = g_expand(f_to_h(f_vector(cx)), d, d + 1)
            assert g[2] == 1 and all(x == 0 for x in g[3:])

    @pytest.mark.parametrize("d", range(3, 7))
    def test_stacked_g2_zero(self, d):
        for n in range(d + 2, d + 7):
            h = f_to_h(f_vector(stacked_sphere(d, n)))
            # independent oracle: classical g_2 = h_2 - h_1
            assert h[2] - h[1] == 0
            assert g_expand(h, d, d + 1)[2] == 0

import pytest
from hypothesis import given, strategies as st

from repvar.profiles import (PSL2, SL2, AlgebraicGroup, Profile, convolve, cyclic_profile_psl2,
                             cyclic_profile_sl2, deficiency_lower_bound, free_group_profile,
                             free_product_cyclic_profile_psl2, pinched_dimension_psl2,
                             profile_below_bound, profile_sequence, same_profile, torus_n4_psl2,
                             torus_n4_sl2, trim)


def P(*counts):
    return Profile.from_counts(counts)


profiles = st.lists(st.integers(0, 5), min_size=1, max_size=6).filter(any).map(
    lambda c: Profile.from_counts(c))


def naive_convolve(p, q):
    """Independent double loop over component dimensions."""
    dims = []
    for i in range(p.dim + 1):
        for j in range(q.dim + 1):
            dims.extend([i + j] * (p.N(i) * q.N(j)))
    return Profile.from_dims(dims)


class TestProfileType:
    def test_leading_entry_required(self):
        with pytest.raises(ValueError):
            Profile(2, (0, 0, 1))

    def test_from_counts_trims(self):
        assert P(0, 0, 1, 0, 1) == Profile(2, (1, 0, 1))

    def test_empty(self):
        e = Profile.empty_variety()
        assert e.empty and e.total == 0 and str(e) == "empty"
        assert P(0, 0) == e

    def test_accessors(self):
        p = P(2, 0, 3)
        assert (p.N(2), p.N(1), p.N(0), p.N(5)) == (2, 0, 3, 0)
        assert p.padded(4) == (0, 0, 2, 0, 3)
        assert p.total == 5 and p.min_component_dim == 0

    def test_json_round_trip(self):
        for p in (P(1, 0, 1), Profile.point(), Profile.empty_variety()):
            assert Profile.from_json(p.to_json()) == p
        assert P(1, 0, 1).to_json() == {"dim": 2, "counts": [1, 0, 1]}

    def test_group_tags(self):
        assert SL2.dim == PSL2.dim == 3
        assert (SL2.center_order, PSL2.center_order) == (2, 1)
        assert AlgebraicGroup.parse("psl2") is PSL2
        assert AlgebraicGroup.parse("SL(2,C)") is SL2
        with pytest.raises(ValueError):
            AlgebraicGroup.parse("gl2")


class TestTrim:
    def test_pad_then_trim(self):
        assert trim(P(1, 0, 1), 4) == P(1, 0, 1)

    def test_empty(self):
        assert trim(Profile.empty_variety(), 7).empty

    def test_unchanged(self):
        assert trim(P(2, 0, 0, 0), 3) == P(2, 0, 0, 0)

    def test_below_dim(self):
        with pytest.raises(ValueError):
            trim(P(1, 0, 1), 1)

    @given(profiles, st.integers(0, 4))
    def test_idempotent(self, p, extra):
        n = p.dim + extra
        assert trim(trim(p, n), n) == trim(p, n)


class TestSameProfile:
    def test_examples(self):
        assert same_profile(P(1, 0, 1), P(1, 0, 1))
        assert not same_profile(P(2, 0, 0, 0), P(1, 0, 1, 0, 0, 0))
        assert not same_profile(P(1, 0, 1), P(1, 0, 2))


class TestConvolve:
    def test_examples(self):
        assert convolve(P(1, 0, 1), P(1, 0, 1)) == P(1, 0, 2, 0, 1)
        assert convolve(P(2, 0, 1), Profile.point()) == P(2, 0, 1)
        assert convolve(P(2, 0, 1), P(1, 0, 1)) == P(2, 0, 3, 0, 1)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            convolve(Profile.empty_variety(), P(1))

    @given(profiles, profiles)
    def test_matches_naive_and_commutes(self, p, q):
        assert convolve(p, q) == naive_convolve(p, q) == convolve(q, p)

    @given(profiles, profiles, profiles)
    def test_associative(self, p, q, r):
        assert convolve(convolve(p, q), r) == convolve(p, convolve(q, r))

    @given(profiles, profiles)
    def test_top_coefficient(self, p, q):
        c = convolve(p, q)
        assert c.dim == p.dim + q.dim and c.counts[0] == p.counts[0] * q.counts[0]

    def test_sequence(self):
        assert profile_sequence([]) == Profile.point()
        assert profile_sequence([P(1, 0, 1)] * 2) == P(1, 0, 2, 0, 1)

    def test_free_group(self):
        assert free_group_profile(2) == Profile(6, (1, 0, 0, 0, 0, 0, 0))
        assert free_group_profile(0) == Profile.point()


class TestCyclic:
    @pytest.mark.parametrize("n,expected", [(1, (1,)), (2, (2,)), (3, (1, 0, 1)), (4, (1, 0, 2)),
                                            (6, (2, 0, 2)), (7, (3, 0, 1))])
    def test_sl2(self, n, expected):
        assert cyclic_profile_sl2(n) == P(*expected)

    @pytest.mark.parametrize("n,expected", [(1, (1,)), (2, (1, 0, 1)), (4, (2, 0, 1)),
                                            (5, (2, 0, 1)), (7, (3, 0, 1))])
    def test_psl2(self, n, expected):
        assert cyclic_profile_psl2(n) == P(*expected)

    @pytest.mark.parametrize("n", [0, -3])
    def test_bad_order(self, n):
        with pytest.raises(ValueError):
            cyclic_profile_sl2(n)
        with pytest.raises(ValueError):
            cyclic_profile_psl2(n)

    def test_odd_orders_agree_even_orders_differ(self):
        for n in range(2, 100):
            a, b = cyclic_profile_sl2(n), cyclic_profile_psl2(n)
            if n % 2:
                assert a == b
            else:
                assert a != b


class TestFreeProduct:
    @pytest.mark.parametrize("m,n,expected", [(2, 2, (1, 0, 2, 0, 1)), (3, 2, (1, 0, 2, 0, 1)),
                                              (2, 3, (1, 0, 2, 0, 1)), (3, 3, (1, 0, 2, 0, 1)),
                                              (4, 6, (6, 0, 5, 0, 1)), (5, 7, (6, 0, 5, 0, 1))])
    def test_cases(self, m, n, expected):
        assert free_product_cyclic_profile_psl2(m, n) == P(*expected)

    def test_symmetric_and_convolution(self):
        for m in range(2, 30):
            for n in range(2, 30):
                f = free_product_cyclic_profile_psl2(m, n)
                assert f == free_product_cyclic_profile_psl2(n, m)
                assert f == convolve(cyclic_profile_psl2(m), cyclic_profile_psl2(n))

    def test_bad(self):
        with pytest.raises(ValueError):
            free_product_cyclic_profile_psl2(1, 3)


class TestTorus:
    @pytest.mark.parametrize("p,t,sl2,psl2", [(2, 3, 1, 1), (3, 4, 3, 2), (3, 5, 4, 2),
                                              (4, 4, 5, 4), (3, 3, 2, 1)])
    def test_values(self, p, t, sl2, psl2):
        assert torus_n4_sl2(p, t) == sl2
        assert torus_n4_psl2(p, t) == psl2

    def test_bad(self):
        with pytest.raises(ValueError):
            torus_n4_sl2(1, 3)
        with pytest.raises(ValueError):
            torus_n4_psl2(3, 1)


class TestPinched:
    def test_examples(self):
        assert pinched_dimension_psl2(2, 2, 4) == (6, True)
        assert pinched_dimension_psl2(2, 3, 3) == (6, False)
        assert pinched_dimension_psl2(3, 2, 8) == (10, True)

    @pytest.mark.parametrize("n,p,d", [(2, 2, 2), (2, 2, 6), (0, 2, 0), (2, 1, 4)])
    def test_rejects(self, n, p, d):
        with pytest.raises(ValueError):
            pinched_dimension_psl2(n, p, d)

    def test_range(self):
        for n in range(1, 8):
            for d in range(3 * (n - 1), 3 * n):
                dim, red = pinched_dimension_psl2(n, 2, d)
                assert 3 * n <= dim <= 3 * n + 1
                assert red == (d + 2 >= 3 * n)


class TestDeficiency:
    def test_values(self):
        for g in range(1, 5):
            assert deficiency_lower_bound(2 * g, 1, PSL2) == 3 * (2 * g - 1)
        assert deficiency_lower_bound(4, 0) == 12
        assert deficiency_lower_bound(3, 1) == 6

    def test_negative(self):
        with pytest.raises(ValueError):
            deficiency_lower_bound(1, 2)

    def test_known_profiles_respect_bound(self):
        # Z_m * Z_n: deficiency 0; F_1 * Z_2 = <x, y ; y^2>: deficiency 1
        assert not profile_below_bound(free_product_cyclic_profile_psl2(3, 4), 0)
        assert not profile_below_bound(convolve(free_group_profile(1), cyclic_profile_psl2(2)), 3)
        assert profile_below_bound(P(1, 0, 1), 1)

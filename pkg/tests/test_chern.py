from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fanobound.chern import (
    SplitBundleP1, bundle, conic_bundle_k3, discriminant_class, h0_split_p1,
    h0_sym3_split_p1, rr_chi_rank2_fe_closed, rr_chi_rank2_surface,
    rr_section_pair_bound, serre_partner_class, split_chern_surface, sym3_exponents,
    twist_rank2,
)
from fanobound.lattice import F0, F2, P2, DivClass, hirzebruch
from oracles import sym3_sections

ints = st.integers(-15, 15)


def test_rr_examples():
    assert rr_chi_rank2_surface(P2, bundle(2, DivClass(0), 0)) == 2
    # O(3) + O(6) on P2
    E = split_chern_surface(P2, [DivClass(3), DivClass(6)])
    assert (E.c1, E.c2) == (DivClass(9), 18)
    assert rr_chi_rank2_surface(P2, E) == 38


def test_rr_closed_form_spot_values():
    for e, a, b, c in [(0, 2, 3, 1), (2, 1, 5, -2), (4, 4, 18, 20), (3, -2, 7, 0)]:
        E = bundle(2, DivClass(a, b), c)
        assert rr_chi_rank2_fe_closed(e, a, b, c) == rr_chi_rank2_surface(hirzebruch(e), E)


@given(st.sampled_from([0, 2, 3, 4]), ints, ints, ints, ints, ints)
def test_twist_round_trip(e, a, b, c, p, q):
    Z = hirzebruch(e)
    E = bundle(2, DivClass(a, b), c)
    D = DivClass(p, q)
    assert twist_rank2(Z, twist_rank2(Z, E, D), -D) == E
    # the discriminant c1^2 - 4 c2 is twist invariant
    Et = twist_rank2(Z, E, D)
    assert Z.self_intersection(Et.c1) - 4 * Et.c2 == Z.self_intersection(E.c1) - 4 * E.c2


def test_twist_matches_split_sum():
    A, B, D = DivClass(1, 3), DivClass(-2, 0), DivClass(0, -1)
    lhs = twist_rank2(F2, split_chern_surface(F2, [A, B]), D)
    assert lhs == split_chern_surface(F2, [A + D, B + D])


def test_serre_partner():
    assert serre_partner_class(P2, bundle(2, DivClass(-2), 0)) == DivClass(-1)
    chi, D = rr_section_pair_bound(F0, bundle(2, DivClass(-3, 0), 2))
    assert (chi, D) == (-3, DivClass(1, -2))


def test_split_p1_sections():
    assert h0_split_p1((3, 1, 0, 0), -1) == 3 + 1
    assert SplitBundleP1([0, 2, 6]).degrees == (6, 2, 0)
    assert len(sym3_exponents()) == 10


@given(st.integers(0, 8), st.integers(0, 8), st.integers(-12, 6))
def test_sym3_matches_monomial_listing(d1, d2, shift):
    assert h0_sym3_split_p1(d1, d2, shift) == sym3_sections((d1, d2, 0), shift)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(-12, 6))
def test_sym3_monotone(d1, d2, shift):
    base = h0_sym3_split_p1(d1, d2, shift)
    assert h0_sym3_split_p1(d1 + 1, d2, shift) >= base
    assert h0_sym3_split_p1(d1, d2, shift + 1) >= base


def test_conic_bundle_formulas():
    E = bundle(3, DivClass(6), 0)
    assert conic_bundle_k3(P2, E) == 54
    assert discriminant_class(P2, E) == DivClass(3)
    with pytest.raises(ValueError):
        conic_bundle_k3(P2, bundle(2, DivClass(6), 0))


def test_curve_data_has_no_c2():
    assert SplitBundleP1((2, 1)).chern().c2 is None
    with pytest.raises(ValueError):
        from fanobound.chern import ChernData
        ChernData(2, 3, Fraction(1))

import random
from fractions import Fraction

import pytest

from fanobound.chern import bundle
from fanobound.chow import (
    CurveBundleRing, QuadricBundle, SurfaceBundleRing, antican_cube_p1bundle_surface,
    antican_p2bundle_p1,
)
from fanobound.lattice import F0, F2, P2, DivClass, hirzebruch
from oracles import curve_bundle_degree, fe_pairing, p2_pairing, segre_triple


def test_curve_ring_monomials():
    ring = CurveBundleRing((6, 2, 0))
    assert ring.triple_product_curvebase(3, 0) == 8
    assert ring.triple_product_curvebase(2, 1) == 1
    assert ring.triple_product_curvebase(1, 2) == 0
    with pytest.raises(ValueError):
        ring.triple_product_curvebase(2, 0)


def test_every_p2_bundle_has_cube_54():
    for degs in [(0, 0, 0), (1, 1, 0), (6, 2, 0), (9, 4, 0)]:
        assert antican_p2bundle_p1(degs)["k3"] == 54


def test_p2_bundle_normalizes():
    assert antican_p2bundle_p1((7, 3, 1))["degrees"] == (6, 2, 0)
    assert antican_p2bundle_p1((6, 2, 0))["dim"] == 38


def test_surface_ring_cube_matches_closed_form():
    for Z in (P2, F0, F2, hirzebruch(3)):
        for c1 in Z.classes_in_box([(-3, 3)] * Z.rank):
            for c2 in (-2, 0, 5):
                R = SurfaceBundleRing(Z, bundle(2, c1, c2))
                K = R.antican()
                assert R.mixed_product([K, K, K]) == antican_cube_p1bundle_surface(Z, bundle(2, c1, c2))


def _random_divisor(rng, Z):
    return rng.randint(-3, 3), DivClass(*[rng.randint(-4, 4) for _ in range(Z.rank)])


def test_hirsch_reduction_is_order_independent():
    rng = random.Random(20240601)
    surfaces = [(P2, p2_pairing)] + [
        (hirzebruch(e), (lambda e: lambda x, y: fe_pairing(e, x, y))(e)) for e in (0, 2, 3)
    ]
    trials = 0
    for _ in range(300):
        Z, pair = surfaces[rng.randrange(len(surfaces))]
        c1 = DivClass(*[rng.randint(-4, 4) for _ in range(Z.rank)])
        c2 = rng.randint(-6, 6)
        R = SurfaceBundleRing(Z, bundle(2, c1, c2))
        factors = [_random_divisor(rng, Z) for _ in range(3)]
        forms = [R.linear(a, D) for a, D in factors]
        expected = segre_triple(pair, tuple(c1), c2, [(a, tuple(D)) for a, D in factors])
        assert R.mixed_product(forms) == expected
        for _ in range(3):
            assert R.mixed_product(forms, rng=random.Random(rng.random())) == expected
            trials += 1
    for _ in range(300):
        r = rng.randint(2, 5)
        degs = sorted((rng.randint(0, 7) for _ in range(r)), reverse=True)
        ring = CurveBundleRing(degs)
        power = ring.product([ring.linear(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(r)])
        plain = ring.degree(power)
        for _ in range(2):
            assert ring.degree(power, rng=random.Random(rng.random())) == plain
            trials += 1
        a = rng.randint(0, r)
        assert ring.triple_product_curvebase(a, r - a, rng) == curve_bundle_degree(degs, a, r - a)
    assert trials >= 1000


def test_mixed_product_rejects_bad_arity():
    R = SurfaceBundleRing(P2, bundle(2, DivClass(1), 0))
    with pytest.raises(ValueError):
        R.mixed_product([R.L(), R.L()])


def test_quadric_products():
    X = QuadricBundle((3, 1, 0, 0), -2)
    assert [X.monomial_degree(a, 3 - a) for a in range(4)] == [0, 0, 2, 6]
    for al in range(-5, 6):
        v = X.quadric_triple(X.antican(), X.b_class(al), X.h_class(al))
        assert v == 2 * (6 - 4 - 2 * -2)
    assert isinstance(v, Fraction)
    with pytest.raises(ValueError):
        QuadricBundle((1, 0, 0), 0)

"""Degree-3 intersection numbers on projectivized bundles.

Three rings are modelled, each with a bespoke terminating reducer:

* ``CurveBundleRing``: P(E) for E split on P^1, generated by the tautological
  class M and the fiber F with F^2 = 0 and M^r = d M^(r-1) F.
* ``SurfaceBundleRing``: P(E) for E of rank 2 on P^2 or F_e, generated by the
  tautological class L over the Chow ring of the base, with
  L^2 = L f*c1 - f*c2.
* ``QuadricBundle``: a divisor X ~ 2M + rF in a P^3-bundle over P^1, with
  G = M|X and Q = F|X.  Its products are computed by pushing into the ambient
  ring, not from a table.

Elements are plain dicts from monomial keys to exact coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chern import ChernData, SplitBundleP1, h0_sym3_split_p1
from .lattice import DivClass, SurfaceLattice


def _add_term(expr: dict, key, value):
    if key in expr:
        value = expr[key] + value
    if _is_zero(value):
        expr.pop(key, None)
    else:
        expr[key] = value


def _is_zero(value) -> bool:
    if isinstance(value, DivClass):
        return value.is_zero()
    return value == 0


def _pick_order(keys, rng):
    keys = sorted(keys, key=repr)
    if rng is not None:
        rng.shuffle(keys)
    return keys


class CurveBundleRing:
    """Chow ring of P(E) over P^1 for a split bundle E."""

    def __init__(self, E: SplitBundleP1 | Sequence[int]):
        self.E = E if isinstance(E, SplitBundleP1) else SplitBundleP1(E)
        self.rank = self.E.rank
        self.d = self.E.d

    @property
    def dim(self) -> int:
        return self.rank

    def linear(self, m, f) -> dict:
        """The divisor m M + f F."""
        out = {}
        _add_term(out, (1, 0), Fraction(m))
        _add_term(out, (0, 1), Fraction(f))
        return out

    def monomial(self, a: int, b: int, coeff=1) -> dict:
        return {(a, b): Fraction(coeff)} if coeff else {}

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for (a, b), u in x.items():
            for (a2, b2), v in y.items():
                _add_term(out, (a + a2, b + b2), u * v)
        return out

    def product(self, factors: Sequence[dict]) -> dict:
        out = {(0, 0): Fraction(1)}
        for fac in factors:
            out = self.mul(out, fac)
        return out

    def reduce(self, expr: dict, rng: random.Random | None = None) -> dict:
        """Rewrite with F^2 = 0 and M^r = d M^(r-1) F until nothing applies.

        ``rng`` shuffles which reducible monomial is rewritten next and how
        many factors of M^r are split off at once.
        """
        r, d = self.rank, self.d
        work = dict(expr)
        while True:
            reducible = [k for k in work if k[1] >= 2 or k[0] >= r]
            if not reducible:
                return work
            key = _pick_order(reducible, rng)[0]
            coeff = work.pop(key)
            a, b = key
            if b >= 2:
                continue
            times = 1
            if rng is not None:
                times = rng.randint(1, a // r)
            # each rewrite trades M^r for d M^(r-1) F
            _add_term(work, (a - times, b + times), coeff * d ** times)

    def degree(self, expr: dict, rng: random.Random | None = None) -> Fraction:
        """Degree of a top-dimensional class; M^(r-1) F has degree 1."""
        top = self.dim
        for a, b in expr:
            if a + b != top:
                raise ValueError(f"monomial M^{a} F^{b} is not of total degree {top}")
        reduced = self.reduce(expr, rng)
        return reduced.get((top - 1, 1), Fraction(0))

    def triple_product_curvebase(self, a: int, b: int, rng=None) -> Fraction:
        """Degree of the monomial M^a F^b (total degree must equal the rank)."""
        return self.degree(self.monomial(a, b), rng)


def antican_class_p2bundle(E: SplitBundleP1) -> tuple[int, int]:
    """Coefficients (of M, of F) of -K for a P^2-bundle P(E) over P^1: 3M + (2-d)F."""
    if E.rank != 3:
        raise ValueError("a P^2-bundle comes from a rank 3 bundle")
    return 3, 2 - E.d


def antican_p2bundle_p1(E: SplitBundleP1 | Sequence[int]) -> dict:
    """-K class, dim |-K| and -K^3 of the P^2-bundle P(E) over P^1.

    E is normalized to have smallest degree 0.  dim |-K| counts sections of
    S^3 E (2 - d); -K^3 is the honest self-intersection on P(E), which is not
    the degree of the anticanonical image when -K fails to be nef.
    """
    E = E if isinstance(E, SplitBundleP1) else SplitBundleP1(E)
    if E.rank != 3:
        raise ValueError("a P^2-bundle comes from a rank 3 bundle")
    shift = -E.degrees[-1]
    E = SplitBundleP1([x + shift for x in E.degrees])
    m, f = antican_class_p2bundle(E)
    ring = CurveBundleRing(E)
    K = ring.linear(m, f)
    d1, d2, _ = E.degrees
    return {
        "degrees": E.degrees,
        "class": (m, f),
        "dim": h0_sym3_split_p1(d1, d2, 2 - E.d) - 1,
        "k3": ring.degree(ring.product([K, K, K])),
    }


class SurfaceBundleRing:
    """Chow ring of P(E) over a rational surface for E of rank 2.

    Keys are ``(k, j)``: L^k times a class of codimension j pulled back from
    the base.  Coefficients are Fractions for j = 0, 2 and DivClass for j = 1.
    """

    def __init__(self, Z: SurfaceLattice, E: ChernData):
        if E.rank != 2 or not E.on_surface:
            raise ValueError("SurfaceBundleRing needs a rank 2 bundle on a surface")
        self.Z = Z
        self.E = E

    @property
    def c1(self) -> DivClass:
        return self.E.c1

    @property
    def c2(self) -> Fraction:
        return self.E.c2

    def L(self) -> dict:
        return {(1, 0): Fraction(1)}

    def pull(self, D: DivClass) -> dict:
        self.Z._own(D)
        return {} if D.is_zero() else {(0, 1): D}

    def pull_point(self, n=1) -> dict:
        return {(0, 2): Fraction(n)} if n else {}

    def linear(self, l_coeff, D: DivClass) -> dict:
        """The divisor l_coeff * L + f*D."""
        out = {}
        _add_term(out, (1, 0), Fraction(l_coeff))
        if not D.is_zero():
            _add_term(out, (0, 1), D)
        return out

    def add(self, *terms: dict) -> dict:
        out = {}
        for t in terms:
            for k, v in t.items():
                _add_term(out, k, v)
        return out

    def scale(self, x: dict, s) -> dict:
        return {k: v * s for k, v in x.items() if s}

    def _base_mul(self, j1, u, j2, v):
        j = j1 + j2
        if j > 2:
            return j, None
        if j1 == 1 and j2 == 1:
            return 2, self.Z.intersect(u, v)
        return j, u * v

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for (k1, j1), u in x.items():
            for (k2, j2), v in y.items():
                j, w = self._base_mul(j1, u, j2, v)
                if w is None:
                    continue
                _add_term(out, (k1 + k2, j), w)
        return out

    def product(self, factors: Sequence[dict]) -> dict:
        out = {(0, 0): Fraction(1)}
        for fac in factors:
            out = self.mul(out, fac)
        return out

    def reduce(self, expr: dict, rng: random.Random | None = None) -> dict:
        """Lower L-powers with L^2 = L f*c1 - f*c2 (the Hirsch relation)."""
        work = dict(expr)
        while True:
            reducible = [key for key in work if key[0] >= 2]
            if not reducible:
                return work
            key = _pick_order(reducible, rng)[0]
            coeff = work.pop(key)
            k, j = key
            rest = {(k - 2, j): coeff}
            relation = self.add(self.mul(self.L(), self.pull(self.c1)),
                                self.pull_point(-self.c2))
            for nk, nv in self.mul(rest, relation).items():
                _add_term(work, nk, nv)

    def degree(self, expr: dict, rng: random.Random | None = None) -> Fraction:
        for k, j in expr:
            if k + j != 3:
                raise ValueError(f"term L^{k} * (codim {j}) is not of degree 3")
        reduced = self.reduce(expr, rng)
        return Fraction(reduced.get((1, 2), 0))

    def mixed_product(self, factors: Sequence[dict], rng=None) -> Fraction:
        """Degree of a product of three divisors given as linear forms."""
        if len(factors) != 3:
            raise ValueError(f"need exactly three divisor factors, got {len(factors)}")
        for fac in factors:
            if any(k + j != 1 for k, j in fac):
                raise ValueError("factors must be divisors (degree 1)")
        return self.degree(self.product(factors), rng)

    def antican(self) -> dict:
        """-K = 2L + f*(-K_Z - c1)."""
        return self.linear(2, -self.Z.canonical_class() - self.c1)


def mixed_product_surfacebase(Z: SurfaceLattice, E: ChernData, factors, rng=None) -> Fraction:
    return SurfaceBundleRing(Z, E).mixed_product(factors, rng)


def antican_cube_p1bundle_surface(Z: SurfaceLattice, E: ChernData) -> Fraction:
    """-K^3 = 6 K_Z^2 + 2 c1^2 - 8 c2 for P(E), E of rank 2 on a surface."""
    if E.rank != 2 or not E.on_surface:
        raise ValueError("expected a rank 2 bundle on a surface")
    K = Z.canonical_class()
    return 6 * Z.intersect(K, K) + 2 * Z.intersect(E.c1, E.c1) - 8 * E.c2


@dataclass(frozen=True)
class QuadricBundle:
    """X ~ 2M + rF inside P(E) over P^1, E split of rank 4."""

    E: SplitBundleP1
    r: int

    def __init__(self, E, r: int):
        E = E if isinstance(E, SplitBundleP1) else SplitBundleP1(E)
        if E.rank != 4:
            raise ValueError("a quadric bundle lives in a P^3-bundle (rank 4)")
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "r", int(r))

    @property
    def d(self) -> int:
        return self.E.d

    def _ambient(self) -> CurveBundleRing:
        return CurveBundleRing(self.E)

    def monomial_degree(self, a: int, b: int, rng=None) -> Fraction:
        """G^a Q^b on X, computed as M^a F^b (2M + rF) on the ambient P(E)."""
        if a + b != 3:
            raise ValueError(f"G^{a} Q^{b} is not of degree 3")
        ring = self._ambient()
        X = ring.linear(2, self.r)
        return ring.degree(ring.mul(ring.monomial(a, b), X), rng)

    def linear(self, g, q) -> tuple[Fraction, Fraction]:
        return Fraction(g), Fraction(q)

    def quadric_triple(self, *factors, rng=None) -> Fraction:
        """Degree on X of a product of three divisors g G + q Q."""
        if len(factors) != 3:
            raise ValueError(f"need exactly three divisor factors, got {len(factors)}")
        ring = self._ambient()
        prod = ring.product([ring.linear(g, q) for g, q in factors])
        total = Fraction(0)
        for (a, b), c in prod.items():
            total += c * self.monomial_degree(a, b, rng)
        return total

    def antican(self) -> tuple[Fraction, Fraction]:
        """-K_X = 2G + (2 - d - r)Q."""
        return self.linear(2, 2 - self.d - self.r)

    def h_class(self, alpha: int) -> tuple[Fraction, Fraction]:
        return self.linear(1, alpha)

    def b_class(self, alpha: int) -> tuple[Fraction, Fraction]:
        """Residual B = -K - H = G - (d + r + alpha - 2)Q."""
        return self.linear(1, -(self.d + self.r + alpha - 2))

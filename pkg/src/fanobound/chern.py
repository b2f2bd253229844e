"""Chern data of bundles on P^2, F_e and P^1; Riemann-Roch and section counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .lattice import DivClass, SurfaceLattice


@dataclass(frozen=True)
class ChernData:
    """Rank and Chern classes of a bundle.

    On a surface ``c1`` is a DivClass and ``c2`` an exact rational (degree of
    the zero-cycle; stored as int when integral).  On a curve ``c1`` is an integer and ``c2`` is None.
    """

    rank: int
    c1: DivClass | int
    c2: Fraction | None = None

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive int, got {self.rank!r}")
        if isinstance(self.c1, DivClass):
            c2 = Fraction(self.c2 if self.c2 is not None else 0)
            object.__setattr__(self, "c2", c2.numerator if c2.denominator == 1 else c2)
        elif self.c2 is not None:
            raise ValueError("c2 vanishes on a curve base")

    @property
    def on_surface(self) -> bool:
        return isinstance(self.c1, DivClass)


def bundle(rank: int, c1: DivClass, c2=0) -> ChernData:
    return ChernData(rank, c1, c2)


@dataclass(frozen=True)
class SplitBundleP1:
    """O(d_1) + ... + O(d_r) on P^1, stored with d_1 >= ... >= d_r."""

    degrees: tuple[int, ...]

    def __init__(self, degrees: Sequence[int]):
        degs = tuple(sorted((int(x) for x in degrees), reverse=True))
        if not degs:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "degrees", degs)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def d(self) -> int:
        return sum(self.degrees)

    def chern(self) -> ChernData:
        return ChernData(self.rank, self.d)


def _require_rank(E: ChernData, rank: int):
    if E.rank != rank:
        raise ValueError(f"expected a rank {rank} bundle, got rank {E.rank}")
    if not E.on_surface:
        raise ValueError("expected a bundle on a surface")


def rr_chi_rank2_surface(Z: SurfaceLattice, E: ChernData) -> Fraction:
    """chi(E) = (c1^2 - 2 c2 - K.c1)/2 + 2 for a rank 2 bundle on a rational surface."""
    _require_rank(E, 2)
    K = Z.canonical_class()
    return (Z.intersect(E.c1, E.c1) - 2 * E.c2 - Z.intersect(K, E.c1)) / 2 + 2


def rr_chi_rank2_fe_closed(e: int, a: int, b: int, c) -> Fraction:
    """Closed form of chi(E) on F_e with c1 = a Sigma + b l and c2 = c."""
    return Fraction(-e * a * (a + 1), 2) + a * b + a + b - Fraction(c) + 2


def twist_rank2(Z: SurfaceLattice, E: ChernData, D: DivClass) -> ChernData:
    """Chern data of E(D): c1 + 2D and c2 + c1.D + D^2."""
    _require_rank(E, 2)
    c1 = E.c1 + 2 * D
    c2 = E.c2 + Z.intersect(E.c1, D) + Z.intersect(D, D)
    return ChernData(2, c1, c2)


def serre_partner_class(Z: SurfaceLattice, E: ChernData) -> DivClass:
    """Class D with E* (x) omega = E(D) for rank 2, i.e. D = K - c1."""
    _require_rank(E, 2)
    return Z.canonical_class() - E.c1


def rr_section_pair_bound(Z: SurfaceLattice, E: ChernData) -> tuple[Fraction, DivClass]:
    """Lower bound for h0(E) + h0(E (x) det E^* (x) omega).

    Returns the bound (which is chi(E)) together with the twisting class of the
    second bundle.  This is a bound only: h1 is never assumed to vanish.
    """
    return rr_chi_rank2_surface(Z, E), serre_partner_class(Z, E)


def h0_split_p1(E: SplitBundleP1 | Sequence[int], t: int = 0) -> int:
    degs = E.degrees if isinstance(E, SplitBundleP1) else tuple(E)
    return sum(max(0, d + t + 1) for d in degs)


def sym3_exponents():
    """Exponent triples (i, j, k) with i + j + k = 3, lexicographically descending."""
    return [(i, j, 3 - i - j) for i in range(3, -1, -1) for j in range(3 - i, -1, -1)]


def h0_sym3_split_p1(d1: int, d2: int, shift: int) -> int:
    """h0 of S^3(O(d1) + O(d2) + O) (shift) on P^1."""
    return sum(max(0, i * d1 + j * d2 + shift + 1) for i, j, _ in sym3_exponents())


def conic_bundle_k3(Z: SurfaceLattice, E: ChernData) -> Fraction:
    """-K^3 of a conic bundle W in P(E), E of rank 3: c1.(-K_Z + c1) - 2 c2."""
    _require_rank(E, 3)
    K = Z.canonical_class()
    return Z.intersect(E.c1, E.c1 - K) - 2 * E.c2


def discriminant_class(Z: SurfaceLattice, E: ChernData) -> DivClass:
    """Discriminant class -3K_Z - c1 of the conic bundle embedded in P(E)."""
    _require_rank(E, 3)
    return -3 * Z.canonical_class() - E.c1


def split_chern_surface(Z: SurfaceLattice, summands: Sequence[DivClass]) -> ChernData:
    """Chern data of a direct sum of line bundles on a surface."""
    c1 = Z.zero()
    c2 = Fraction(0)
    for i, j in product(range(len(summands)), repeat=2):
        if i < j:
            c2 += Z.intersect(summands[i], summands[j])
    for D in summands:
        c1 = c1 + D
    return ChernData(len(summands), c1, c2)

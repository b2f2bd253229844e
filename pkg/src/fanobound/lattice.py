"""Picard lattices of the minimal rational surfaces P^2 and F_e.

Classes are exact coefficient vectors in a fixed basis: ``(h,)`` on P^2 and
``(Sigma, l)`` on F_e, where Sigma is the minimal section (Sigma^2 = -e) and
l is a fiber.  P^1 x P^1 is F_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable


class DivClass:
    """Immutable divisor class given by exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and isinstance(coeffs[0], (tuple, list)):
            coeffs = tuple(coeffs[0])
        vals = []
        for c in coeffs:
            if type(c) is int:
                vals.append(c)
                continue
            if isinstance(c, float):
                raise TypeError("floating point coefficients are not allowed")
            if not isinstance(c, Rational):
                raise TypeError(f"non-rational coefficient {c!r}")
            # integral values are kept as int: exact, and much cheaper
            c = Fraction(c)
            vals.append(c.numerator if c.denominator == 1 else c)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("DivClass is immutable")

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def _check(self, other):
        if not isinstance(other, DivClass):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError(
                f"class dimension mismatch: {len(self)} vs {len(other)}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return DivClass(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return DivClass(*(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return DivClass(*(-a for a in self))

    def __mul__(self, k):
        if isinstance(k, Rational) and not isinstance(k, bool):
            return DivClass(*(k * a for a in self))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, DivClass):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("DivClass", self.coeffs))

    def __repr__(self):
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"DivClass({inner})"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class SurfaceLattice:
    """P^2 (``e is None``) or the Hirzebruch surface F_e."""

    e: int | None = None

    def __post_init__(self):
        if self.e is not None and (not isinstance(self.e, int) or self.e < 0):
            raise ValueError(f"Hirzebruch index must be a nonnegative int, got {self.e!r}")

    @property
    def is_plane(self) -> bool:
        return self.e is None

    @property
    def rank(self) -> int:
        return 1 if self.is_plane else 2

    @property
    def basis(self) -> tuple[str, ...]:
        return ("h",) if self.is_plane else ("Sigma", "l")

    @property
    def name(self) -> str:
        return "P2" if self.is_plane else f"F{self.e}"

    def __str__(self):
        return self.name

    def cls(self, *coeffs) -> DivClass:
        D = DivClass(*coeffs)
        self._own(D)
        return D

    def zero(self) -> DivClass:
        return DivClass(*([0] * self.rank))

    def generators(self) -> tuple[DivClass, ...]:
        """Generators of the effective cone (h, or Sigma and l)."""
        if self.is_plane:
            return (DivClass(1),)
        return (DivClass(1, 0), DivClass(0, 1))

    def _own(self, D: DivClass):
        if len(D) != self.rank:
            raise ValueError(
                f"class {D!r} has {len(D)} coefficients, {self.name} needs {self.rank}")

    def intersect(self, D1: DivClass, D2: DivClass) -> Fraction | int:
        self._own(D1)
        self._own(D2)
        if self.is_plane:
            return D1[0] * D2[0]
        a, b = D1
        a2, b2 = D2
        return -self.e * a * a2 + a * b2 + a2 * b

    def self_intersection(self, D: DivClass) -> Fraction | int:
        return self.intersect(D, D)

    def canonical_class(self) -> DivClass:
        if self.is_plane:
            return DivClass(-3)
        return DivClass(-2, -(self.e + 2))

    def is_nef(self, D: DivClass) -> bool:
        self._own(D)
        if self.is_plane:
            return D[0] >= 0
        a, b = D
        return a >= 0 and b >= self.e * a

    def is_effective_class(self, D: DivClass) -> bool:
        self._own(D)
        return all(c >= 0 for c in D)

    def arithmetic_genus(self, C: DivClass) -> Fraction | int:
        return 1 + self.intersect(self.canonical_class() + C, C) / 2

    def swap_basis(self, D: DivClass) -> DivClass:
        """Exchange the two rulings of P^1 x P^1."""
        if self.e != 0:
            raise ValueError("basis swap is only a lattice symmetry on F0")
        self._own(D)
        return DivClass(D[1], D[0])

    def classes_in_box(self, bounds: Iterable[tuple[int, int]]):
        """All integral classes with each coefficient in the given closed range."""
        ranges = [range(lo, hi + 1) for lo, hi in bounds]
        if len(ranges) != self.rank:
            raise ValueError("one range per basis element is required")
        if self.is_plane:
            for a in ranges[0]:
                yield DivClass(a)
        else:
            for a in ranges[0]:
                for b in ranges[1]:
                    yield DivClass(a, b)


P2 = SurfaceLattice()


def hirzebruch(e: int) -> SurfaceLattice:
    return SurfaceLattice(e)


F0 = hirzebruch(0)
F2 = hirzebruch(2)

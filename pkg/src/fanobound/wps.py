"""Weighted projective spaces P(w_0, ..., w_n): monomial counts and degrees."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Callable, Sequence


@dataclass(frozen=True)
class WpsModel:
    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int]):
        ws = tuple(int(w) for w in weights)
        if not ws:
            raise ValueError("empty weight vector")
        if any(w <= 0 for w in ws):
            raise ValueError(f"weights must be positive, got {ws}")
        object.__setattr__(self, "weights", ws)

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    @property
    def antican_degree(self) -> int:
        """Degree m of O(-K) = O(sum of weights) on a normalized space."""
        return sum(self.weights)

    def __str__(self):
        return "P(" + ",".join(map(str, self.weights)) + ")"


def _as_model(W) -> WpsModel:
    return W if isinstance(W, WpsModel) else WpsModel(W)


def is_normalized(W) -> bool:
    ws = _as_model(W).weights
    if len(ws) == 1:
        return True
    return all(gcd(*(ws[:j] + ws[j + 1:])) == 1 for j in range(len(ws)))


def _count_two(a: int, b: int, m: int) -> int:
    """Number of x, y >= 0 with a x + b y = m."""
    if m < 0:
        return 0
    g = gcd(a, b)
    if m % g:
        return 0
    a, b, m = a // g, b // g, m // g
    # smallest x >= 0 with a x = m (mod b)
    x0 = (m * pow(a, -1, b)) % b if b > 1 else 0
    if a * x0 > m:
        return 0
    return (m - a * x0) // (a * b) + 1


def wps_h0(W, m: int) -> int:
    """Number of monomials of weighted degree m, i.e. h0(O(m)).

    Bounded enumeration over exponent vectors; the last two exponents are
    counted in closed form.
    """
    ws = sorted(_as_model(W).weights, reverse=True)
    if m < 0:
        return 0
    if len(ws) == 1:
        return 1 if m % ws[0] == 0 else 0

    def count(i: int, rest: int) -> int:
        if len(ws) - i == 2:
            return _count_two(ws[i], ws[i + 1], rest)
        w = ws[i]
        return sum(count(i + 1, rest - w * e) for e in range(rest // w + 1))

    return count(0, m)


def antican_self_degree(W) -> Fraction:
    """(-K)^3 = (sum w)^3 / prod w for a normalized P(w_0, ..., w_3)."""
    W = _as_model(W)
    if len(W.weights) != 4:
        raise ValueError("anticanonical self-degree is defined here for threefolds")
    if not is_normalized(W):
        raise ValueError(f"{W} is not normalized")
    return Fraction(sum(W.weights) ** 3, prod(W.weights))


def quasi_period(W) -> int:
    """Smallest P such that t -> h0(t P sum(w)) is a polynomial in t."""
    ws = _as_model(W).weights
    L = lcm(*ws)
    return L // gcd(L, sum(ws))


def antican_degree_oracle(W, counter: Callable[[WpsModel, int], int] | None = None) -> Fraction:
    """(-K)^3 recovered from monomial counts by exact finite differencing.

    f(t) = h0(t P sum w) is a cubic polynomial in t, where P is the
    quasi-period (P = 1 for both degree 72 examples).  Its third difference
    over t = 1..4 is 6 times the leading coefficient, and
    (-K)^3 = third difference / P^3.
    """
    W = _as_model(W)
    if len(W.weights) != 4:
        raise ValueError("the oracle is defined for threefolds (4 weights)")
    counter = counter or wps_h0
    P = quasi_period(W)
    S = sum(W.weights)
    f = [counter(W, t * P * S) for t in range(1, 5)]
    third = f[3] - 3 * f[2] + 3 * f[1] - f[0]
    return Fraction(third, P ** 3)


def hypersurface_antican_dim(W, deg_x: int, counter=None) -> int:
    """dim |-K_X| for a hypersurface X of degree deg_x in P(w).

    Uses h0(-K_P - X) - h0(-K_P - 2X) - 1, which presumes the vanishing of
    H^1(O(-K_P - 2X)) and adjunction on P.
    """
    W = _as_model(W)
    counter = counter or wps_h0
    top = sum(W.weights) - deg_x
    if top <= 0:
        raise ValueError(f"-K_P - X has nonpositive degree {top}")
    return counter(W, top) - counter(W, top - deg_x) - 1


def wps_antican_dim(W, counter=None) -> int:
    """dim |-K| of the space itself: h0(O(sum w)) - 1."""
    W = _as_model(W)
    counter = counter or wps_h0
    return counter(W, sum(W.weights)) - 1


@dataclass(frozen=True)
class IndexCase:
    label: str
    weights: tuple[int, ...]
    deg_x: int | None  # None: the space itself


def fano_index_cases() -> list[IndexCase]:
    """Weighted embeddings of terminal Fano threefolds of index > 1 with a
    non-Gorenstein point.  Labels [1]-[3] and [5] are kept from the usual
    numbering of this list; label [4] has no entry here."""
    cases = [IndexCase(f"[1] i={i}", (1, 1, 2, 3, i), 6) for i in range(2, 7)]
    cases += [IndexCase(f"[2] i={i}", (1, 1, 1, 2, i), 4) for i in (2, 3)]
    cases.append(IndexCase("[3]", (1, 1, 1, 1, 2), 3))
    cases.append(IndexCase("[5]", (1, 1, 1, 2), None))
    return cases

"""Lattice points of weighted degree slices: counting, enumeration, normality.

A lattice point is an exponent tuple (n0, n1, n2, n3); its weighted degree is
sum(a_i * n_i) for the ambient weight system.  The degree-d slice lists every
monomial of weighted degree d, sorted in the canonical order: descending
lexicographic on exponent tuples (largest first).  All downstream indices
depend on this order, so it is fixed once and for all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .wps import WeightedSpace

Point = tuple[int, int, int, int]


def weighted_degree(weights: tuple[int, int, int, int], point: Point) -> int:
    return sum(a * n for a, n in zip(weights, point))


def count_points(space: "WeightedSpace", d: int) -> int:
    """Number of exponent tuples of weighted degree exactly d.

    Coin-counting DP over the four weights; exact integer arithmetic.
    Negative degrees count zero.
    """
    if d < 0:
        return 0
    dp = [0] * (d + 1)
    dp[0] = 1
    for a in space.weights:
        for t in range(a, d + 1):
            dp[t] += dp[t - a]
    return dp[d]


@dataclass(frozen=True)
class DegreeSlice:
    """All lattice points of one weighted degree, in canonical order."""

    degree: int
    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)

    def index_map(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}


def degree_slice(space: "WeightedSpace", d: int) -> DegreeSlice:
    """Enumerate the full degree-d slice, sorted descending-lex."""
    if d < 0:
        raise ValueError("slice degree must be non-negative")
    a0, a1, a2, a3 = space.weights
    pts = []
    for n3 in range(d // a3 + 1):
        r3 = d - a3 * n3
        for n2 in range(r3 // a2 + 1):
            r2 = r3 - a2 * n2
            for n1 in range(r2 // a1 + 1):
                r1 = r2 - a1 * n1
                if r1 % a0 == 0:
                    pts.append((r1 // a0, n1, n2, n3))
    pts.sort(reverse=True)
    return DegreeSlice(d, tuple(pts))


def _decomposes(point: Point, parts: int, slice_pts: tuple[Point, ...],
                slice_set: set[Point], memo: dict) -> bool:
    """Can `point` be written as a sum of `parts` slice points?"""
    if parts == 1:
        return point in slice_set
    key = (point, parts)
    if key in memo:
        return memo[key]
    ok = False
    for v in slice_pts:
        rest = (point[0] - v[0], point[1] - v[1], point[2] - v[2], point[3] - v[3])
        if min(rest) < 0:
            continue
        if _decomposes(rest, parts - 1, slice_pts, slice_set, memo):
            ok = True
            break
    memo[key] = ok
    return ok


@dataclass
class NormalityReport:
    """Per-degree decomposability verdicts, with a witness for any failure."""

    by_degree: dict[int, bool] = field(default_factory=dict)
    witnesses: dict[int, Point] = field(default_factory=dict)

    def all_normal(self) -> bool:
        return all(self.by_degree.values())


def verify_projective_normality(space: "WeightedSpace", d_max: int) -> NormalityReport:
    """Check, for each 2 <= d <= d_max, that every lattice point of weighted
    degree d*s is a sum of d points of degree s.

    Requires a Gorenstein space (the degree-s slice is the anticanonical
    system).  Failures record the first indecomposable point as witness.
    """
    from .wps import invariants

    inv = invariants(space)
    if not inv.gorenstein:
        raise ValueError("projective normality check requires a Gorenstein space")
    s = inv.s
    base = degree_slice(space, s)
    slice_set = set(base.points)
    memo: dict = {}
    report = NormalityReport()
    for d in range(2, d_max + 1):
        ok = True
        for p in degree_slice(space, d * s).points:
            if not _decomposes(p, d, base.points, slice_set, memo):
                ok = False
                report.witnesses[d] = p
                break
        report.by_degree[d] = ok
    return report


def h_vector(space: "WeightedSpace") -> tuple[int, int, int, int]:
    """The h-vector of the 4-dimensional graded cone: 4th finite-difference
    transform of d -> count_points(space, d*s), evaluated at d = 0..3."""
    from .wps import invariants

    inv = invariants(space)
    if not inv.gorenstein:
        raise ValueError("h-vector is defined here for Gorenstein spaces only")
    s = inv.s
    counts = [count_points(space, k * s) for k in range(4)]
    h = []
    for k in range(4):
        h.append(sum((-1) ** j * comb(4, j) * counts[k - j] for j in range(k + 1)))
    return tuple(h)


def pair_sums(slice_: DegreeSlice) -> dict[Point, list[tuple[int, int]]]:
    """Group unordered index pairs {i <= j} of a slice by the sum of their
    points.  Keys are iterated in canonical (descending-lex) order elsewhere."""
    sums: dict[Point, list[tuple[int, int]]] = {}
    pts = slice_.points
    n = len(pts)
    for i in range(n):
        pi = pts[i]
        for j in range(i, n):
            pj = pts[j]
            key = (pi[0] + pj[0], pi[1] + pj[1], pi[2] + pj[2], pi[3] + pj[3])
            sums.setdefault(key, []).append((i, j))
    return sums

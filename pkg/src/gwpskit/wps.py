"""Weighted projective 3-spaces: classification and numerical invariants.

A weight system is a tuple of four positive integers, canonicalized to
non-decreasing order, globally coprime and well formed (every three weights
coprime).  The Gorenstein members are exactly those whose weight lcm divides
the weight sum; their numerical invariants (degree, genus, divisibility
index) are computed here in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import lattice


class WeightValidationError(ValueError):
    """A weight tuple violates positivity, coprimality or well-formedness."""


@dataclass(frozen=True)
class WeightedSpace:
    """P(a0, a1, a2, a3) with a0 <= a1 <= a2 <= a3.

    The constructor sorts the weights, so permutations of the same weight
    system compare equal.
    """

    weights: tuple[int, int, int, int]

    def __post_init__(self):
        ws = tuple(sorted(self.weights))
        if len(ws) != 4:
            raise WeightValidationError("exactly four weights are required")
        for a in ws:
            if not isinstance(a, int) or a < 1:
                raise WeightValidationError(f"weights must be positive integers, got {a}")
        if math.gcd(*ws) != 1:
            raise WeightValidationError(
                f"weights {ws} are not coprime: gcd = {math.gcd(*ws)}"
            )
        for triple in combinations(ws, 3):
            g = math.gcd(*triple)
            if g != 1:
                raise WeightValidationError(
                    f"not well formed: weights {triple} share the factor {g}"
                )
        object.__setattr__(self, "weights", ws)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.weights) + ")"


def weighted_space(*weights: int) -> WeightedSpace:
    return WeightedSpace(tuple(weights))


@dataclass(frozen=True)
class WpsInvariants:
    """Derived numerical data of a weight system.

    g, i_S and g1 are populated only in the Gorenstein case; e (the lcm of
    pairwise weight gcds) is always defined.
    """

    m: int
    s: int
    gorenstein: bool
    antiK_cubed: Fraction
    e: int
    g: int | None = None
    i_S: int | None = None
    g1: int | None = None


def invariants(space: WeightedSpace) -> WpsInvariants:
    """Compute lcm, weight sum, Gorenstein flag, anticanonical degree, genus,
    divisibility index and primitive genus for a weight system."""
    ws = space.weights
    m = math.lcm(*ws)
    s = sum(ws)
    gorenstein = s % m == 0
    prod = ws[0] * ws[1] * ws[2] * ws[3]
    anti = Fraction(s**3, prod)
    e = math.lcm(*(math.gcd(a, b) for a, b in combinations(ws, 2)))
    if not gorenstein:
        return WpsInvariants(m=m, s=s, gorenstein=False, antiK_cubed=anti, e=e)
    if anti.denominator != 1 or anti.numerator % 2 != 0:
        raise ArithmeticError(f"Gorenstein space {space} has non-even degree {anti}")
    g = int(anti) // 2 + 1
    if s % e != 0:
        raise ArithmeticError(f"pairwise-gcd lcm {e} does not divide weight sum {s}")
    i_s = s // e
    if (g - 1) % (i_s * i_s) != 0:
        raise ArithmeticError(f"divisibility index {i_s} squared does not divide g-1")
    g1 = 1 + (g - 1) // (i_s * i_s)
    return WpsInvariants(
        m=m, s=s, gorenstein=True, antiK_cubed=anti, e=e, g=g, i_S=i_s, g1=g1
    )


def enumerate_gorenstein(max_weight: int) -> list[WeightedSpace]:
    """All Gorenstein weight systems with largest weight <= max_weight,
    in lexicographic order."""
    out = []
    if max_weight < 1:
        return out
    for a0 in range(1, max_weight + 1):
        for a1 in range(a0, max_weight + 1):
            for a2 in range(a1, max_weight + 1):
                m3 = math.lcm(a0, a1, a2)
                for a3 in range(a2, max_weight + 1):
                    s = a0 + a1 + a2 + a3
                    m = math.lcm(m3, a3)
                    if m > s or s % m:
                        continue
                    ok = True
                    for t in combinations((a0, a1, a2, a3), 3):
                        if math.gcd(*t) != 1:
                            ok = False
                            break
                    if ok:
                        out.append(WeightedSpace((a0, a1, a2, a3)))
    return out


def restriction_invertible(space: WeightedSpace, k: int) -> bool:
    """Whether the twist by k restricts to a locally free sheaf on a general
    anticanonical surface: true iff the lcm of pairwise weight gcds divides k."""
    inv = invariants(space)
    if not inv.gorenstein:
        raise ValueError("restriction test requires a Gorenstein space")
    return k % inv.e == 0


@dataclass(frozen=True)
class VeronesePresentation:
    """Generator and relation degrees of a d-th Veronese subring.

    Degrees are measured in the regraded ring (original degree divided by d).
    `complete` reports whether the generator scan provably exhausted all
    minimal generators: every indecomposable has weighted degree at most
    max(sum_i (lcm(a_i, d) - a_i), max_i lcm(a_i, d)), so the scan is complete
    once cutoff*d reaches that bound.
    """

    d: int
    generator_degrees: tuple[int, ...]
    relation_degrees: tuple[int, ...]
    cutoff: int
    complete: bool


def _indecomposable_bound(ws: tuple[int, int, int, int], d: int) -> int:
    lcms = [math.lcm(a, d) for a in ws]
    return max(sum(l - a for l, a in zip(lcms, ws)), max(lcms))


def veronese_presentation(space: WeightedSpace, d: int, cutoff: int) -> VeronesePresentation:
    """Minimal monomial generators of the d-th Veronese subring up to degree
    cutoff*d, and the degrees of its minimal relations up to degree cutoff.

    A monomial of weighted degree n*d is a generator iff it is not the product
    of two subring monomials of lower positive degree.  New minimal relations
    in degree n are counted fiberwise: products of generators with equal
    exponent sum fall in one fiber, two products are adjacent when they share
    a generator factor, and each fiber contributes (components - 1).
    """
    if d < 1:
        raise ValueError("Veronese index d must be >= 1")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    slices = {n: lattice.degree_slice(space, n * d).points for n in range(1, cutoff + 1)}

    generators: list[tuple[lattice.Point, int]] = []
    for n in range(1, cutoff + 1):
        for u in slices[n]:
            decomposable = False
            for k in range(1, n // 2 + 1):
                for v in slices[k]:
                    if all(ui >= vi for ui, vi in zip(u, v)):
                        decomposable = True
                        break
                if decomposable:
                    break
            if not decomposable:
                generators.append((u, n))

    complete = cutoff * d >= _indecomposable_bound(space.weights, d)

    gen_points = [p for p, _ in generators]
    gen_degs = [n for _, n in generators]
    relation_degrees: list[int] = []
    for n in range(2, cutoff + 1):
        fibers: dict[lattice.Point, list[tuple[int, ...]]] = {}
        for expo in _exponent_vectors(gen_degs, n):
            img = [0, 0, 0, 0]
            for gi, e in enumerate(expo):
                if e:
                    pt = gen_points[gi]
                    for c in range(4):
                        img[c] += e * pt[c]
            fibers.setdefault(tuple(img), []).append(expo)
        for img in sorted(fibers, reverse=True):
            members = fibers[img]
            if len(members) < 2:
                continue
            relation_degrees.extend([n] * _extra_components(members))

    return VeronesePresentation(
        d=d,
        generator_degrees=tuple(sorted(gen_degs)),
        relation_degrees=tuple(relation_degrees),
        cutoff=cutoff,
        complete=complete,
    )


def _exponent_vectors(degrees: list[int], total: int):
    """All exponent tuples e with sum(e_i * degrees_i) == total."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, acc: list[int]):
        if i == len(degrees):
            if remaining == 0:
                out.append(tuple(acc))
            return
        step = degrees[i]
        for e in range(remaining // step + 1):
            rec(i + 1, remaining - e * step, acc + [e])

    rec(0, total, [])
    return out


def _extra_components(members: list[tuple[int, ...]]) -> int:
    """Number of connected components minus one, where two exponent vectors
    are adjacent iff some coordinate is positive in both."""
    parent = list(range(len(members)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    by_factor: dict[int, int] = {}
    for idx, expo in enumerate(members):
        for gi, e in enumerate(expo):
            if e:
                if gi in by_factor:
                    union(by_factor[gi], idx)
                else:
                    by_factor[gi] = idx
    roots = {find(i) for i in range(len(members))}
    return len(roots) - 1

"""Multigraded linear first syzygies and the quartic-syzygy vanishing check.

The first syzygies of the quadric generators decompose by exponent-sum
multidegree of weighted degree 3s.  Each local block is the kernel of the map
sending an incident (variable, generator) pair to the cubic monomial
difference it produces; kernels are extracted by exact elimination over a
prime field and certified by an integer lift (the lifted combination must
vanish identically as a polynomial).  Quartic minimal syzygies vanish iff,
blockwise in weighted degree 4s, the degree-4 kernel equals the span of
variable multiples of the cubic syzygies.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import exactla, lattice
from ._util import parallel_map, tadd, tsub
from .exactla import FieldSpec, ReproducibilityError, SparseMatrix
from .lattice import Point
from .toric import ConnectivityReport, ToricIdeal, check_degree3_generation
from .wps import WeightedSpace, invariants


@dataclass(frozen=True)
class SyzygyElement:
    """A linear syzygy sum(c * y_i * q_k) = 0 at one multidegree.

    terms are (variable index i, generator index k, integer coefficient);
    every term satisfies u_i + c_k = multidegree.
    """

    multidegree: Point
    terms: tuple[tuple[int, int, int], ...]


@dataclass
class SyzygyBasis:
    by_multidegree: dict[Point, tuple[SyzygyElement, ...]]
    total_count: int

    def elements(self):
        for key in sorted(self.by_multidegree, reverse=True):
            yield from self.by_multidegree[key]


def beta2(space: WeightedSpace, generation: ConnectivityReport | None = None) -> int:
    """Number of minimal linear first syzygies, by the counting formula
    beta1*(g+2) - (C(g+4,3) - N(3s)).

    Valid only once degree-3 generation is established, so the connectivity
    check is run (or the supplied report validated) first.
    """
    inv = invariants(space)
    if not inv.gorenstein:
        raise ValueError("beta2 requires a Gorenstein space")
    if generation is None:
        generation = check_degree3_generation(space)
    if not generation.connected:
        raise ValueError(
            f"degree-3 generation check failed (witness {generation.witness}); "
            "beta2 counting formula is not applicable"
        )
    g = inv.g
    b1 = comb(g - 2, 2)
    dim_i3 = comb(g + 4, 3) - lattice.count_points(space, 3 * inv.s)
    return b1 * (g + 2) - dim_i3


def incident_pairs_degree3(ideal: ToricIdeal) -> dict[Point, list[tuple[int, int]]]:
    """(variable, generator) pairs grouped by multidegree u_i + c_k."""
    pts = ideal.slice_s.points
    grouped: dict[Point, list[tuple[int, int]]] = {}
    for k, gen in enumerate(ideal.generators):
        c = gen.multidegree
        for i, u in enumerate(pts):
            grouped.setdefault(tadd(u, c), []).append((i, k))
    for pairs in grouped.values():
        pairs.sort()
    return grouped


def _local_matrix(ideal: ToricIdeal, cols: list[tuple[int, int]]):
    """Coefficient matrix of (i, k) -> y_i * q_k in the cubic monomial basis."""
    rows: dict[tuple[int, int, int], int] = {}
    entries = []
    for col, (i, k) in enumerate(cols):
        gen = ideal.generators[k]
        plus = tuple(sorted((i,) + gen.lhs))
        minus = tuple(sorted((i,) + gen.rhs))
        for trip, val in ((plus, 1), (minus, -1)):
            r = rows.setdefault(trip, len(rows))
            entries.append((r, col, val))
    return SparseMatrix(len(rows), len(cols), tuple(entries))


def _lift_and_verify(ideal: ToricIdeal, cols, vec, prime: int, multidegree: Point):
    """Lift a mod-p kernel vector to integers and verify the syzygy vanishes
    identically: the signed cubic monomials must cancel over the integers."""
    terms = []
    acc: dict[tuple[int, int, int], int] = {}
    for (i, k), value in zip(cols, vec):
        c = exactla.lift_symmetric(value, prime)
        if c == 0:
            continue
        terms.append((i, k, c))
        gen = ideal.generators[k]
        plus = tuple(sorted((i,) + gen.lhs))
        minus = tuple(sorted((i,) + gen.rhs))
        acc[plus] = acc.get(plus, 0) + c
        acc[minus] = acc.get(minus, 0) - c
    if any(acc.values()):
        return None
    return SyzygyElement(multidegree=multidegree, terms=tuple(terms))


def linear_syzygies(
    ideal: ToricIdeal,
    fields: tuple[FieldSpec, FieldSpec] | None = None,
    pivot: str = "asc",
    threads: int = 1,
) -> SyzygyBasis:
    """Explicit bases of the local degree-3 syzygy kernels.

    pivot="asc" eliminates columns in ascending (i, k) order; "desc" reverses
    the column order (used to verify basis-choice independence downstream).
    Kernel vectors failing the integer-lift certificate under the first prime
    are recomputed under the second; a second failure aborts.
    """
    if fields is None:
        fields = exactla.default_fields()
    if pivot not in ("asc", "desc"):
        raise ValueError("pivot must be 'asc' or 'desc'")
    grouped = incident_pairs_degree3(ideal)
    keys = sorted(grouped, reverse=True)

    def solve(key: Point):
        cols = grouped[key]
        if pivot == "desc":
            cols = list(reversed(cols))
        mat = _local_matrix(ideal, cols)
        for f in fields:
            try:
                basis = exactla.kernel_basis_mod_p(mat, f)
            except exactla.EntryVanishedError:
                continue
            elems = []
            for vec in basis:
                elem = _lift_and_verify(ideal, cols, vec, f.prime, key)
                if elem is None:
                    break
                elems.append(elem)
            else:
                return key, tuple(elems)
        raise ReproducibilityError(
            f"syzygy integer lift failed under both primes at multidegree {key}"
        )

    results = parallel_map(solve, keys, threads)
    by_multidegree = {key: elems for key, elems in results if elems}
    total = sum(len(v) for v in by_multidegree.values())
    return SyzygyBasis(by_multidegree=by_multidegree, total_count=total)


def incident_pairs_degree4(ideal: ToricIdeal) -> dict[Point, list[tuple[tuple[int, int], int]]]:
    """(quadratic monomial, generator) pairs grouped by multidegree."""
    pts = ideal.slice_s.points
    n = len(pts)
    grouped: dict[Point, list[tuple[tuple[int, int], int]]] = {}
    for k, gen in enumerate(ideal.generators):
        c = gen.multidegree
        for i in range(n):
            ci = tadd(c, pts[i])
            for j in range(i, n):
                grouped.setdefault(tadd(ci, pts[j]), []).append(((i, j), k))
    for pairs in grouped.values():
        pairs.sort()
    return grouped


def _quartic_matrix(ideal: ToricIdeal, cols):
    rows: dict[tuple[int, ...], int] = {}
    entries = []
    for col, ((i, j), k) in enumerate(cols):
        gen = ideal.generators[k]
        plus = tuple(sorted((i, j) + gen.lhs))
        minus = tuple(sorted((i, j) + gen.rhs))
        for quad, val in ((plus, 1), (minus, -1)):
            r = rows.setdefault(quad, len(rows))
            entries.append((r, col, val))
    return SparseMatrix(len(rows), len(cols), tuple(entries))


def _span_matrix(ideal: ToricIdeal, syzygies: SyzygyBasis, key: Point, cols):
    """Rows are y_i * sigma for every cubic syzygy sigma with multidegree
    key - u_i, written in the (pair, generator) coordinates of the block."""
    col_index = {pk: idx for idx, pk in enumerate(cols)}
    pts = ideal.slice_s.points
    rows = []
    for i, u in enumerate(pts):
        sub = tsub(key, u)
        if min(sub) < 0:
            continue
        for syz in syzygies.by_multidegree.get(sub, ()):
            row: dict[int, int] = {}
            for (j, k, c) in syz.terms:
                pair = (i, j) if i <= j else (j, i)
                col = col_index[(pair, k)]
                row[col] = row.get(col, 0) + c
            rows.append(row)
    entries = []
    for r, row in enumerate(rows):
        for c, v in sorted(row.items()):
            if v:
                entries.append((r, c, v))
    return SparseMatrix(len(rows), len(cols), tuple(entries))


@dataclass(frozen=True)
class QuarticSyzygyReport:
    ok: bool
    witness: Point | None
    blocks_checked: int


def check_no_quartic_syzygies(
    ideal: ToricIdeal,
    syzygies: SyzygyBasis,
    fields: tuple[FieldSpec, FieldSpec] | None = None,
    threads: int = 1,
    progress=None,
) -> QuarticSyzygyReport:
    """Blockwise verification that there are no minimal quartic syzygies.

    For every weighted-degree-4s multidegree the degree-4 kernel dimension
    must equal the rank of the span of variable multiples of the cubic
    syzygies; both sides are exact ranks under two primes.
    """
    if fields is None:
        fields = exactla.default_fields()
    if not ideal.generators:
        return QuarticSyzygyReport(ok=True, witness=None, blocks_checked=0)
    grouped = incident_pairs_degree4(ideal)
    keys = sorted(grouped, reverse=True)

    def check(key: Point):
        cols = grouped[key]
        kernel_dim = exactla.solution_dim(_quartic_matrix(ideal, cols), *fields)
        span = _span_matrix(ideal, syzygies, key, cols)
        span_rank = span.cols - exactla.solution_dim(span, *fields)
        return key, kernel_dim, span_rank

    done = 0
    witness = None
    for key, kernel_dim, span_rank in parallel_map(check, keys, threads):
        done += 1
        if progress is not None:
            progress(done, len(keys))
        if kernel_dim != span_rank and witness is None:
            witness = key
    return QuarticSyzygyReport(ok=witness is None, witness=witness, blocks_checked=len(keys))


def quartic_kernel_basis(
    ideal: ToricIdeal,
    fields: tuple[FieldSpec, FieldSpec] | None = None,
    threads: int = 1,
) -> dict[Point, tuple[tuple[tuple[tuple[int, int], int, int], ...], ...]]:
    """Integer-lifted bases of the degree-4 syzygy kernels, keyed by
    multidegree; each element is a tuple of ((i, j), k, coefficient) terms.

    Used by the strict tangent mode to impose the (redundant, once the
    quartic check passes) degree-4 constraints.
    """
    if fields is None:
        fields = exactla.default_fields()
    grouped = incident_pairs_degree4(ideal)
    keys = sorted(grouped, reverse=True)

    def solve(key: Point):
        cols = grouped[key]
        mat = _quartic_matrix(ideal, cols)
        for f in fields:
            try:
                basis = exactla.kernel_basis_mod_p(mat, f)
            except exactla.EntryVanishedError:
                continue
            elems = []
            for vec in basis:
                terms = []
                acc: dict[tuple[int, ...], int] = {}
                for (pair, k), value in zip(cols, vec):
                    c = exactla.lift_symmetric(value, f.prime)
                    if c == 0:
                        continue
                    terms.append((pair, k, c))
                    gen = ideal.generators[k]
                    plus = tuple(sorted(pair + gen.lhs))
                    minus = tuple(sorted(pair + gen.rhs))
                    acc[plus] = acc.get(plus, 0) + c
                    acc[minus] = acc.get(minus, 0) - c
                if any(acc.values()):
                    break
                elems.append(tuple(terms))
            else:
                return key, tuple(elems)
        raise ReproducibilityError(
            f"quartic kernel lift failed under both primes at multidegree {key}"
        )

    results = parallel_map(solve, keys, threads)
    return {key: elems for key, elems in results}

"""Quadric generators, fiber graphs, and the first two Betti numbers.

The anticanonical ideal is toric: whenever two pairs of degree-s monomials
share a product, their difference is a quadric relation.  A spanning tree per
shared product gives beta_1 = C(g-2, 2) minimal quadrics.  Connectivity of
the analogous degree-3s fiber graphs shows the cubics are generated by the
quadrics, and a blockwise kernel computation counts the beta_2 linear
syzygies and certifies that no minimal quartic syzygies exist.
"""

from gwpskit import (
    beta1,
    beta2,
    check_degree3_generation,
    check_no_quartic_syzygies,
    enumerate_gorenstein,
    invariants,
    linear_syzygies,
    quadric_generators,
    weighted_space,
)

sp = weighted_space(2, 3, 3, 4)
ideal = quadric_generators(sp)
print(f"{sp}: {len(ideal.generators)} quadric generators")
gen = ideal.generators[0]
print(f"example generator: y{gen.lhs} - y{gen.rhs} at multidegree {gen.multidegree}")

rep = check_degree3_generation(sp)
print(f"all {rep.fibers_checked} cubic fibers connected: {rep.connected}")

syz = linear_syzygies(ideal)
print(f"linear syzygies: {syz.total_count} (counting formula: {beta2(sp)})")

quartic = check_no_quartic_syzygies(ideal, syz)
print(f"no minimal quartic syzygies across {quartic.blocks_checked} blocks: {quartic.ok}")

print("\nBetti numbers of all fourteen spaces:")
print(f"{'weights':<16}{'g':>4}{'beta_1':>8}{'beta_2':>8}")
for sp in enumerate_gorenstein(50):
    g = invariants(sp).g
    print(f"{str(sp):<16}{g:>4}{beta1(sp):>8}{beta2(sp):>8}")

"""Walk through the classification of Gorenstein weighted projective 3-spaces.

A weight system (a0, a1, a2, a3) is Gorenstein when the lcm of the weights
divides their sum.  Scanning all well-formed coprime systems up to a bound
finds exactly fourteen of them, and the count is stable long past the largest
member, so the list is complete in the scanned range.
"""

from gwpskit import enumerate_gorenstein, invariants, restriction_invertible

spaces = enumerate_gorenstein(50)
print(f"Gorenstein weight systems with weights <= 50: {len(spaces)}\n")

print(f"{'weights':<16}{'m':>4}{'s':>4}{'-K^3':>6}{'g':>4}{'i_S':>5}{'g_1':>5}")
for sp in spaces:
    inv = invariants(sp)
    print(
        f"{str(sp):<16}{inv.m:>4}{inv.s:>4}{int(inv.antiK_cubed):>6}"
        f"{inv.g:>4}{inv.i_S:>5}{inv.g1:>5}"
    )

# The count stays at 14 no matter how far the bound is pushed (within reason).
for bound in (21, 30, 40, 50):
    assert len(enumerate_gorenstein(bound)) == 14
print("\ncount is stable from bound 21 through 50")

# The divisibility index i_S = s / lcm(pairwise gcds) tells which twists
# restrict to line bundles on a general anticanonical surface.
sp = spaces[4]  # (1,1,4,6)
print(f"\non {sp}: twist k restricts to a line bundle iff e | k:")
for k in range(1, 5):
    print(f"  k={k}: {restriction_invertible(sp, k)}")

"""Veronese subring presentations: rewriting a weighted space as a low-degree
hypersurface or complete intersection.

Regrading the coordinate ring by every d-th degree gives a subring whose
minimal monomial generators and relations identify the space with a familiar
model: a quadric, a sextic hypersurface, or a quadric-cubic intersection.
"""

from gwpskit import veronese_presentation, weighted_space

cases = [
    ((1, 1, 4, 6), 2, "a quadric hypersurface (the rank-3 quadric ac = b^2)"),
    ((1, 2, 2, 5), 2, "a sextic hypersurface"),
    ((1, 1, 2, 4), 2, "a quadric hypersurface"),
    ((2, 3, 3, 4), 6, "a quadric-cubic complete intersection"),
]

for weights, d, description in cases:
    sp = weighted_space(*weights)
    pres = veronese_presentation(sp, d, cutoff=8)
    gens = ",".join(str(x) for x in pres.generator_degrees)
    rels = sorted(pres.relation_degrees)
    print(f"{sp} regraded by d={d}:")
    print(f"  generator degrees ({gens}), relation degrees {rels}")
    print(f"  -> {description}")
    assert pres.complete
    print()

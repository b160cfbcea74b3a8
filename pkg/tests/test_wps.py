import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwpskit.wps import (
    WeightedSpace,
    WeightValidationError,
    enumerate_gorenstein,
    invariants,
    restriction_invertible,
    veronese_presentation,
    weighted_space,
)

TABLE_SET = {
    (1, 1, 1, 3), (1, 1, 4, 6), (1, 2, 2, 5), (1, 1, 1, 1), (1, 1, 2, 4),
    (1, 3, 4, 4), (1, 1, 2, 2), (1, 2, 6, 9), (2, 3, 3, 4), (1, 4, 5, 10),
    (1, 2, 3, 6), (1, 3, 8, 12), (2, 3, 10, 15), (1, 6, 14, 21),
}


def test_invariants_1146():
    inv = invariants(weighted_space(1, 1, 4, 6))
    assert (inv.m, inv.s, inv.gorenstein) == (12, 12, True)
    assert int(inv.antiK_cubed) == 72
    assert (inv.g, inv.i_S, inv.g1) == (37, 6, 2)


def test_invariants_2334():
    inv = invariants(weighted_space(2, 3, 3, 4))
    assert (inv.m, inv.s, inv.gorenstein) == (12, 12, True)
    assert int(inv.antiK_cubed) == 24
    assert (inv.g, inv.i_S, inv.g1) == (13, 2, 4)


def test_invariants_non_gorenstein():
    inv = invariants(weighted_space(1, 1, 1, 2))
    assert (inv.m, inv.s) == (2, 5)
    assert not inv.gorenstein
    assert inv.g is None and inv.i_S is None and inv.g1 is None


def test_weights_canonicalized():
    assert weighted_space(4, 3, 3, 2).weights == (2, 3, 3, 4)
    assert weighted_space(4, 3, 3, 2) == weighted_space(2, 3, 3, 4)


def test_validation_rejects_bad_tuples():
    with pytest.raises(WeightValidationError, match="coprime"):
        weighted_space(2, 4, 6, 8)
    with pytest.raises(WeightValidationError, match="well formed"):
        weighted_space(1, 2, 2, 2)
    with pytest.raises(WeightValidationError, match="positive"):
        weighted_space(0, 1, 1, 1)
    with pytest.raises(WeightValidationError):
        WeightedSpace((1, 1, 1))


def test_enumerate_bounds():
    assert len(enumerate_gorenstein(21)) == 14
    assert {sp.weights for sp in enumerate_gorenstein(21)} == TABLE_SET
    small = {sp.weights for sp in enumerate_gorenstein(3)}
    assert small == {(1, 1, 1, 1), (1, 1, 1, 3), (1, 1, 2, 2)}
    assert enumerate_gorenstein(0) == []


def test_enumerate_lexicographic_order():
    spaces = enumerate_gorenstein(21)
    assert [sp.weights for sp in spaces] == sorted(sp.weights for sp in spaces)


def test_enumerate_count_stable_through_bound_50():
    for bound in (21, 35, 50):
        assert len(enumerate_gorenstein(bound)) == 14


@settings(max_examples=20, deadline=None)
@given(b=st.integers(min_value=1, max_value=10), extra=st.integers(min_value=0, max_value=4))
def test_enumerate_monotone(b, extra):
    smaller = {sp.weights for sp in enumerate_gorenstein(b)}
    larger = {sp.weights for sp in enumerate_gorenstein(b + extra)}
    assert smaller <= larger


def test_degree_genus_identity_exact(all_spaces):
    for sp in all_spaces:
        inv = invariants(sp)
        a0, a1, a2, a3 = sp.weights
        assert 2 * (inv.g - 1) * a0 * a1 * a2 * a3 == inv.s**3
        assert inv.g1 == 1 + (inv.g - 1) // (inv.i_S**2)


def test_restriction_invertible_examples():
    sp = weighted_space(1, 1, 4, 6)
    assert not restriction_invertible(sp, 1)
    assert restriction_invertible(sp, 2)
    sp = weighted_space(1, 1, 1, 1)
    assert all(restriction_invertible(sp, k) for k in range(-3, 4))
    sp = weighted_space(2, 3, 10, 15)
    assert not restriction_invertible(sp, 15)
    assert restriction_invertible(sp, 30)


def test_restriction_requires_gorenstein():
    with pytest.raises(ValueError):
        restriction_invertible(weighted_space(1, 1, 1, 2), 2)


@pytest.mark.parametrize(
    "weights,d,cutoff,gens,rels",
    [
        ((1, 1, 4, 6), 2, 4, (1, 1, 1, 2, 3), (2,)),
        ((1, 2, 2, 5), 2, 8, (1, 1, 1, 3, 5), (6,)),
        ((2, 3, 3, 4), 6, 4, (1, 1, 1, 1, 1, 2), (2, 3)),
        ((1, 1, 2, 4), 2, 2, (1, 1, 1, 1, 2), (2,)),
        ((1, 1, 1, 1), 1, 3, (1, 1, 1, 1), ()),
    ],
)
def test_veronese_presentations(weights, d, cutoff, gens, rels):
    pres = veronese_presentation(weighted_space(*weights), d, cutoff)
    assert pres.generator_degrees == gens
    assert tuple(sorted(pres.relation_degrees)) == rels
    assert pres.complete


def test_veronese_incomplete_flag():
    # w^2 sits in degree 10 = 5*d, beyond cutoff 2; the scan must say so.
    pres = veronese_presentation(weighted_space(1, 2, 2, 5), 2, 2)
    assert not pres.complete
    assert pres.generator_degrees == (1, 1, 1)


def test_veronese_validates_arguments():
    sp = weighted_space(1, 1, 1, 1)
    with pytest.raises(ValueError):
        veronese_presentation(sp, 0, 4)
    with pytest.raises(ValueError):
        veronese_presentation(sp, 2, 0)

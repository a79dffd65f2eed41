import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kunzkit.common import NotAnElement, NotInPolyhedron, NotNumerical
from kunzkit.oracle import apery_brute, betti_elements_brute, membership_table, semigroup_factorizations_brute
from kunzkit.semigroup import (
    AperyTuple,
    KunzTuple,
    MultiplicityWarning,
    NumericalSemigroup,
    apery,
    betti_elements_classic,
    contains,
    factorizations,
    kunz_tuple,
    minimal_presentation_classic,
    normalize,
    parse_generators,
    phi,
    semigroup_of_apery,
    semigroup_of_kunz,
)


@st.composite
def semigroups(draw, max_m=9, max_gens=6):
    m = draw(st.integers(2, max_m))
    rest = draw(st.lists(st.integers(m + 1, 5 * m), min_size=1, max_size=max_gens - 1))
    gens = [m] + rest
    try:
        return NumericalSemigroup(gens)
    except NotNumerical:
        return NumericalSemigroup(gens + [m + 1])


def test_normalize():
    assert normalize([6, 7, 8, 9, 13]).generators == (6, 7, 8, 9)
    assert normalize([4, 9, 14, 15]).generators == (4, 9, 14, 15)
    with pytest.raises(NotNumerical):
        normalize([2, 4])
    with pytest.raises(NotNumerical):
        normalize([])


def test_contains():
    S = NumericalSemigroup([6, 9, 20])
    assert contains(S, 0)
    assert contains(S, 49)
    assert not contains(S, 43)
    assert 44 in S
    assert not contains(S, -6)


def test_apery_examples():
    assert apery(NumericalSemigroup([6, 7, 8, 9])).as_set() == {0, 7, 8, 9, 16, 17}
    # 69 is sometimes quoted for residue 5, but 69 = 33 mod 6; the entry is 26 + 33
    assert apery(NumericalSemigroup([6, 19, 26, 33])).as_set() == {0, 19, 26, 33, 52, 59}
    assert len({a % 6 for a in (0, 19, 26, 33, 52, 69)}) == 5
    assert apery(NumericalSemigroup([4, 9, 14, 15])).as_set() == {0, 9, 14, 15}


def test_kunz_examples():
    x = kunz_tuple(NumericalSemigroup([6, 7, 8, 9]))
    assert x == KunzTuple(6, (1, 1, 1, 2, 2))
    assert semigroup_of_kunz(x).generators == (6, 7, 8, 9)


def test_kunz_zero_tuple_warns():
    with pytest.warns(MultiplicityWarning):
        S = semigroup_of_kunz(KunzTuple(5, (0, 0, 0, 0)))
    assert S.generators == (1,)


def test_kunz_outside_polyhedron():
    # x_1 + x_1 >= x_2 fails
    with pytest.raises(NotInPolyhedron):
        semigroup_of_kunz(KunzTuple(4, (1, 5, 1)))


def test_factorization_examples():
    S = NumericalSemigroup([4, 9, 14, 15])
    assert set(factorizations(S, 24)) == {(6, 0, 0, 0), (0, 1, 0, 1)}
    assert set(factorizations(S, 28)) == {(7, 0, 0, 0), (1, 1, 0, 1), (0, 0, 2, 0)}
    assert factorizations(S, 0) == [(0, 0, 0, 0)]
    with pytest.raises(NotAnElement):
        factorizations(S, 5)


def test_betti_examples():
    assert sorted(betti_elements_classic(NumericalSemigroup([6, 7, 8, 9]))) == [14, 15, 16, 18]
    assert sorted(betti_elements_classic(NumericalSemigroup([9, 20, 30, 35]))) == [60, 65, 70, 75, 80, 90]
    assert sorted(betti_elements_classic(NumericalSemigroup([2, 3]))) == [6]


def test_classic_presentation_examples():
    pres = minimal_presentation_classic(NumericalSemigroup([6, 7, 8, 9]))
    assert len(pres) == 4
    assert ((0, 1, 0, 1), (0, 0, 2, 0)) in {(t.left, t.right) for t in pres}
    pres = minimal_presentation_classic(NumericalSemigroup([2, 3]))
    assert [(t.left, t.right) for t in pres] == [((3, 0), (0, 2))]
    assert len(minimal_presentation_classic(NumericalSemigroup([4, 5, 6, 7]))) == 6


def test_json_round_trip():
    S = NumericalSemigroup([9, 20, 30, 35])
    assert NumericalSemigroup.from_json(S.to_json()) == S
    assert NumericalSemigroup.from_json({"m": 9, "kunz": list(kunz_tuple(S).values)}) == S
    assert NumericalSemigroup.from_json({"m": 9, "apery": list(S.apery_set)}) == S
    assert parse_generators("9, 20,30,35") == S


@settings(max_examples=150, deadline=None)
@given(semigroups(), st.integers(0, 200))
def test_contains_matches_knapsack(S, n):
    assert contains(S, n) == membership_table(S.generators, n)[n]


@settings(max_examples=150, deadline=None)
@given(semigroups())
def test_apery_matches_brute(S):
    assert list(S.apery_set) == apery_brute(S)
    a = apery(S)
    a.check()
    assert sorted(set(x % S.multiplicity for x in a.full)) == list(range(S.multiplicity))


@settings(max_examples=150, deadline=None)
@given(semigroups())
def test_round_trips(S):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert semigroup_of_kunz(kunz_tuple(S)) == S
        assert semigroup_of_apery(apery(S)) == S
    assert kunz_tuple(S).to_apery() == apery(S)


@settings(max_examples=100, deadline=None)
@given(semigroups(max_m=7, max_gens=5), st.integers(0, 80))
def test_factorizations_match_brute(S, n):
    if not contains(S, n):
        return
    zs = factorizations(S, n)
    assert zs == sorted(zs, reverse=True)
    assert set(zs) == semigroup_factorizations_brute(S.generators, n)
    assert all(phi(S, z) == n for z in zs)


@settings(max_examples=60, deadline=None)
@given(semigroups(max_m=7, max_gens=5))
def test_betti_elements_match_brute(S):
    classic = betti_elements_classic(S)
    brute = betti_elements_brute(S)
    assert {b: len(c) for b, c in classic.items()} == brute


def test_apery_tuple_validation():
    with pytest.raises(NotInPolyhedron):
        AperyTuple(4, (5, 14, 7)).check()
    AperyTuple(4, (5, 6, 7)).check()

import json

import pytest
from hypothesis import given, settings

from conftest import H6, H8_TABLE
from kunzkit.common import INF, NotAFace, NotSemigroupFace
from kunzkit.facetools import face_of_semigroup
from kunzkit.kunzposet import (
    KunzPoset,
    embedding_dimension,
    evaluate,
    factorizations_poset,
    nil_add,
    nil_table,
    poset_type,
)
from kunzkit.oracle import check_nilsemigroup, factorization_table_brute, factorizations_brute
from kunzkit.semigroup import NumericalSemigroup, apery, factorizations
from test_semigroup import semigroups


def test_fig_a_relations(fig_a):
    strict = {(a, b) for a, b in fig_a.relations() if a != b and a != 0}
    assert strict == {(2, 5), (3, 5), (1, 4), (3, 4), (2, 4)}
    assert fig_a.atoms == (1, 2, 3)


def test_same_poset_for_same_face(fig_a):
    assert KunzPoset.from_semigroup(NumericalSemigroup([6, 19, 26, 33])) == fig_a
    assert KunzPoset.from_face(H6, 6) == fig_a


def test_med_antichain():
    P = KunzPoset.from_semigroup(NumericalSemigroup([5, 6, 7, 8, 9]))
    assert P.atoms == (1, 2, 3, 4)
    assert P.covers == ((0, 1), (0, 2), (0, 3), (0, 4))
    assert embedding_dimension(P) == 5
    assert poset_type(P) == 4


def test_from_face_m8(fig_b):
    assert fig_b.atoms == (3, 4, 5, 7)
    assert fig_b.subgroup == (0,)
    assert {p: list(fig_b.factorizations(p)) for p in fig_b.ground} == H8_TABLE


def test_from_face_nontrivial_subgroup():
    # e1+e2-e3 and e2+e3-e1 add to 2e2, so a2 is forced to 0
    P = KunzPoset.from_face([[1, 1, -1], [-1, 1, 1]], 4)
    assert P.subgroup == (0, 2)
    assert P.modulus == 2
    assert P.ground == (0, 1)
    assert P.atoms == (1,)
    with pytest.raises(NotSemigroupFace):
        embedding_dimension(P)
    with pytest.raises(NotSemigroupFace):
        poset_type(P)


def test_from_face_rejects_non_faces():
    with pytest.raises(NotAFace):
        KunzPoset.from_face([[1, 0, -2, -1], [-1, 0, 2, -1]], 5)
    with pytest.raises(NotAFace):
        KunzPoset.from_face([[-1, -1, 0, 2], [-2, 0, -2, 2]], 5)


def test_nil_add(fig_a, fig_b):
    assert nil_add(fig_a, 2, 3) == 5
    assert nil_add(fig_a, 1, 2) is INF
    assert nil_add(fig_a, INF, 0) is INF
    for P in (fig_a, fig_b):
        for a in P.ground:
            assert nil_add(P, 0, a) == a
    assert nil_table(fig_a)[(1, 3)] == 4


def test_evaluate(fig_b):
    assert evaluate(fig_b, (0, 1, 1, 0)) == 1
    assert evaluate(fig_b, (1, 1, 0, 0)) is INF
    assert evaluate(fig_b, (0, 0, 0, 0)) == 0


def test_factorization_examples(fig_a, fig_b):
    assert set(factorizations_poset(fig_a, 4)) == {(1, 0, 1), (0, 2, 0)}
    assert set(fig_b.factorizations(1)) == {(3, 0, 0, 0), (1, 0, 0, 2), (0, 1, 1, 0)}
    assert fig_a.factorizations(0) == ((0, 0, 0),)
    for P in (fig_a, fig_b):
        for p in P.ground:
            assert set(P.factorizations(p)) == factorizations_brute(P, p)


def test_embedding_dimension_and_type(fig_a, fig_c):
    assert (embedding_dimension(fig_a), poset_type(fig_a)) == (4, 2)
    assert embedding_dimension(fig_c) == 5
    # maximal elements of <8,9,11,12,15>: 2, 5, 6 and also 7 (7 = 15 is not below anything)
    assert fig_c.maximal_elements() == (2, 5, 6, 7)
    assert poset_type(fig_c) == 4
    med4 = KunzPoset.from_semigroup(NumericalSemigroup([4, 5, 6, 7]))
    assert (embedding_dimension(med4), poset_type(med4)) == (4, 3)


def test_json_and_dot(fig_a):
    out = fig_a.to_json()
    assert out["atoms"] == [1, 2, 3]
    assert out["subgroup"] == [0]
    assert [2, 5, 3] in out["covers"]
    back = KunzPoset.from_json({"m": 6, "covers": [c[:2] for c in out["covers"]]})
    assert back == fig_a
    assert KunzPoset.from_json(json.dumps({"generators": [6, 7, 8, 9]})) == fig_a
    assert KunzPoset.from_json({"m": 6, "hyperplanes": H6}) == fig_a
    dot = fig_a.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == len(fig_a.covers)
    assert '2 -> 5 [label="+3"]' in dot


def test_from_covers_rejects_bad_labels():
    # 1 < 3 would need label 2 to be an atom
    with pytest.raises(NotAFace):
        KunzPoset.from_covers(4, [(0, 1), (1, 3)])
    with pytest.raises(NotAFace):
        KunzPoset.from_covers(3, [(0, 1), (1, 2), (2, 1)])


@settings(max_examples=80, deadline=None)
@given(semigroups())
def test_nilsemigroup_axioms(S):
    P = KunzPoset.from_semigroup(S)
    assert all(check_nilsemigroup(P).values())


@settings(max_examples=100, deadline=None)
@given(semigroups())
def test_from_face_matches_from_apery(S):
    P = KunzPoset.from_apery(apery(S))
    F = face_of_semigroup(S)
    assert KunzPoset.from_face(F.equalities, F.m) == P


@settings(max_examples=60, deadline=None)
@given(semigroups(max_m=7))
def test_factorizations_match_brute(S):
    P = KunzPoset.from_semigroup(S)
    table = factorization_table_brute(P)
    for p in P.ground:
        zs = P.factorizations(p)
        assert zs == tuple(sorted(zs, reverse=True))
        assert set(zs) == table[p]
        assert all(evaluate(P, z) == p for z in zs)


@settings(max_examples=80, deadline=None)
@given(semigroups())
def test_apery_factorizations_lift(S):
    P = KunzPoset.from_semigroup(S)
    m = S.multiplicity
    # generator j >= 1 has residue P.atoms[...]; reorder poset exponents accordingly
    by_residue = {g % m: j for j, g in enumerate(S.generators) if j}
    for i in range(1, m):
        lifted = set()
        for z in P.factorizations(i):
            v = [0] * len(S.generators)
            for zi, p in zip(z, P.atoms):
                v[by_residue[p]] = zi
            lifted.add(tuple(v))
        assert lifted == set(factorizations(S, S.apery_set[i]))

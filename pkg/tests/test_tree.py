import random

import pytest

import oracles
from conftest import S
from packed_semigroups import (
    children,
    enumerate_class_frobenius,
    enumerate_class_genus,
    enumerate_family_frobenius,
    enumerate_family_genus,
    enumerate_packed,
    family_extremes,
    levels,
    pack,
    residue_class_table,
)
from packed_semigroups.errors import BadDimensions, NotPacked
from packed_semigroups.tree import node_invariants, parent

EX14 = [S(5, 6, 8), S(5, 6, 13), S(5, 8, 11), S(5, 11, 13), S(5, 11, 18)]


def test_children_examples():
    assert children(S(5, 6, 8)) == [S(5, 6, 13), S(5, 8, 11)]
    assert children(S(5, 11, 13)) == [S(5, 11, 18), S(5, 13, 16)]
    assert children(S(5, 6, 13)) == []
    assert children(S(6, 7, 8)) == [S(6, 8, 13)]
    assert children(S(6, 8, 13)) == [S(6, 8, 19), S(6, 13, 14)]
    assert children(S(6, 8, 9)) == [S(6, 8, 15), S(6, 9, 14)]
    assert children(S(6, 8, 15)) == [S(6, 8, 21)]


@pytest.mark.parametrize(
    "gens, f, g",
    [
        ((6, 8, 13), 23, 12), ((6, 13, 14), 35, 18), ((6, 8, 19), 29, 15), ((6, 8, 25), 35, 18),
        ((6, 8, 9), 19, 10), ((6, 9, 14), 31, 16), ((6, 8, 15), 25, 13), ((6, 8, 21), 31, 16),
    ],
)
def test_small_tree_invariants(gens, f, g):
    s = S(*gens)
    table = residue_class_table(pack(s))
    assert node_invariants(s) == node_invariants(s, table) == (f, g) == oracles.frobenius_genus(list(gens))


def test_class_frobenius():
    assert list(enumerate_class_frobenius(S(5, 6, 8), 25)) == EX14
    assert list(enumerate_class_frobenius(S(5, 6, 8), 8)) == []
    assert list(enumerate_class_frobenius(S(5, 6, 8), 9)) == [S(5, 6, 8)]
    table = residue_class_table(S(5, 6, 8))
    assert list(enumerate_class_frobenius(S(5, 6, 8), 25, table)) == EX14
    with pytest.raises(NotPacked):
        enumerate_class_frobenius(S(5, 6, 13), 30)


def test_class_genus():
    assert list(enumerate_class_genus(S(5, 6, 8), 15)) == EX14
    assert list(enumerate_class_genus(S(5, 6, 8), 5)) == []
    res = enumerate_class_genus(S(6, 8, 9), 16)
    assert S(6, 9, 14) in res.members and S(6, 8, 21) in res.members
    assert (res.bound_kind, res.bound, res.exact_filter) == ("genus", 16, False)


def test_family_frobenius():
    exact = enumerate_family_frobenius(6, 3, 23, exact=True)
    assert list(exact) == [S(6, 7, 15), S(6, 7, 22), S(6, 7, 29), S(6, 8, 13), S(6, 9, 10)]
    assert list(enumerate_family_frobenius(6, 3, 14)) == []
    assert list(enumerate_family_frobenius(2, 2, 3, exact=True)) == [S(2, 5)]
    assert list(enumerate_family_frobenius(6, 3, 23, exact=True, threads=4)) == list(exact)
    with pytest.raises(BadDimensions):
        enumerate_family_frobenius(6, 3, 4)
    with pytest.raises(BadDimensions):
        enumerate_family_frobenius(3, 4, 10)


def test_family_genus():
    exact = enumerate_family_genus(6, 3, 16, exact=True)
    assert list(exact) == [S(6, 8, 21), S(6, 9, 14), S(6, 10, 17), S(6, 11, 15)]
    assert list(enumerate_family_genus(6, 3, 8)) == []
    assert list(enumerate_family_genus(2, 2, 1, exact=True)) == [S(2, 3)]


def test_levels():
    assert [[n.semigroup for n in lvl] for lvl in levels(S(5, 6, 8), 1)] == [[S(5, 6, 8)], [S(5, 6, 13), S(5, 8, 11)]]
    assert [[n.semigroup for n in lvl] for lvl in levels(S(5, 6, 8), 0)] == [[S(5, 6, 8)]]
    lv = levels(S(2, 3), 3)
    assert [[n.semigroup for n in x] for x in lv] == [[S(2, 3)], [S(2, 5)], [S(2, 7)], [S(2, 9)]]
    assert len(levels(S(5, 6, 8), 7)) == 8
    with pytest.raises(NotPacked):
        levels(S(5, 13, 21), 2)


def test_tree_structure_and_monotonicity():
    for root in enumerate_packed(7, 3):
        seen = set()
        for lvl, layer in enumerate(levels(root, 6)):
            for node in layer:
                assert node.level == lvl
                assert node.semigroup not in seen
                seen.add(node.semigroup)
                assert parent(node.semigroup) == node.parent
                if node.parent is not None:
                    assert node.parent.frobenius <= node.semigroup.frobenius
                    assert node.parent.genus < node.semigroup.genus
                    assert pack(node.semigroup) == root


def test_enumeration_soundness_and_table_route():
    rng = random.Random(7)
    for root in rng.sample(list(enumerate_packed(8, 3)), 5):
        table = residue_class_table(root)
        a = enumerate_class_genus(root, 22)
        assert enumerate_class_genus(root, 22, table) == a
        for T in a:
            assert (T.m, T.e) == (8, 3) and T.genus <= 22 and pack(T) == root


@pytest.mark.parametrize("m, e, bound", [(3, 2, 12), (4, 2, 12), (4, 3, 12), (5, 4, 12), (4, 4, 10)])
def test_completeness_against_genus_tree(m, e, bound):
    universe = oracles.genus_tree(bound)
    expected = sorted(t for t in universe if len(t) == e and t[0] == m)
    got = [T.msg for T in enumerate_family_genus(m, e, bound)]
    assert got == expected


def test_frobenius_completeness_against_genus_tree():
    # g <= F for every semigroup, so genus <= 14 covers every F <= 14
    universe = oracles.genus_tree(14)
    expected = sorted(t for t in universe if len(t) == 3 and t[0] == 4 and oracles.frobenius_genus(list(t))[0] <= 14)
    assert [T.msg for T in enumerate_family_frobenius(4, 3, 14)] == expected


def test_family_extremes():
    ext = family_extremes(6, 3)
    assert ext.min_frobenius == (15, S(6, 7, 10))
    assert ext.min_genus == (9, S(6, 7, 8))
    assert ext.max_packed_frobenius == (25, S(6, 9, 11))
    with pytest.raises(BadDimensions):
        family_extremes(2, 3)


def test_family_minima_match_genus_tree():
    universe = oracles.genus_tree(12)
    for m, e in [(4, 2), (4, 3), (5, 3), (5, 4)]:
        fam = [t for t in universe if t[0] == m and len(t) == e]
        ext = family_extremes(m, e)
        assert ext.min_genus[0] == min(oracles.frobenius_genus(list(t))[1] for t in fam)

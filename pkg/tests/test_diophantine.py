import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import S
from packed_semigroups import (
    AperyTable,
    apery_from_table,
    apery_sieve,
    enumerate_packed,
    invariants_from_apery,
    minimal_congruence_solutions,
    minimal_homogeneous_solutions,
    residue_class_table,
)
from packed_semigroups.diophantine import HomogeneousEquation, build_table, minimal_elements
from packed_semigroups.errors import (
    AllZeroCoefficients,
    BadResidue,
    InconsistentTable,
    NotPacked,
    TableMismatch,
)

EXAMPLE_M = {
    1: [(0, 2), (1, 0)],
    2: [(0, 4), (1, 2), (2, 0)],
    3: [(0, 1), (3, 0)],
    4: [(0, 3), (1, 1), (4, 0)],
}


def test_homogeneous_small():
    assert minimal_homogeneous_solutions((1, -1)).vectors == ((1, 1),)
    assert minimal_homogeneous_solutions((2, -3)).vectors == ((3, 2),)
    basis = minimal_homogeneous_solutions(HomogeneousEquation((-5, 1, 3, -3)))
    assert sorted(v[1:-1] for v in basis if v[-1] == 1) == [(0, 1), (3, 0)]
    with pytest.raises(AllZeroCoefficients):
        minimal_homogeneous_solutions((0, 0))


def test_zero_coefficient_gives_unit_solution():
    assert minimal_homogeneous_solutions((0, 2, -1)).vectors == ((0, 1, 2), (1, 0, 0))


coeff_lists = st.lists(st.integers(-6, 6), min_size=2, max_size=4).filter(
    lambda c: any(x > 0 for x in c) and any(x < 0 for x in c)
)


@given(c=coeff_lists)
@settings(max_examples=60, deadline=None)
def test_homogeneous_matches_box_search(c):
    # minimal solutions of one equation have every coordinate <= max |c_j|
    bound = max(abs(x) for x in c)
    expected = oracles.box_minimal(lambda v: sum(a * b for a, b in zip(c, v)) == 0, len(c), bound)
    got = list(minimal_homogeneous_solutions(c).vectors)
    assert got == expected
    for u in got:
        assert not any(u != v and all(a <= b for a, b in zip(u, v)) for v in got)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_congruence_example(i):
    assert list(minimal_congruence_solutions(5, (1, 3), i)) == EXAMPLE_M[i]


def test_congruence_bad_residue():
    for i in (0, 5, -1):
        with pytest.raises(BadResidue):
            minimal_congruence_solutions(5, (1, 3), i)


@pytest.mark.parametrize("m, coeffs", [(7, (2, 3)), (9, (1, 4, 7)), (8, (3, 5)), (10, (4, 6, 9))])
def test_congruence_matches_box_search(m, coeffs):
    for i in range(1, m):
        expected = oracles.box_minimal(
            lambda v: sum(a * b for a, b in zip(v, coeffs)) % m == i, len(coeffs), m - 1
        )
        got = list(minimal_congruence_solutions(m, coeffs, i))
        assert got == expected
        for v in got:
            # a multiple of m can always be absorbed by the first coordinate
            assert (sum(a * b for a, b in zip(v, coeffs)) - i) % m == 0


def test_residue_table_examples():
    t = residue_class_table(S(5, 6, 8))
    assert t.residues == (1, 3)
    assert {i: list(t[i]) for i in range(1, 5)} == EXAMPLE_M
    assert residue_class_table(S(5, 6, 8), method="diophantine") == t
    assert list(residue_class_table(S(2, 3))[1]) == [(1,)]
    t678 = residue_class_table(S(6, 7, 8))
    assert list(t678[1]) == oracles.box_minimal(lambda v: (v[0] + 2 * v[1]) % 6 == 1, 2, 5) == [(1, 0)]
    with pytest.raises(NotPacked):
        residue_class_table(S(5, 6, 13))
    with pytest.raises(ValueError):
        residue_class_table(S(5, 6, 8), method="simplex")


@pytest.mark.parametrize("m", range(2, 10))
def test_table_builders_agree(m):
    for e in range(2, min(m, 4) + 1):
        for root in enumerate_packed(m, e):
            a = residue_class_table(root, "closure")
            b = residue_class_table(root, "diophantine")
            assert a == b
            assert len(a.table) == m - 1
            for i, sols in a.table.items():
                assert sols.vectors == tuple(minimal_elements(sols.vectors))
                for v in sols:
                    lifted = sum(x * n for x, n in zip(v, root.msg[1:])) - i
                    assert lifted % m == 0 and lifted >= 0


def test_apery_from_table_examples():
    t = residue_class_table(S(5, 6, 8))
    assert apery_from_table(S(5, 13, 21), t).w == (0, 21, 42, 13, 34)
    assert apery_from_table(S(5, 6, 8), t).w == apery_sieve(S(5, 6, 8), 5).w == (0, 6, 12, 8, 14)
    w = apery_from_table(S(5, 11, 18), t)
    assert w.w == (0, 11, 22, 18, 29) == tuple(oracles.apery([5, 11, 18], 5))
    assert (w.frobenius(), w.genus()) == (24, 14) == oracles.frobenius_genus([5, 11, 18])


def test_apery_from_table_mismatch():
    t = residue_class_table(S(5, 6, 8))
    for bad in [S(5, 6, 7), S(6, 7, 8), S(5, 6, 7, 8), S(5, 7, 8)]:
        with pytest.raises(TableMismatch):
            apery_from_table(bad, t)


def test_apery_from_table_handles_huge_weights():
    t = residue_class_table(S(5, 6, 8))
    big = 5 * 10**18
    T = S(5, big + 1, big + 3)
    w = apery_from_table(T, t).w
    assert w == (0, big + 1, 2 * big + 2, big + 3, big + 4 + big)


def test_invariants_from_apery():
    inv = invariants_from_apery(AperyTable(5, (0, 21, 42, 13, 34)))
    assert (inv.frobenius, inv.genus) == (37, 20) == oracles.frobenius_genus([5, 13, 21])
    inv = invariants_from_apery(AperyTable(5, (0, 6, 12, 8, 14)))
    assert (inv.frobenius, inv.genus) == (9, 6)
    inv = invariants_from_apery(AperyTable(1, (0,)))
    assert (inv.frobenius, inv.genus) == (-1, 0)
    with pytest.raises(InconsistentTable):
        invariants_from_apery(AperyTable(2, (0, 2)))

"""Partitions, characters and dimension formulas, checked against first principles."""

from math import factorial

import pytest

from rhomean.symmetry import (
    character,
    class_size,
    compose,
    conjugacy_classes,
    cycle_type,
    identity,
    inverse,
    partitions,
    symmetric_group_dimension,
    unitary_group_dimension,
)


def test_partition_counts():
    # p(n) for n = 0..8
    for n, count in enumerate([1, 1, 2, 3, 5, 7, 11, 15, 22]):
        assert len(partitions(n)) == count


def test_cycle_type_and_compose():
    assert cycle_type((0, 1, 2)) == (1, 1, 1)
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert cycle_type((1, 2, 0)) == (3,)
    swap, cyc = (1, 0, 2), (1, 2, 0)
    assert compose(swap, inverse(swap)) == identity(3)
    assert cycle_type(compose(swap, cyc)) in ((2, 1), (1, 1, 1))


def test_class_sizes_sum_to_group_order():
    for m in range(2, 7):
        classes = conjugacy_classes(m)
        assert sum(len(v) for v in classes.values()) == factorial(m)
        for ct, elems in classes.items():
            assert class_size(ct) == len(elems)


def test_s3_character_table():
    # rows: trivial, standard, sign; columns: (1,1,1), (2,1), (3,)
    table = {
        (3,): [1, 1, 1],
        (2, 1): [2, 0, -1],
        (1, 1, 1): [1, -1, 1],
    }
    for lam, row in table.items():
        got = [character(lam, mu) for mu in [(1, 1, 1), (2, 1), (3,)]]
        assert got == row


def test_s4_character_table_spot():
    assert character((2, 2), (1, 1, 1, 1)) == 2
    assert character((2, 2), (2, 1, 1)) == 0
    assert character((2, 2), (2, 2)) == 2
    assert character((2, 2), (4,)) == 0
    assert character((3, 1), (2, 2)) == -1


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_character_orthogonality(m):
    classes = conjugacy_classes(m)
    lams = partitions(m)
    for i, l1 in enumerate(lams):
        for l2 in lams[i:]:
            total = sum(
                len(elems) * character(l1, ct) * character(l2, ct)
                for ct, elems in classes.items()
            )
            assert total == (factorial(m) if l1 == l2 else 0)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_hook_dimension_equals_character_at_identity(m):
    one = tuple([1] * m)
    for lam in partitions(m):
        assert symmetric_group_dimension(lam) == character(lam, one)


def test_unitary_group_dimensions():
    # symmetric and antisymmetric powers of C^n
    from math import comb

    for n in (2, 3, 4):
        for m in (2, 3, 4):
            assert unitary_group_dimension((m,), n) == comb(n + m - 1, m)
            lam = tuple([1] * m)
            assert unitary_group_dimension(lam, n) == comb(n, m)
    # rows beyond n vanish
    assert unitary_group_dimension((1, 1, 1), 2) == 0


def test_schur_weyl_dimension_count():
    # sum over partitions of f^lam * dim U(n)-irrep = n^m
    for n in (2, 3):
        for m in (2, 3, 4, 5, 6):
            total = sum(
                symmetric_group_dimension(lam) * unitary_group_dimension(lam, n)
                for lam in partitions(m)
            )
            assert total == n**m

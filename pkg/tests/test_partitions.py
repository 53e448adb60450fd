"""Partition enumeration and the scalars attached to cycle types."""

from itertools import permutations
from math import factorial

import pytest

from splitstat.partitions import Partition, partitions_of


def partition_count_oracle(n):
    # Independent count via the classical DP over largest part.
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[k][0] = 1
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            table[k][m] = table[k - 1][m] + (table[k][m - k] if m >= k else 0)
    return table[n][n]


def cycle_type_of(perm):
    # perm maps i -> perm[i]; returns sorted cycle lengths
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def test_partitions_of_zero():
    assert partitions_of(0) == (Partition(()),)


def test_partitions_of_four_order():
    got = [list(lam.parts) for lam in partitions_of(4)]
    assert got == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_partition_counts():
    assert len(partitions_of(10)) == 42 == partition_count_oracle(10)
    for d in range(13):
        assert len(partitions_of(d)) == partition_count_oracle(d)


def test_no_duplicates_and_correct_sums():
    for d in range(13):
        lams = partitions_of(d)
        assert len(set(lams)) == len(lams)
        assert all(lam.d == d for lam in lams)
        assert all(lam.parts == tuple(sorted(lam.parts, reverse=True)) for lam in lams)


def test_centralizer_orders():
    assert Partition([1, 1, 1]).centralizer_order() == 6
    assert Partition([2]).centralizer_order() == 2
    for d in range(13):
        assert Partition([1] * d).centralizer_order() == factorial(d)


def test_class_equation():
    for d in range(13):
        assert sum(factorial(d) // lam.centralizer_order() for lam in partitions_of(d)) == factorial(d)


def test_class_sizes_against_permutation_census():
    # direct census of cycle types of all of S_d for small d
    for d in range(1, 7):
        counts = {}
        for perm in permutations(range(d)):
            t = cycle_type_of(perm)
            counts[t] = counts.get(t, 0) + 1
        for lam in partitions_of(d):
            assert counts[lam.parts] == factorial(d) // lam.centralizer_order()


def test_sign_examples():
    assert Partition([1, 1, 1]).sign() == 1
    assert Partition([2, 1, 1, 1]).sign() == -1
    assert Partition([3, 1, 1]).sign() == 1


def test_sign_closed_forms_agree():
    # product form over parts vs (-1)^(d - length)
    for d in range(11):
        for lam in partitions_of(d):
            prod = 1
            for j, m in lam.multiplicities():
                prod *= (-1) ** (m * (j - 1))
            assert lam.sign() == prod == (-1) ** (lam.d - lam.length)


def test_part_counts():
    assert Partition([2, 1, 1, 1]).mult(1) == 3
    assert Partition([3, 1, 1]).mult(2) == 0
    assert Partition([5]).mult(5) == 1
    with pytest.raises(ValueError):
        Partition([3]).mult(0)


def test_labels_and_parsing():
    lam = Partition([3, 1, 1])
    assert lam.label() == "[3,1,1]"
    assert Partition.parse("[3,1,1]") == lam
    assert Partition.parse("3,1,1") == lam
    assert Partition.parse("[]") == Partition(())
    assert lam.to_json() == [3, 1, 1]
    with pytest.raises(ValueError):
        Partition.parse("[3,x]")


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([0, 1])
    with pytest.raises(ValueError):
        Partition([-2])
    # input order does not matter
    assert Partition([1, 3, 1]).parts == (3, 1, 1)


def test_immutability():
    lam = Partition([2, 1])
    with pytest.raises(AttributeError):
        lam.d = 5

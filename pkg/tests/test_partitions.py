import pytest
from hypothesis import given, strategies as st

from forestsym.coeffs import QPoly
from forestsym.partitions import (
    compositions,
    conjugate,
    domino_weight_sum,
    enumerate_domino_tabloids,
    enumerate_partitions,
    is_partition,
    lambda_of_subset,
    sort_to_partition,
)

P_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_counts_and_order():
    assert [len(enumerate_partitions(n)) for n in range(9)] == P_COUNTS
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]


@given(st.integers(0, 8).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)
    assert is_partition(conjugate(lam))


def test_sorting():
    assert sort_to_partition((1, 3, 2)) == (3, 2, 1)
    assert sort_to_partition((2, 2, 1)) == (2, 2, 1)


def test_lambda_of_subset():
    assert lambda_of_subset(set(), 4) == (1, 1, 1, 1)
    assert lambda_of_subset({1, 2, 3}, 4) == (4,)
    # 2 glued to 3: blocks {1}, {2,3}, {4}
    assert lambda_of_subset({2}, 4) == (2, 1, 1)
    assert lambda_of_subset({1, 3}, 4) == (2, 2)
    with pytest.raises(ValueError):
        lambda_of_subset({4}, 4)


def test_compositions():
    assert len(compositions(4)) == 8
    assert all(sum(a) == 5 for a in compositions(5))


def test_domino_tabloids():
    assert domino_weight_sum((2,), (2,)) == QPoly((1, 1))
    assert domino_weight_sum((2,), (1, 1)) == QPoly((1,))
    assert domino_weight_sum((1, 1), (2,)) == QPoly()
    tabs = enumerate_domino_tabloids((3, 1), (2, 1, 1))
    assert all(t.type == (2, 1, 1) for t in tabs)
    with pytest.raises(ValueError):
        enumerate_domino_tabloids((3,), (2,))

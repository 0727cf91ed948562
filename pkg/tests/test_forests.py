from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from forestsym.coeffs import QPoly, q_factorial
from forestsym.forests import (
    IncreasingForest,
    X_complete_closed,
    X_complete_recursion,
    X_of,
    X_vertical,
    c_coefficients,
    cycle_type,
    cycles,
    enumerate_forests,
    enumerate_perms_leq,
    forest_from_permutation,
    forest_from_permutation_simple,
    forest_stats,
    forests_containing,
    perm_leq,
    q_stirling,
    sum_of_weights,
    vertical_by_inclusion_exclusion,
    vertical_by_recursion,
    weight_product,
    wt_perm,
)
from forestsym.graphs import HessenbergFunction, complete, enumerate_hessenberg, graph_of
from forestsym.symfunc import SymFunc

q = QPoly((0, 1))
H = HessenbergFunction
hessenberg = st.integers(1, 6).flatmap(lambda n: st.sampled_from(enumerate_hessenberg(n)))


def table(m):
    return {lam: c for lam, c in c_coefficients(H(m)).items()}


def test_example_tables():
    one = QPoly((1,))
    assert table((2, 3, 4, 4)) == {
        (1, 1, 1, 1): one, (2, 1, 1): 3 * one, (2, 2): one, (3, 1): 2 * one, (4,): one,
    }
    assert table((2, 4, 4, 4)) == {
        (1, 1, 1, 1): one, (2, 1, 1): q + 3, (2, 2): one, (3, 1): 2 * q + 2, (4,): q + 1,
    }
    assert table((3, 4, 4, 5, 5)) == {
        (1, 1, 1, 1, 1): one,
        (2, 1, 1, 1): 2 * q + 4,
        (2, 2, 1): 2 * q + 3,
        (3, 1, 1): q**2 + 4 * q + 3,
        (3, 2): 2 * q + 2,
        (4, 1): 2 * q**2 + 4 * q + 2,
        (5,): q**2 + 2 * q + 1,
    }


def test_eight_forests_of_shape_41():
    forests = enumerate_forests(graph_of(H((3, 4, 4, 5, 5))))
    assert sum(1 for F in forests if F.partition == (4, 1)) == 8


def test_cycles():
    w = (3, 1, 5, 2, 4)  # (1 3 5 4 2)
    assert cycles(w) == [(1, 3, 5, 4, 2)]
    assert cycle_type((2, 1, 3)) == (2, 1)


def test_three_cycles_of_k3():
    m = complete(3)
    total = sum(
        (q ** wt_perm(w, m) for w in permutations((1, 2, 3)) if cycle_type(w) == (3,)),
        QPoly(),
    )
    assert total == q + 1


def test_bijection_example_tree():
    m = H((3, 3, 5, 5, 5))
    w = (3, 1, 5, 2, 4)
    F = forest_from_permutation(w, m)
    assert sorted(F.edges) == [(1, 2), (1, 3), (3, 4), (3, 5)]
    assert forest_stats(F, graph_of(m)).total == wt_perm(w, m) == 2
    # the drawn alternative uses {2,4}, which G_m lacks, and weighs 3 in K_5
    drawn = IncreasingForest.from_edges(5, [(1, 2), (1, 3), (2, 4), (3, 5)])
    assert not drawn.is_spanning_forest_of(graph_of(m))
    assert forest_stats(drawn, graph_of(complete(5))).total == 3
    with pytest.raises(ValueError):
        forest_stats(drawn, graph_of(m))


@given(hessenberg)
def test_bijection(m):
    g = graph_of(m)
    perms = enumerate_perms_leq(m)
    images = {forest_from_permutation(w, m) for w in perms}
    assert images == set(enumerate_forests(g))
    for w in perms:
        F = forest_from_permutation(w, m)
        assert F.partition == cycle_type(w)
        assert forest_stats(F, g).total == wt_perm(w, m)
        assert forest_from_permutation_simple(w).is_spanning_forest_of(g)


def test_perm_leq():
    m = H((2, 3, 3))
    assert perm_leq((2, 3, 1), m)
    assert not perm_leq((3, 1, 2), m)


@given(hessenberg)
def test_sum_of_weights(m):
    assert sum_of_weights(m) == weight_product(m)


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("y", ["rho", "qe"])
def test_complete(n, y):
    assert X_complete_recursion(n, y) == X_complete_closed(n, y)
    if n:
        assert X_complete_recursion(n, y) == X_of(complete(n), y)


def test_complete_top_coefficient():
    assert c_coefficients(complete(4))[(4,)] == q_factorial(3)


@pytest.mark.parametrize("n", range(1, 7))
def test_stirling(n):
    c = c_coefficients(complete(n))
    for k in range(n + 1):
        assert sum((v for lam, v in c.items() if len(lam) == k), QPoly()) == q_stirling(n, k)
    assert q_stirling(3, 1) == q + 1


def test_qe_folding():
    x = X_of(H((2, 2)), "qe")
    assert x == SymFunc(2, "e", {(1, 1): QPoly((1,)), (2,): q - 1})


def test_vertical():
    m = H((2, 2))
    assert X_vertical(m, {1}) == SymFunc(2, "rho", {(2,): QPoly((1,))})
    m = H((3, 4, 4, 4))
    for S in ({1}, {2}, {1, 2}):
        assert vertical_by_recursion(m, S) == vertical_by_inclusion_exclusion(m, S)
    # a coefficient outside N[q]
    assert X_vertical(m, {1, 2}).coeff((3, 1)) == q**2 - q
    assert all({(1, 3), (2, 4)} <= set(F.edges) for F in forests_containing(m, {1, 2}))
    with pytest.raises(ValueError):
        X_vertical(H((1, 2)), {1})


@given(st.integers(2, 5).flatmap(lambda n: st.sampled_from(enumerate_hessenberg(n))))
def test_vertical_forest_sum(m):
    from forestsym.forests import vertical_forest_sum
    from forestsym.graphs import enumerate_decorations

    for d in enumerate_decorations(m):
        assert vertical_forest_sum(m, d.S) == dict(X_vertical(m, d.S).terms)


def test_vertical_forest_sum_literal_weight_overcounts():
    from forestsym.forests import vertical_forest_sum

    m = H((2, 2))
    assert vertical_forest_sum(m, {1}) == {(2,): QPoly((1,))}
    m = H((3, 4, 4, 4))
    assert vertical_forest_sum(m, {1, 2}, literal=True) != vertical_forest_sum(m, {1, 2})

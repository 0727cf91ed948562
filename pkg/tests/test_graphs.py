import pytest
from hypothesis import given, strategies as st

from forestsym.graphs import (
    Decoration,
    Graph,
    HessenbergFunction,
    complete,
    concat,
    enumerate_decorations,
    enumerate_hessenberg,
    graph_of,
    hessenberg_of,
    is_indifference,
    modular_triples,
    natural_peo_valid,
    parse_edges,
    parse_hessenberg,
    restrict,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def test_counts():
    assert [len(enumerate_hessenberg(n)) for n in range(8)] == CATALAN


def test_validation():
    with pytest.raises(ValueError):
        HessenbergFunction((1, 1))
    with pytest.raises(ValueError):
        HessenbergFunction((3, 2, 3))
    assert parse_hessenberg("2,4,4,4")(0) == 0
    assert str(parse_hessenberg("2,4,4,4")) == "2,4,4,4"


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(enumerate_hessenberg(n))))
def test_graph_round_trip(m):
    g = graph_of(m)
    assert is_indifference(g) and natural_peo_valid(g)
    assert hessenberg_of(g) == m


def test_examples():
    assert graph_of(complete(3)).edges == {(1, 2), (1, 3), (2, 3)}
    assert concat(HessenbergFunction((1,)), HessenbergFunction((2, 2))).values == (1, 3, 3)
    g = parse_edges("edges:1-2,2-3")
    assert g.n == 3 and g.has_edge(3, 2)
    path13 = Graph(3, frozenset({(1, 3)}))
    assert not is_indifference(path13)
    assert natural_peo_valid(path13)
    assert not natural_peo_valid(Graph(3, frozenset({(1, 3), (2, 3)})))


def test_modular_triples_valid():
    for n in range(2, 6):
        for t in modular_triples(n):
            assert t.recheck()
            assert t.kind in (1, 2)


def test_decorations():
    m = HessenbergFunction((2, 2))
    assert [d.S for d in enumerate_decorations(m)] == [frozenset(), frozenset({1})]
    with pytest.raises(ValueError):
        Decoration(HessenbergFunction((1, 2)), {1})
    assert restrict(HessenbergFunction((3, 4, 4, 4)), {1, 2}).values == (2, 3, 4, 4)

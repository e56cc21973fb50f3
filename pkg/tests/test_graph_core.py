import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from totalcolour import (
    DomainError,
    Edge,
    GraphConstructionError,
    Vertex,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_profile,
    edgeless_graph,
    incidence_conflicts,
    make_graph,
    path_graph,
    star_graph,
)


def small_graphs():
    return st.integers(1, 7).flatmap(
        lambda n: st.builds(
            lambda edges: make_graph(n, edges),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=12,
            ),
        )
    )


def test_make_graph_k2():
    g = make_graph(2, [(0, 1)])
    assert g.n == 2
    assert g.edges == frozenset({(0, 1)})


def test_make_graph_k3():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert len(g.edges) == 3
    assert g.max_degree == 2


def test_make_graph_deduplicates():
    g = make_graph(4, [(0, 1), (1, 0), (2, 3)])
    assert len(g.edges) == 2


def test_make_graph_rejects_self_loop():
    with pytest.raises(GraphConstructionError):
        make_graph(3, [(1, 1)])


def test_make_graph_rejects_out_of_range():
    with pytest.raises(GraphConstructionError):
        make_graph(3, [(0, 3)])


def test_edge_canonicalizes():
    assert Edge(5, 2) == Edge(2, 5)
    assert Edge(5, 2).pair == (2, 5)


def test_complete_graph_sizes():
    assert len(complete_graph(2).edges) == 1
    g5 = complete_graph(5)
    assert len(g5.edges) == 10
    assert set(g5.degrees) == {4}
    assert complete_graph(1).n == 1
    assert not complete_graph(1).edges


def test_complete_graph_rejects_zero():
    with pytest.raises(GraphConstructionError):
        complete_graph(0)


def test_builders():
    assert len(path_graph(4).edges) == 3
    assert cycle_graph(6).degrees == (2,) * 6
    s = star_graph(5)
    assert s.degree(0) == 5 and s.n == 6
    k33 = complete_bipartite(3, 3)
    assert len(k33.edges) == 9 and k33.max_degree == 3
    assert edgeless_graph(4).max_degree == 0


def test_incidence_conflicts_examples():
    k2 = complete_graph(2)
    assert incidence_conflicts(k2, Vertex(0), Vertex(1))
    assert incidence_conflicts(k2, Vertex(0), Edge(0, 1))
    p3 = path_graph(3)
    assert incidence_conflicts(p3, Edge(0, 1), Edge(1, 2))
    assert not incidence_conflicts(p3, Vertex(0), Vertex(2))


def test_incidence_conflicts_rejects_foreign_elements():
    k2 = complete_graph(2)
    with pytest.raises(DomainError):
        incidence_conflicts(k2, Vertex(5), Vertex(0))
    with pytest.raises(DomainError):
        incidence_conflicts(k2, Edge(0, 2), Vertex(0))


def test_degree_profile():
    prof = degree_profile(path_graph(4))
    assert prof.degrees == (1, 2, 2, 1)
    assert prof.max_degree == 2
    assert degree_profile(edgeless_graph(3)).max_degree == 0


@given(small_graphs())
def test_handshake_lemma(g):
    assert sum(g.degrees) == 2 * len(g.edges)


@given(small_graphs())
def test_conflicts_symmetric_irreflexive(g):
    els = list(g.elements())
    for a in els:
        assert not incidence_conflicts(g, a, a)
    for a, b in itertools.combinations(els, 2):
        assert incidence_conflicts(g, a, b) == incidence_conflicts(g, b, a)


def test_elements_canonical_order():
    g = make_graph(3, [(1, 2), (0, 1)])
    assert list(g.elements()) == [
        Vertex(0),
        Vertex(1),
        Vertex(2),
        Edge(0, 1),
        Edge(1, 2),
    ]


def test_labels_round_trip():
    g = make_graph(2, [(0, 1)], labels=["a", "b"])
    assert g.label(0) == "a"
    assert make_graph(2, [(0, 1)]).label(1) == "1"
    with pytest.raises(GraphConstructionError):
        make_graph(2, [], labels=["only-one"])

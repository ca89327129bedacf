import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordsub.core import (BIPARTITE, DIRECTED, MCOIS, MCOS, CommonSolution, GraphError,
                         OrderedGraph, OrderPreservingMap, common_edge_count, complement,
                         complete_graph, empty_graph, graph_from_edges, induced_subgraph,
                         is_ordered_subgraph_iso, path_graph, relabel, reverse,
                         verify_common_solution)
from ordsub.instances import ops_to_inclusion_class, ops_to_spiders
from ordsub.oracle import OpsInstance
from ordsub.orderings import OrderingKind, verify_ordering

from oracles import embeds
from strategies import graphs

SAMPLE = OpsInstance((4, 2, 1, 6, 3, 5), (2, 3, 1))
# v_0, v_1, v_4, v_5, v_9, v_10, v_12 at ranks t + 1
SAMPLE_IMAGES = (1, 2, 5, 6, 10, 11, 13)


def test_graph_validation():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        graph_from_edges(2, [(1, 3)])
    with pytest.raises(GraphError):
        OrderedGraph(2, BIPARTITE, frozenset({(1, 2)}), ("X", "X"))
    with pytest.raises(GraphError):
        OrderedGraph(2, BIPARTITE, frozenset())
    with pytest.raises(GraphError):
        OrderedGraph(2, "hypergraph")
    loop = OrderedGraph(1, DIRECTED, frozenset({(1, 1)}))
    assert loop.has_edge(1, 1) and loop.m == 1


def test_undirected_edges_are_normalized():
    G = graph_from_edges(3, [(3, 1), (2, 1)])
    assert G.edges == frozenset({(1, 3), (1, 2)})
    assert G.has_edge(3, 1) and G.neighbors(1) == [2, 3]


def test_map_must_increase():
    with pytest.raises(GraphError):
        OrderPreservingMap((2, 2))
    assert OrderPreservingMap((1, 4))(2) == 4


def test_identity_path_is_induced():
    P = path_graph(3)
    assert is_ordered_subgraph_iso(P, P, (1, 2, 3), induced=True)


def test_path_in_triangle_is_not_induced():
    K, P = complete_graph(3), path_graph(3)
    assert is_ordered_subgraph_iso(K, P, (1, 2, 3))
    assert not is_ordered_subgraph_iso(K, P, (1, 2, 3), induced=True)


def test_sample_witness_map_is_induced():
    red = ops_to_spiders(SAMPLE)
    assert is_ordered_subgraph_iso(red.G, red.H, SAMPLE_IMAGES, induced=True)
    assert induced_subgraph(red.G, SAMPLE_IMAGES) == red.H


def test_induced_subgraph_examples():
    K = complete_graph(3)
    assert induced_subgraph(K, (1, 3)) == graph_from_edges(2, [(1, 2)])
    G = graph_from_edges(4, [(1, 3), (2, 4)])
    assert induced_subgraph(G, (1, 2, 3, 4)) == G


def test_complement_examples():
    assert complement(empty_graph(3)) == complete_graph(3)
    red = ops_to_inclusion_class("threshold", SAMPLE)
    for X in (red.G, red.H):
        C = complement(X)
        assert verify_ordering(OrderingKind.INTERVAL, C).ok


@given(graphs(max_n=8))
def test_complement_involution(G):
    assert complement(complement(G)) == G


@given(graphs(DIRECTED, max_n=6))
def test_reverse_involution(G):
    assert reverse(reverse(G)) == G
    assert relabel(G, list(range(1, G.n + 1))) == G


@given(graphs(max_n=6), st.data())
def test_subgraph_iso_matches_definition(G, data):
    k = data.draw(st.integers(0, G.n))
    images = ()
    if G.n:
        images = tuple(sorted(data.draw(st.sets(st.integers(1, G.n), min_size=k, max_size=k))))
    H = data.draw(graphs(min_n=len(images), max_n=len(images)))
    for induced in (False, True):
        assert is_ordered_subgraph_iso(G, H, images, induced=induced) == embeds(G, H, images, induced)


def test_verify_common_solution_examples():
    K, P = complete_graph(3), path_graph(3)
    ident = ((1, 1), (2, 2), (3, 3))
    assert verify_common_solution(K, P, CommonSolution(MCOIS, (), 0)).ok
    assert verify_common_solution(K, K, CommonSolution(MCOIS, ident, 3)).ok
    rep = verify_common_solution(P, K, CommonSolution(MCOIS, ident, 3))
    assert not rep.ok and rep.detail == "induced_mismatch"
    assert verify_common_solution(P, K, CommonSolution(MCOS, ident, 2)).ok
    assert verify_common_solution(P, K, CommonSolution(MCOS, ident, 3)).detail == "value_mismatch"
    assert verify_common_solution(P, K, CommonSolution(MCOS, ((2, 1), (1, 2)), 1)).detail == "not_increasing"
    assert verify_common_solution(P, K, CommonSolution(MCOS, ((4, 1),), 0)).detail == "out_of_range"


@given(graphs(DIRECTED, max_n=5), graphs(DIRECTED, max_n=5), st.data())
def test_common_edge_count_directed(G, H, data):
    k = data.draw(st.integers(0, min(G.n, H.n)))
    gs = sorted(data.draw(st.sets(st.integers(1, G.n), min_size=k, max_size=k))) if k else []
    hs = sorted(data.draw(st.sets(st.integers(1, H.n), min_size=k, max_size=k))) if k else []
    expected = sum(1 for a in range(k) for b in range(k)
                   if G.has_edge(gs[a], gs[b]) and H.has_edge(hs[a], hs[b]))
    assert common_edge_count(G, H, list(zip(gs, hs))) == expected

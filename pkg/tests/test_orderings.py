import pytest
from hypothesis import given

from ordsub.core import (BIPARTITE, DIRECTED, UNDIRECTED, GraphError, OrderedGraph, complete_graph,
                         cycle_graph, graph_from_edges, path_graph, relabel)
from ordsub.instances import inclusion_relabeling, ops_to_inclusion_class, ops_to_spiders
from ordsub.oracle import OpsInstance
from ordsub.orderings import (InvalidDecomposition, NicePathDecomposition, classify_inclusion,
                              inclusion_classes, nice_decomposition_from_ordering,
                              ordering_pathwidth, verify_ordering)

from oracles import naive_ordering
from strategies import graphs

SAMPLE = OpsInstance((4, 2, 1, 6, 3, 5), (2, 3, 1))
PLAIN = ["interval", "comparability", "perfect_elimination", "cocomparability"]
SIDED = ["interval_bigraph", "inclusion"]
BIPARTITE_KINDS = ["weak", "comparability_weak"]


def _agree(kind, G):
    rep = verify_ordering(kind, G)
    ok, witness, detail = naive_ordering(kind, G)
    assert rep.ok == ok
    if not ok:
        assert rep.witness == witness and rep.detail == detail


@pytest.mark.parametrize("kind", PLAIN)
@given(G=graphs(max_n=7))
def test_plain_kinds_match_naive(kind, G):
    _agree(kind, G)


@pytest.mark.parametrize("kind", SIDED)
@given(G=graphs(max_n=7, sides=True))
def test_sided_kinds_match_naive(kind, G):
    _agree(kind, G)


@pytest.mark.parametrize("kind", BIPARTITE_KINDS + ["interval_bigraph", "inclusion"])
@given(G=graphs(BIPARTITE, max_n=8))
def test_bipartite_kinds_match_naive(kind, G):
    _agree(kind, G)


@given(G=graphs(DIRECTED, max_n=6))
def test_min_matches_naive(G):
    _agree("min", G)


def test_kind_mismatch_rejected():
    with pytest.raises(GraphError):
        verify_ordering("min", path_graph(3))
    with pytest.raises(GraphError):
        verify_ordering("interval", OrderedGraph(2, DIRECTED))
    with pytest.raises(GraphError):
        verify_ordering("weak", path_graph(3))


@pytest.mark.parametrize("kind", PLAIN)
def test_clique_verifies(kind):
    assert verify_ordering(kind, complete_graph(4)).ok


def test_c4_is_not_interval():
    rep = verify_ordering("interval", cycle_graph(4))
    assert not rep.ok
    assert rep.witness == (1, 2, 4)
    assert rep.line() == "FAIL witness=(1,2,4) reason=interval"


def test_threshold_construction_inclusion_ordering():
    red = ops_to_inclusion_class("threshold", SAMPLE)
    for X, perm in ((red.G, SAMPLE.pi), (red.H, SAMPLE.rho)):
        ordered = relabel(X, inclusion_relabeling(len(perm), perm))
        assert verify_ordering("inclusion", ordered).ok
        assert classify_inclusion(ordered) == "threshold"


def test_classify_examples():
    star = OrderedGraph(4, UNDIRECTED, frozenset({(1, 4), (2, 4), (3, 4)}), ("Y", "Y", "Y", "X"))
    assert classify_inclusion(star) == "threshold"
    k22 = OrderedGraph(4, BIPARTITE, frozenset({(1, 3), (1, 4), (2, 3), (2, 4)}), ("Y", "Y", "X", "X"))
    assert classify_inclusion(k22) == "chain"
    red = ops_to_inclusion_class("chain", SAMPLE)
    ordered = relabel(red.G, inclusion_relabeling(SAMPLE.n, SAMPLE.pi))
    assert classify_inclusion(ordered) == "chain"
    bad = OrderedGraph(2, UNDIRECTED, frozenset(), ("X", "Y"))
    assert classify_inclusion(OrderedGraph(2, UNDIRECTED, frozenset(), ("Y", "X"))) == "threshold"
    with pytest.raises(GraphError):
        inclusion_classes(bad)


def _separation(G):
    best = 0
    for i in range(1, G.n + 1):
        best = max(best, sum(1 for u in range(1, i + 1)
                             if any(G.has_edge(u, w) for w in range(i + 1, G.n + 1))))
    return best


def test_pathwidth_examples():
    assert ordering_pathwidth(path_graph(6)) == 1
    assert ordering_pathwidth(complete_graph(5)) == 4
    spider = ops_to_spiders(SAMPLE).G
    assert ordering_pathwidth(spider) == _separation(spider) == 6


@given(graphs(max_n=9))
def test_pathwidth_matches_direct_count(G):
    assert ordering_pathwidth(G) == _separation(G)


def test_decomposition_of_path():
    D = nice_decomposition_from_ordering(path_graph(3))
    assert [set(b) for b in D.bags] == [set(), {1}, {1, 2}, {2}, {2, 3}, {3}, set()]
    assert D.width == 1


def test_decomposition_of_triangle():
    D = nice_decomposition_from_ordering(complete_graph(3))
    assert D.width == 2 and frozenset({1, 2, 3}) in D.bags


@given(graphs(max_n=8))
def test_decomposition_invariants(G):
    D = nice_decomposition_from_ordering(G)
    D.validate(G)
    assert D.width == ordering_pathwidth(G)
    assert D.introduce_order == tuple(range(1, G.n + 1))


def test_validate_rejects_broken():
    G = graph_from_edges(3, [(1, 3)])
    D = nice_decomposition_from_ordering(G)
    # forget 1 right after introducing it: edge (1, 3) lands in no bag
    bags = (frozenset(), frozenset({1}), frozenset(), frozenset({2}), frozenset(),
            frozenset({3}), frozenset())
    kinds = (("introduce", 1), ("forget", 1), ("introduce", 2), ("forget", 2),
             ("introduce", 3), ("forget", 3))
    with pytest.raises(InvalidDecomposition):
        NicePathDecomposition(bags, kinds, 0, (1, 2, 3)).validate(G)
    with pytest.raises(InvalidDecomposition):
        NicePathDecomposition(D.bags, D.kinds, D.width + 1, D.introduce_order).validate(G)
    with pytest.raises(InvalidDecomposition):
        NicePathDecomposition(D.bags[:-1], D.kinds[:-1], D.width, D.introduce_order).validate(G)

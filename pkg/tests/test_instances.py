import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordsub.core import BIPARTITE, GraphError, OrderedGraph, cycle_graph, is_ordered_subgraph_iso
from ordsub.instances import (CLASS_KIND, bb_to_ordered, complete_bipartite, inclusion_map,
                              is_trivially_perfect, ops_to_disjoint_edges, ops_to_inclusion_class,
                              ops_to_interval_ordered, ops_to_spiders, ops_to_trivially_perfect,
                              random_instance, spider_map, spider_witness)
from ordsub.io import format_og
from ordsub.oracle import OISI, OSI, OpsInstance, brute_ops, brute_ordered_iso, ops_matches
from ordsub.orderings import ordering_pathwidth, verify_ordering

from oracles import min_cover_size

SAMPLE = OpsInstance((4, 2, 1, 6, 3, 5), (2, 3, 1))


def _legs(T, n):
    """Legs as (v_0, v_i, v_j) index triples (rank - 1)."""
    legs = []
    for mid in range(2, n + 2):
        (leaf,) = [w for w in T.neighbors(mid) if w != 1]
        legs.append((0, mid - 1, leaf - 1))
    return legs


def test_sample_spiders():
    red = ops_to_spiders(SAMPLE)
    assert red.G.n == 13 and red.H.n == 7
    assert _legs(red.G, 6) == [(0, 1, 10), (0, 2, 8), (0, 3, 7), (0, 4, 12), (0, 5, 9), (0, 6, 11)]
    assert _legs(red.H, 3) == [(0, 1, 5), (0, 2, 6), (0, 3, 4)]


def test_smallest_spiders_are_p3():
    red = ops_to_spiders(OpsInstance((1,), (1,)))
    assert red.G.edges == frozenset({(1, 2), (2, 3)})
    assert red.G == red.H
    assert brute_ordered_iso(OSI, red.G, red.H) is not None


def test_trivially_perfect_variant():
    red = ops_to_trivially_perfect(SAMPLE)
    assert red.G.m == 18
    assert is_trivially_perfect(red.G) and is_trivially_perfect(red.H)
    one = ops_to_trivially_perfect(OpsInstance((1,), (1,))).G
    assert one.edges == frozenset({(1, 2), (1, 3), (2, 3)})
    assert not is_trivially_perfect(cycle_graph(4))


def test_disjoint_edges_variant():
    red = ops_to_disjoint_edges(SAMPLE)
    assert (red.G.m, red.H.m) == (6, 3)
    assert ops_to_disjoint_edges(OpsInstance((1,), (1,))).G.m == 1


@pytest.mark.parametrize("kind", ["threshold", "chain", "cochain"])
def test_inclusion_classes_sample(kind):
    red = ops_to_inclusion_class(kind, SAMPLE)
    idx = brute_ops(SAMPLE)
    f = inclusion_map(SAMPLE, idx)
    assert is_ordered_subgraph_iso(red.G, red.H, f.images, induced=True)
    tiny = ops_to_inclusion_class(kind, OpsInstance((1,), (1,)))
    assert brute_ordered_iso(OISI, tiny.G, tiny.H) is not None


@pytest.mark.parametrize("flavor", ["interval", "interval_bigraph"])
def test_interval_flavours_verify(flavor):
    red = ops_to_interval_ordered(flavor, SAMPLE)
    assert red.provenance["reduction"] == flavor
    tiny = ops_to_interval_ordered(flavor, OpsInstance((1,), (1,)))
    assert brute_ordered_iso(OISI, tiny.G, tiny.H) is not None


def test_unknown_names():
    with pytest.raises(GraphError):
        ops_to_inclusion_class("split", SAMPLE)
    with pytest.raises(GraphError):
        ops_to_interval_ordered("circle", SAMPLE)
    with pytest.raises(GraphError):
        bb_to_ordered("threshold", complete_bipartite(2), 2)
    with pytest.raises(GraphError):
        random_instance("petersen", 4, 0.5, 0)


@given(st.permutations(range(1, 6)), st.integers(1, 3), st.data())
def test_spider_witness_roundtrip(pi, k, data):
    rho = data.draw(st.permutations(range(1, k + 1)))
    inst = OpsInstance(tuple(pi), tuple(rho))
    red = ops_to_spiders(inst)
    idx = brute_ops(inst)
    f = brute_ordered_iso(OSI, red.G, red.H)
    assert (idx is None) == (f is None)
    if idx is not None:
        assert is_ordered_subgraph_iso(red.G, red.H, spider_map(inst, idx).images, induced=True)
        assert ops_matches(inst, spider_witness(inst, f))


def test_biclique_examples():
    red = bb_to_ordered("split", complete_bipartite(2), 2)
    assert brute_ordered_iso(OSI, red.G, red.H) is not None
    c6 = OrderedGraph(6, BIPARTITE, cycle_graph(6).edges, tuple("XY" * 3))
    for kind in ("split", "cobipartite"):
        red = bb_to_ordered(kind, c6, 2)
        assert brute_ordered_iso(OSI, red.G, red.H) is None


def test_biclique_patterns_cannot_hide_in_a_clique():
    # no Y side at all, so no K_{1,1}; the pattern must not fit in the X clique
    lonely = OrderedGraph(4, BIPARTITE, frozenset(), ("X",) * 4)
    red = bb_to_ordered("split", lonely, 1)
    assert red.H.n == 2 + 4 + 1
    assert brute_ordered_iso(OSI, red.G, red.H) is None
    # many Y vertices, one edge: Y' u Y u {u} is a big clique of the host
    side = ("X", "X") + ("Y",) * 6
    sparse = OrderedGraph(8, BIPARTITE, frozenset({(1, 3)}), side)
    red = bb_to_ordered("cobipartite", sparse, 2)
    assert brute_ordered_iso(OSI, red.G, red.H) is None


@pytest.mark.parametrize("cls", sorted(CLASS_KIND))
def test_generators_verify_their_kind(cls):
    for seed in range(1000):
        n = seed % 13
        G = random_instance(cls, n, (seed % 10) / 9, seed)
        assert verify_ordering(CLASS_KIND[cls], G).ok


def test_bounded_generators():
    for seed in range(200):
        w, p = seed % 5, seed % 4
        G = random_instance("bounded_pathwidth", 2 + seed % 9, 0.7, seed, param=w)
        assert ordering_pathwidth(G) <= w
        V = random_instance("bounded_vc", 2 + seed % 9, 0.7, seed, param=p)
        assert min_cover_size(V) <= p


def test_density_extremes():
    for cls in ("interval", "2dor", "signed_interval", "threshold", "chain", "cochain", "arbitrary"):
        G = random_instance(cls, 7, 0.0, 3)
        assert G.m == 0 or cls == "cochain"
    K = random_instance("interval", 6, 1.0, 3)
    assert K.m == 15 and verify_ordering("interval", K).ok


def test_generators_deterministic():
    for cls in ("interval", "2dor", "signed_interval", "threshold", "chain", "cochain", "arbitrary"):
        a = format_og(random_instance(cls, 9, 0.5, 42))
        b = format_og(random_instance(cls, 9, 0.5, 42))
        assert a == b
    assert random_instance("threshold", 0, 0.5, 1).n == 0

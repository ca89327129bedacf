"""Hardness reductions as instance generators, and seeded random graph classes.

Reduction vertices are laid out so that the rank order equals the ordering
used by the construction.  Each builder checks the structural claim of its
reduction before returning, so a bad instance never escapes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .core import (BIPARTITE, DIRECTED, UNDIRECTED, GraphError, OrderPreservingMap,
                   OrderedGraph, complement, graph_from_edges, relabel)
from .oracle import OpsInstance
from .orderings import OrderingKind, verify_ordering

INCLUSION_KINDS = ("threshold", "chain", "cochain")
CLASSES = ("interval", "2dor", "signed_interval", "threshold", "chain", "cochain",
           "arbitrary", "bounded_pathwidth", "bounded_vc")

# ordering kind that a generated class is guaranteed to satisfy
CLASS_KIND = {
    "interval": OrderingKind.INTERVAL,
    "2dor": OrderingKind.COMPARABILITY_WEAK,
    "signed_interval": OrderingKind.MIN,
    "threshold": OrderingKind.INCLUSION,
    "chain": OrderingKind.INCLUSION,
    "cochain": OrderingKind.INCLUSION,
}


@dataclass(frozen=True)
class ReducedInstance:
    G: OrderedGraph
    H: OrderedGraph
    provenance: dict = field(default_factory=dict)


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise AssertionError(f"reduction produced a malformed instance: {what}")


# spiders and relatives

def _spider_edges(perm, center=True):
    """Legs ``(v_0, v_i, v_{n+perm(i)})`` with ``v_t`` at rank ``t + 1``."""
    n = len(perm)
    shift = 1 if center else 0
    edges = [(i + shift, n + p + shift) for i, p in enumerate(perm, 1)]
    if center:
        edges += [(1, i + 1) for i in range(1, n + 1)]
    return 2 * n + shift, edges


def _is_spider(G: OrderedGraph, legs: int) -> bool:
    if G.m != G.n - 1 or G.degree(1) != legs:
        return False
    middles = G.neighbors(1)
    leaves = [v for v in range(2, G.n + 1) if v not in middles]
    return (all(G.degree(v) == 2 for v in middles)
            and all(G.degree(v) == 1 for v in leaves)
            and len(leaves) == legs)


def is_trivially_perfect(G: OrderedGraph) -> bool:
    """Closed neighbourhoods of adjacent vertices are always nested."""
    closed = [G.nbr_mask(v) | 1 << v for v in range(G.n + 1)]
    for u, v in G.edges:
        a, b = closed[u], closed[v]
        if a & b not in (a, b):
            return False
    return True


def ops_to_spiders(inst: OpsInstance) -> ReducedInstance:
    nG, eG = _spider_edges(inst.pi)
    nH, eH = _spider_edges(inst.rho)
    G, H = graph_from_edges(nG, eG), graph_from_edges(nH, eH)
    _require(_is_spider(G, inst.n) and _is_spider(H, inst.k), "spider shape")
    return ReducedInstance(G, H, {"reduction": "spider", "pi": inst.pi, "rho": inst.rho})


def ops_to_trivially_perfect(inst: OpsInstance) -> ReducedInstance:
    def build(perm):
        n, edges = _spider_edges(perm)
        edges += [(1, len(perm) + t + 1) for t in range(1, len(perm) + 1)]
        return graph_from_edges(n, edges)

    G, H = build(inst.pi), build(inst.rho)
    _require(is_trivially_perfect(G) and is_trivially_perfect(H), "trivially perfect")
    return ReducedInstance(G, H, {"reduction": "tperfect", "pi": inst.pi, "rho": inst.rho})


def ops_to_disjoint_edges(inst: OpsInstance) -> ReducedInstance:
    nG, eG = _spider_edges(inst.pi, center=False)
    nH, eH = _spider_edges(inst.rho, center=False)
    G, H = graph_from_edges(nG, eG), graph_from_edges(nH, eH)
    for X, size in ((G, inst.n), (H, inst.k)):
        _require(X.m == size and all(X.degree(v) == 1 for v in range(1, X.n + 1)),
                 "perfect matching")
    return ReducedInstance(G, H, {"reduction": "edges", "pi": inst.pi, "rho": inst.rho})


def spider_map(inst: OpsInstance, idx) -> OrderPreservingMap:
    """Map of ``T_H`` into ``T_G`` induced by an OPS witness ``idx``."""
    n, k = inst.n, inst.k
    images = {0: 0}
    for j, i in enumerate(idx, 1):
        images[j] = i
        images[k + inst.rho[j - 1]] = n + inst.pi[i - 1]
    return OrderPreservingMap([images[t] + 1 for t in range(2 * k + 1)])


def spider_witness(inst: OpsInstance, f) -> tuple:
    """OPS witness read off a spider map: the images of the middle vertices."""
    return tuple(f.images[j] - 1 for j in range(1, inst.k + 1))


# threshold / chain / cochain

def _nested(perm, kind, drop_mid=False):
    """Graph with ``N(v_i) & Y = {v_{n+perm(j)} : j >= i}``.

    Ranks: ``v_1..v_n``, then ``v_mid`` (unless dropped), then
    ``v_{n+1}..v_{2n}``.
    """
    n = len(perm)
    mid = 0 if drop_mid else 1
    X = list(range(1, n + 1 + mid))
    Y = [n + mid + t for t in range(1, n + 1)]
    edges = set()
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            edges.add((i, Y[perm[j - 1] - 1]))
    if kind in ("threshold", "cochain"):
        edges.update(combinations(X, 2))
    if kind == "cochain":
        edges.update(combinations(Y, 2))
    side = ("X",) * len(X) + ("Y",) * n
    gkind = BIPARTITE if kind == "chain" else UNDIRECTED
    return OrderedGraph(len(X) + n, gkind, frozenset(edges), side)


def inclusion_relabeling(n: int, perm, drop_mid: bool = False) -> list[int]:
    """Old ranks in inclusion order: Y by ``perm``, then ``v_mid, v_n, ..., v_1``."""
    mid = 0 if drop_mid else 1
    Y = [n + mid + perm[j - 1] for j in range(1, n + 1)]
    X = ([n + 1] if mid else []) + list(range(n, 0, -1))
    return Y + X


def ops_to_inclusion_class(kind: str, inst: OpsInstance, drop_mid: bool = False) -> ReducedInstance:
    if kind not in INCLUSION_KINDS:
        raise GraphError(f"unknown inclusion class {kind!r}")
    G = _nested(inst.pi, kind, drop_mid)
    H = _nested(inst.rho, kind, drop_mid)
    for X, perm in ((G, inst.pi), (H, inst.rho)):
        ordered = relabel(X, inclusion_relabeling(len(perm), perm, drop_mid))
        _require(verify_ordering(OrderingKind.INCLUSION, ordered).ok, "inclusion ordering")
    return ReducedInstance(G, H, {"reduction": kind, "pi": inst.pi, "rho": inst.rho,
                                  "drop_mid": drop_mid})


def ops_to_interval_ordered(flavor: str, inst: OpsInstance, drop_mid: bool = False) -> ReducedInstance:
    """Interval flavour: complemented threshold instance in the same order.

    Interval-bigraph flavour: the chain instance reordered as
    ``(v_mid, v_n, ..., v_1, v_2n, ..., v_n+1)``.  Putting ``v_mid`` first is
    what makes this an interval bigraph ordering; after ``v_1`` it would
    break the pattern with any Y-neighbour of ``v_1``.
    """
    if flavor == "interval":
        base = ops_to_inclusion_class("threshold", inst, drop_mid)
        G, H = complement(base.G), complement(base.H)
        kind = OrderingKind.INTERVAL
    elif flavor == "interval_bigraph":
        base = ops_to_inclusion_class("chain", inst, drop_mid)
        mid = 0 if drop_mid else 1

        def order(n):
            head = [n + 1] if mid else []
            return head + list(range(n, 0, -1)) + list(range(2 * n + mid, n + mid, -1))

        G = relabel(base.G, order(inst.n))
        H = relabel(base.H, order(inst.k))
        kind = OrderingKind.INTERVAL_BIGRAPH
    else:
        raise GraphError(f"unknown flavor {flavor!r}")
    _require(verify_ordering(kind, G).ok and verify_ordering(kind, H).ok, f"{kind.value} ordering")
    return ReducedInstance(G, H, {"reduction": flavor, "pi": inst.pi, "rho": inst.rho,
                                  "drop_mid": drop_mid})


def inclusion_map(inst: OpsInstance, idx, drop_mid: bool = False) -> OrderPreservingMap:
    """Induced map of ``H`` into ``G`` (natural order) from an OPS witness."""
    n, k = inst.n, inst.k
    mid = 0 if drop_mid else 1
    images = {}
    if mid:
        images[k + 1] = n + 1
    for j, i in enumerate(idx, 1):
        images[j] = i
        images[k + mid + inst.rho[j - 1]] = n + mid + inst.pi[i - 1]
    return OrderPreservingMap([images[t] for t in range(1, 2 * k + mid + 1)])


# balanced biclique

def complete_bipartite(k: int) -> OrderedGraph:
    """``K_{k,k}`` with the X side first."""
    side = ("X",) * k + ("Y",) * k
    edges = [(a, k + b) for a in range(1, k + 1) for b in range(1, k + 1)]
    return OrderedGraph(2 * k, BIPARTITE, frozenset(edges), side)


def _split_from(B: OrderedGraph, n: int) -> OrderedGraph:
    """Clique on X plus an apex with ``n`` pendant leaves.

    As in the cobipartite case, ``n`` is the source graph's size on both
    sides; fewer leaves would let the pattern fit inside the X clique.
    """
    if B.side is None:
        raise GraphError("balanced biclique reduction needs a side map")
    X, Y = B.ranks_on("X"), B.ranks_on("Y")
    pos, r = {}, 0
    for y in Y:
        r += 1
        pos[y] = r
    L = list(range(r + 1, r + n + 1))
    apex = r + n + 1
    r = apex
    for x in X:
        r += 1
        pos[x] = r
    edges = {(pos[a], pos[b]) for a, b in B.edges}
    edges.update((leaf, apex) for leaf in L)
    clique = [apex] + [pos[x] for x in X]
    edges.update(combinations(clique, 2))
    return graph_from_edges(r, edges)


def _cobipartite_from(B: OrderedGraph, n: int) -> OrderedGraph:
    """Pad with two cliques of ``n`` vertices and a universal vertex.

    Both sides use the source graph's size as ``n``; padding the pattern by
    its own size lets it sink into one big clique of the host, since the map
    need not be induced.
    """
    if B.side is None:
        raise GraphError("balanced biclique reduction needs a side map")
    X, Y = B.ranks_on("X"), B.ranks_on("Y")
    Yp = list(range(1, n + 1))
    pos, r = {}, n
    for y in Y:
        r += 1
        pos[y] = r
    apex = r = r + 1
    for x in X:
        r += 1
        pos[x] = r
    Xp = list(range(r + 1, r + n + 1))
    total = r + n
    edges = {(pos[a], pos[b]) for a, b in B.edges}
    edges.update(combinations(Yp + [pos[y] for y in Y], 2))
    edges.update(combinations([pos[x] for x in X] + Xp, 2))
    edges.update((v, apex) for v in range(1, total + 1) if v != apex)
    return graph_from_edges(total, edges)


def bb_to_ordered(kind: str, B: OrderedGraph, k: int) -> ReducedInstance:
    if B.kind != BIPARTITE:
        raise GraphError("balanced biclique reduction needs a bipartite graph")
    if k < 1:
        raise GraphError("k must be positive")
    K = complete_bipartite(k)
    if kind == "split":
        G, H = _split_from(B, B.n), _split_from(K, B.n)
        check = OrderingKind.PERFECT_ELIMINATION
    elif kind == "cobipartite":
        G, H = _cobipartite_from(B, B.n), _cobipartite_from(K, B.n)
        check = OrderingKind.COCOMPARABILITY
    else:
        raise GraphError(f"unknown kind {kind!r}")
    _require(verify_ordering(check, G).ok and verify_ordering(check, H).ok, f"{check.value} ordering")
    return ReducedInstance(G, H, {"reduction": kind, "k": k, "source": B})


# random graph classes

def _interval(rng, n, density):
    """Random closed intervals ordered by right endpoint.

    With that order, ``u < v < w`` and ``I_u`` meeting ``I_w`` give
    ``l_w <= r_u <= r_v``, so ``I_v`` meets ``I_w`` as the ordering requires.
    """
    spans = []
    for _ in range(n):
        left = rng.random()
        spans.append((left, left + density * (1 + rng.random())))
    spans.sort(key=lambda s: (s[1], s[0]))
    edges = [(i + 1, j + 1) for i, j in combinations(range(n), 2)
             if spans[j][0] <= spans[i][1] and spans[i][0] <= spans[j][1]]
    return graph_from_edges(n, edges)


def _two_dor(rng, n, density):
    """Rightward rays from ``(a, b)`` for X, downward rays from ``(c, d)`` for Y.

    They meet iff ``a <= c`` and ``b <= d``.  X sorted by ``a`` and Y by
    decreasing ``d`` is a weak ordering; X before Y makes it comparability.
    """
    nx = sum(rng.random() < 0.5 for _ in range(n))
    xs = sorted((rng.random(), rng.random()) for _ in range(nx))
    ys = [(rng.random(), rng.random() + 2 * density - 1) for _ in range(n - nx)]
    ys.sort(key=lambda p: -p[1])
    edges = [(i + 1, nx + j + 1) for i, (a, b) in enumerate(xs)
             for j, (c, d) in enumerate(ys) if a <= c and b <= d]
    side = ("X",) * nx + ("Y",) * (n - nx)
    return OrderedGraph(n, BIPARTITE, frozenset(edges), side)


def _signed_interval(rng, n, density):
    """Random arcs, then the arcs forced by the min rule.

    Two arcs ``(i, j)``, ``(i2, j2)`` with ``i < i2`` force ``(i, j2)``
    exactly when ``j2 < j``, so row ``i`` must contain every later-row head
    below its own largest head.  Rows only depend on later rows, hence one
    sweep from the last row reaches the fixpoint.
    """
    rows = [0] * (n + 2)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if rng.random() < density:
                rows[i] |= 1 << j
    later = 0
    for i in range(n, 0, -1):
        top = rows[i].bit_length() - 1
        if top > 0:
            rows[i] |= later & ((1 << top) - 1)
        later |= rows[i]
    arcs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if rows[i] >> j & 1]
    return graph_from_edges(n, arcs, DIRECTED)


def _nested_random(rng, n, density, kind):
    if kind == "threshold":
        nx = sum(rng.random() < density for _ in range(n))
    else:
        nx = sum(rng.random() < 0.5 for _ in range(n))
    ny = n - nx
    # x_i is adjacent to the last sizes[i] vertices of Y; sizes grow along X
    if kind == "threshold":
        sizes = sorted(rng.randint(0, ny) for _ in range(nx))
    else:
        sizes = sorted(sum(rng.random() < density for _ in range(ny)) for _ in range(nx))
    Y = list(range(1, ny + 1))
    X = list(range(ny + 1, n + 1))
    edges = {(y, x) for x, s in zip(X, sizes) for y in Y[ny - s:]}
    if kind in ("threshold", "cochain"):
        edges.update(combinations(X, 2))
    if kind == "cochain":
        edges.update(combinations(Y, 2))
    side = ("Y",) * ny + ("X",) * nx
    return OrderedGraph(n, BIPARTITE if kind == "chain" else UNDIRECTED, frozenset(edges), side)


def _arbitrary(rng, n, density):
    return graph_from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < density])


def _bounded_pathwidth(rng, n, density, w):
    """Keep a random edge only if the ordering's vertex separation stays <= w."""
    cand = [e for e in combinations(range(1, n + 1), 2) if rng.random() < density]
    rng.shuffle(cand)
    last = list(range(n + 1))

    def width():
        diff = [0] * (n + 2)
        for u in range(1, n + 1):
            if last[u] > u:
                diff[u] += 1
                diff[last[u]] -= 1
        run = best = 0
        for i in range(1, n + 1):
            run += diff[i]
            best = max(best, run)
        return best

    edges = []
    for u, v in cand:
        old = last[u]
        last[u] = max(old, v)
        if width() <= w:
            edges.append((u, v))
        else:
            last[u] = old
    return graph_from_edges(n, edges)


def _bounded_vc(rng, n, density, p):
    cover = set(rng.sample(range(1, n + 1), min(p, n)))
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2)
             if (u in cover or v in cover) and rng.random() < density]
    return graph_from_edges(n, edges)


def random_instance(cls: str, n: int, density: float, seed: int, param: int | None = None) -> OrderedGraph:
    """Seeded random graph of class ``cls`` whose identity order fits the class.

    ``param`` is the width bound for ``bounded_pathwidth`` and the cover size
    for ``bounded_vc``.
    """
    if cls not in CLASSES:
        raise GraphError(f"unknown class {cls!r}")
    if n < 0 or not 0 <= density <= 1:
        raise GraphError("need n >= 0 and density in [0, 1]")
    if cls in ("bounded_pathwidth", "bounded_vc") and (param is None or param < 0):
        raise GraphError(f"{cls} needs a non-negative parameter")
    rng = random.Random(seed)
    if cls == "interval":
        G = _interval(rng, n, density)
    elif cls == "2dor":
        G = _two_dor(rng, n, density)
    elif cls == "signed_interval":
        G = _signed_interval(rng, n, density)
    elif cls in INCLUSION_KINDS:
        G = _nested_random(rng, n, density, cls)
    elif cls == "arbitrary":
        G = _arbitrary(rng, n, density)
    elif cls == "bounded_pathwidth":
        G = _bounded_pathwidth(rng, n, density, param)
    else:
        G = _bounded_vc(rng, n, density, param)
    kind = CLASS_KIND.get(cls)
    if kind is not None:
        _require(verify_ordering(kind, G).ok, f"{cls} generator ordering")
    return G

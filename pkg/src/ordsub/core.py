"""Ordered graphs, order-preserving maps and solution checks.

A vertex is identified with its rank in the vertex ordering, so every graph
here lives on ranks ``1..n`` and the ordering is implicit.  Adjacency is kept
as one Python int per vertex (bit ``v`` set means an edge/arc to ``v``), which
gives O(1) membership tests and cheap set algebra for the solvers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

UNDIRECTED = "undirected"
DIRECTED = "directed"
BIPARTITE = "bipartite"
KINDS = (UNDIRECTED, DIRECTED, BIPARTITE)

MCOS = "MCOS"
MCOIS = "MCOIS"


class GraphError(ValueError):
    """Malformed graph, map or mismatched inputs."""


class PreconditionFailed(ValueError):
    """An algorithm's ordering precondition does not hold.

    ``report`` carries the verifier output with its witness tuple.
    """

    def __init__(self, message: str, report: "VerifyReport | None" = None):
        super().__init__(message)
        self.report = report


class GuardExceeded(RuntimeError):
    """An exponential routine was asked to run above its size guard."""


@dataclass(frozen=True, eq=False)
class OrderedGraph:
    """Graph on ranks ``1..n`` whose vertex ordering is the identity.

    ``edges`` holds ``(i, j)`` with ``i < j`` for undirected and bipartite
    graphs, and arcs ``(tail, head)`` (loops allowed) for directed graphs.
    ``side`` maps rank ``v`` to ``side[v - 1]`` in ``{"X", "Y"}``; it is
    mandatory for bipartite graphs and optional partition metadata for
    undirected ones (threshold and cochain instances carry it).
    """

    n: int
    kind: str = UNDIRECTED
    edges: frozenset = frozenset()
    side: tuple | None = None
    out_adj: tuple = field(init=False, repr=False)
    in_adj: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        if self.kind not in KINDS:
            raise GraphError(f"unknown graph kind {self.kind!r}")
        edges = set()
        for e in self.edges:
            i, j = int(e[0]), int(e[1])
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge ({i}, {j}) out of range 1..{self.n}")
            if self.kind == DIRECTED:
                edges.add((i, j))
                continue
            if i == j:
                raise GraphError(f"loop at {i} in an undirected graph")
            edges.add((min(i, j), max(i, j)))
        side = self.side
        if side is not None:
            side = tuple(side)
            if len(side) != self.n or any(s not in ("X", "Y") for s in side):
                raise GraphError("side map must give X or Y for every rank")
            if self.kind == DIRECTED:
                raise GraphError("directed graphs carry no side map")
        if self.kind == BIPARTITE:
            if side is None:
                raise GraphError("bipartite graph without a side map")
            for i, j in edges:
                if side[i - 1] == side[j - 1]:
                    raise GraphError(f"edge ({i}, {j}) inside side {side[i - 1]}")
        out_adj = [0] * (self.n + 1)
        in_adj = [0] * (self.n + 1)
        for i, j in edges:
            out_adj[i] |= 1 << j
            in_adj[j] |= 1 << i
            if self.kind != DIRECTED:
                out_adj[j] |= 1 << i
                in_adj[i] |= 1 << j
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "out_adj", tuple(out_adj))
        object.__setattr__(self, "in_adj", tuple(in_adj))

    @property
    def directed(self) -> bool:
        return self.kind == DIRECTED

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        """Edge test; for digraphs this is the arc ``(u, v)``."""
        return bool(self.out_adj[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        """Adjacency ignoring direction."""
        return bool((self.out_adj[u] | self.in_adj[u]) >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.out_adj[v] | self.in_adj[v])

    def nbr_mask(self, v: int) -> int:
        return self.out_adj[v] | self.in_adj[v]

    def degree(self, v: int) -> int:
        return (self.out_adj[v] | self.in_adj[v]).bit_count()

    def side_of(self, v: int) -> str:
        if self.side is None:
            raise GraphError("graph has no side map")
        return self.side[v - 1]

    def ranks_on(self, s: str) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.side_of(v) == s]

    def __eq__(self, other):
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return (self.n, self.kind, self.edges, self.side) == (
            other.n, other.kind, other.edges, other.side)

    def __hash__(self):
        return hash((self.n, self.kind, self.edges, self.side))

    def __repr__(self):
        return f"OrderedGraph(n={self.n}, kind={self.kind!r}, m={self.m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class OrderPreservingMap:
    """Images ``f(u_1), ..., f(u_k)`` of an order-preserving injection.

    Strictly increasing images encode injectivity and order preservation at
    once.
    """

    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if any(a >= b for a, b in zip(images, images[1:])):
            raise GraphError(f"images {images} are not strictly increasing")
        if images and images[0] < 1:
            raise GraphError("images must be positive ranks")
        object.__setattr__(self, "images", images)

    def __len__(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __call__(self, u: int) -> int:
        """Image of H-vertex ``u`` (1-based)."""
        return self.images[u - 1]


@dataclass(frozen=True)
class CommonSolution:
    """Matched pairs ``(g_rank, h_rank)`` and the objective value."""

    variant: str
    pairs: tuple
    value: int

    def __post_init__(self):
        if self.variant not in (MCOS, MCOIS):
            raise GraphError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "pairs", tuple((int(g), int(h)) for g, h in self.pairs))


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    witness: tuple | None = None
    detail: str = "ok"

    def __post_init__(self):
        if self.ok != (self.witness is None):
            raise ValueError("a report carries a witness exactly when it fails")

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        if self.ok:
            return "OK"
        wit = ",".join(str(x) for x in self.witness)
        return f"FAIL witness=({wit}) reason={self.detail}"


PASS = VerifyReport(True)


def fail(witness: Iterable[int], detail: str) -> VerifyReport:
    return VerifyReport(False, tuple(witness), detail)


def same_family(G: OrderedGraph, H: OrderedGraph) -> None:
    if G.directed != H.directed:
        raise GraphError(f"kind mismatch: {G.kind} vs {H.kind}")


def is_ordered_subgraph_iso(G: OrderedGraph, H: OrderedGraph, f, induced: bool = False,
                            respect_sides: bool = False) -> bool:
    """True iff ``f`` is an ordered (induced) subgraph isomorphism from H to G.

    ``f`` is an :class:`OrderPreservingMap` or a plain image sequence.  With
    ``respect_sides`` a bipartite map must also send X to X and Y to Y.
    """
    same_family(G, H)
    images = f.images if isinstance(f, OrderPreservingMap) else tuple(f)
    if len(images) != H.n:
        raise GraphError(f"map has {len(images)} images for {H.n} vertices")
    if any(not 1 <= x <= G.n for x in images):
        return False
    if any(a >= b for a, b in zip(images, images[1:])):
        return False
    if respect_sides and G.side is not None and H.side is not None:
        if any(H.side[u] != G.side[images[u] - 1] for u in range(H.n)):
            return False
    return _edges_agree(G, images, H, range(1, H.n + 1), induced)


def _edges_agree(G, g_ranks, H, h_ranks, induced) -> bool:
    g_ranks = list(g_ranks)
    h_ranks = list(h_ranks)
    k = len(h_ranks)
    if G.directed:
        for a in range(k):
            for b in range(k):
                eh = H.has_edge(h_ranks[a], h_ranks[b])
                eg = G.has_edge(g_ranks[a], g_ranks[b])
                if (eh and not eg) or (induced and eg and not eh):
                    return False
        return True
    for a, b in combinations(range(k), 2):
        eh = H.has_edge(h_ranks[a], h_ranks[b])
        eg = G.has_edge(g_ranks[a], g_ranks[b])
        if (eh and not eg) or (induced and eg and not eh):
            return False
    return True


def induced_subgraph(G: OrderedGraph, ranks: Sequence[int]) -> OrderedGraph:
    """Subgraph induced by increasing ``ranks``, relabelled ``1..len(ranks)``."""
    ranks = list(ranks)
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise GraphError("ranks must be strictly increasing")
    if any(not 1 <= r <= G.n for r in ranks):
        raise GraphError(f"rank out of range 1..{G.n}")
    new = {r: i for i, r in enumerate(ranks, 1)}
    edges = [(new[i], new[j]) for i, j in G.edges if i in new and j in new]
    side = None if G.side is None else tuple(G.side[r - 1] for r in ranks)
    return OrderedGraph(len(ranks), G.kind, frozenset(edges), side)


def relabel(G: OrderedGraph, order: Sequence[int]) -> OrderedGraph:
    """Reorder the vertices: ``order[k]`` (an old rank) becomes rank ``k + 1``."""
    order = list(order)
    if sorted(order) != list(range(1, G.n + 1)):
        raise GraphError("order must be a permutation of the ranks")
    new = {old: k for k, old in enumerate(order, 1)}
    edges = [(new[i], new[j]) for i, j in G.edges]
    side = None if G.side is None else tuple(G.side[old - 1] for old in order)
    return OrderedGraph(G.n, G.kind, frozenset(edges), side)


def reverse(G: OrderedGraph) -> OrderedGraph:
    return relabel(G, range(G.n, 0, -1))


def complement(G: OrderedGraph) -> OrderedGraph:
    """Complement of an undirected graph; ordering and side map are kept."""
    if G.kind != UNDIRECTED:
        raise GraphError(f"complement needs an undirected graph, got {G.kind}")
    edges = [(i, j) for i, j in combinations(range(1, G.n + 1), 2)
             if (i, j) not in G.edges]
    return OrderedGraph(G.n, UNDIRECTED, frozenset(edges), G.side)


def with_side(G: OrderedGraph, side: Sequence[str] | None) -> OrderedGraph:
    return OrderedGraph(G.n, G.kind, G.edges, None if side is None else tuple(side))


def common_edge_count(G: OrderedGraph, H: OrderedGraph, pairs: Sequence[tuple]) -> int:
    """Number of index pairs whose G-images and H-images are both edges."""
    count = 0
    if G.directed:
        for g1, h1 in pairs:
            for g2, h2 in pairs:
                if G.has_edge(g1, g2) and H.has_edge(h1, h2):
                    count += 1
        return count
    for (g1, h1), (g2, h2) in combinations(pairs, 2):
        if G.has_edge(g1, g2) and H.has_edge(h1, h2):
            count += 1
    return count


def objective(G: OrderedGraph, H: OrderedGraph, pairs: Sequence[tuple], variant: str) -> int:
    return len(pairs) if variant == MCOIS else common_edge_count(G, H, pairs)


def verify_common_solution(G: OrderedGraph, H: OrderedGraph, s: CommonSolution,
                           variant: str | None = None) -> VerifyReport:
    """Check that ``s`` is a feasible solution whose value is recomputed exactly."""
    variant = variant or s.variant
    pairs = s.pairs
    for g, h in pairs:
        if not (1 <= g <= G.n and 1 <= h <= H.n):
            return fail((g, h), "out_of_range")
    for (g1, h1), (g2, h2) in zip(pairs, pairs[1:]):
        if not (g1 < g2 and h1 < h2):
            return fail((g1, h1, g2, h2), "not_increasing")
    if variant == MCOIS:
        k = len(pairs)
        if G.directed:
            for a in range(k):
                for b in range(k):
                    if G.has_edge(pairs[a][0], pairs[b][0]) != H.has_edge(pairs[a][1], pairs[b][1]):
                        return fail(pairs[a] + pairs[b], "induced_mismatch")
        else:
            for a, b in combinations(range(k), 2):
                if G.has_edge(pairs[a][0], pairs[b][0]) != H.has_edge(pairs[a][1], pairs[b][1]):
                    return fail(pairs[a] + pairs[b], "induced_mismatch")
    value = objective(G, H, pairs, variant)
    if value != s.value:
        return fail((s.value, value), "value_mismatch")
    return PASS


def graph_from_edges(n: int, edges: Iterable, kind: str = UNDIRECTED, side=None) -> OrderedGraph:
    return OrderedGraph(n, kind, frozenset(tuple(e) for e in edges), side)


def path_graph(n: int) -> OrderedGraph:
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> OrderedGraph:
    return graph_from_edges(n, combinations(range(1, n + 1), 2))


def empty_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n)


def cycle_graph(n: int) -> OrderedGraph:
    return graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

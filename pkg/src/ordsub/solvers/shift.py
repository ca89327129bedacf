"""Shift algorithms for ordered subgraph isomorphism.

Start from the identity map and repeatedly repair one violated H-edge by
moving an image one rank to the right.  When G's ordering is comparability
weak (bipartite graphs) or a min ordering (digraphs), no map that the shifts
skip over can be a solution, so the first valid map is returned and it is
pointwise minimal.

The violated pair to repair is always the lexicographically smallest one.
Violated pairs live in a lazy heap that is refreshed around every moved
image, so a Step-2 check costs only the work done since the last one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from ..core import (BIPARTITE, GraphError, OrderPreservingMap, OrderedGraph,
                    PreconditionFailed)
from ..orderings import OrderingKind, verify_ordering


@dataclass
class ShiftTrace:
    """What the shift loop did.

    ``iterations`` counts Step-3 executions and ``moves`` single-rank image
    advances.  ``records`` holds ``(case, p, q, p', q')`` per iteration and
    ``snapshots`` the image tuple after each iteration; both are filled only
    when requested because large runs would otherwise hold O(n_G n_H) tuples.
    """

    iterations: int = 0
    moves: int = 0
    final_map: OrderPreservingMap | None = None
    records: list = field(default_factory=list)
    snapshots: list = field(default_factory=list)


class _Shifter:
    def __init__(self, G, H, directed, record, snapshots):
        self.G, self.H = G, H
        self.directed = directed
        self.f = [0] + list(range(1, H.n + 1))
        self.trace = ShiftTrace()
        self.record, self.keep_snapshots = record, snapshots
        self.g_out = G.out_adj
        self.h_out = H.out_adj
        # pairs (p, q), p <= q, that carry an H-edge in some direction
        self.pairs_at = [[(min(u, w), max(u, w)) for w in H.neighbors(u)]
                         for u in range(H.n + 1)]
        self.heap = []
        self.queued = set()
        for u in range(1, H.n + 1):
            self.touch(u)

    def violated(self, p, q):
        """Whether some H-arc between ``u_p`` and ``u_q`` is not mapped onto a G-arc."""
        f, g, h = self.f, self.g_out, self.h_out
        if h[p] >> q & 1 and not g[f[p]] >> f[q] & 1:
            return True
        return self.directed and p != q and bool(h[q] >> p & 1) and not g[f[q]] >> f[p] & 1

    def smallest_violation(self):
        heap, queued = self.heap, self.queued
        while heap:
            pair = heap[0]
            if self.violated(*pair):
                return pair
            heapq.heappop(heap)
            queued.discard(pair)
        return None

    def touch(self, u):
        """Queue every pair at ``u`` that is currently violated."""
        queued, heap = self.queued, self.heap
        for pair in self.pairs_at[u]:
            if pair not in queued and self.violated(*pair):
                queued.add(pair)
                heapq.heappush(heap, pair)

    def advance(self, u):
        """Step 3: move ``u`` right, pushing successors it collides with.

        Returns False when an image would leave the graph.
        """
        f, nG, nH = self.f, self.G.n, self.H.n
        first = u
        while True:
            if f[u] + 1 > nG:
                return False
            f[u] += 1
            self.trace.moves += 1
            if u < nH and f[u + 1] == f[u]:
                u += 1
                continue
            break
        for w in range(first, u + 1):
            self.touch(w)
        return True

    def case_one(self, p, q):
        G, f = self.G, self.f
        pp, qq = f[p], f[q]
        width = qq - pp - 1
        window = (1 << width) - 1 if width > 0 else 0

        def clear(row):
            return not (row >> (pp + 1)) & window

        if not self.directed:
            return clear(G.out_adj[qq])
        H = self.H
        conds = []
        if H.has_edge(p, q) and not G.has_edge(pp, qq):
            conds.append(clear(G.in_adj[qq]))
        if p != q and H.has_edge(q, p) and not G.has_edge(qq, pp):
            conds.append(clear(G.out_adj[qq]))
        return any(conds)

    def run(self):
        trace = self.trace
        while True:
            hit = self.smallest_violation()
            if hit is None:
                images = self.f[1:]
                trace.final_map = OrderPreservingMap(images)
                return trace.final_map
            p, q = hit
            trace.iterations += 1
            case = 1 if self.case_one(p, q) else 2
            if self.record:
                trace.records.append((case, p, q, self.f[p], self.f[q]))
            alive = self.advance(q if case == 1 else p)
            if self.keep_snapshots:
                trace.snapshots.append(tuple(self.f[1:]))
            if not alive:
                return None


def _trivial(G, H):
    if H.n > G.n:
        return None, ShiftTrace()
    return False, None


def osi_shift_2dor(G: OrderedGraph, H: OrderedGraph, record: bool = False,
                   snapshots: bool = False, check: bool = True):
    """Ordered subgraph isomorphism from ``H`` into a 2DOR graph ``G``.

    ``G`` must be bipartite with a comparability weak ordering; ``H`` may be
    any undirected or bipartite graph in any order.  Returns
    ``(map or None, ShiftTrace)``.
    """
    if G.kind != BIPARTITE or H.directed:
        raise GraphError("osi_shift_2dor needs a bipartite G and an undirected H")
    if check:
        report = verify_ordering(OrderingKind.COMPARABILITY_WEAK, G)
        if not report.ok:
            raise PreconditionFailed("G's ordering is not comparability weak", report)
    early, trace = _trivial(G, H)
    if trace is not None:
        return early, trace
    shifter = _Shifter(G, H, False, record, snapshots)
    return shifter.run(), shifter.trace


def osi_shift_signed_interval(G: OrderedGraph, H: OrderedGraph, record: bool = False,
                              snapshots: bool = False, check: bool = True):
    """Ordered subgraph isomorphism from digraph ``H`` into a min-ordered ``G``."""
    if not (G.directed and H.directed):
        raise GraphError("osi_shift_signed_interval needs two digraphs")
    if check:
        report = verify_ordering(OrderingKind.MIN, G)
        if not report.ok:
            raise PreconditionFailed("G's ordering is not a min ordering", report)
    early, trace = _trivial(G, H)
    if trace is not None:
        return early, trace
    shifter = _Shifter(G, H, True, record, snapshots)
    return shifter.run(), shifter.trace

"""Ordering characterizations and nice path decompositions.

Every verifier scans the tuples of its forbidden pattern in lexicographic
order and reports the first violation, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import PASS, GraphError, OrderedGraph, VerifyReport, fail


class OrderingKind(str, Enum):
    INTERVAL = "interval"
    INTERVAL_BIGRAPH = "interval_bigraph"
    COMPARABILITY = "comparability"
    WEAK = "weak"
    COMPARABILITY_WEAK = "comparability_weak"
    MIN = "min"
    INCLUSION = "inclusion"
    PERFECT_ELIMINATION = "perfect_elimination"
    COCOMPARABILITY = "cocomparability"


NEEDS_SIDES = {OrderingKind.WEAK, OrderingKind.COMPARABILITY_WEAK,
               OrderingKind.INTERVAL_BIGRAPH, OrderingKind.INCLUSION}


def _check_kind(kind: OrderingKind, G: OrderedGraph) -> None:
    if kind == OrderingKind.MIN:
        if not G.directed:
            raise GraphError("min orderings are defined for digraphs")
        return
    if G.directed:
        raise GraphError(f"{kind.value} orderings are defined for undirected graphs")
    if kind in NEEDS_SIDES and G.side is None:
        raise GraphError(f"{kind.value} ordering needs a side map")


def verify_ordering(kind, G: OrderedGraph) -> VerifyReport:
    """Check the identity ordering of ``G`` against ``kind``."""
    kind = OrderingKind(kind)
    _check_kind(kind, G)
    return _VERIFIERS[kind](G)


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _above(v: int) -> int:
    """Mask with bits ``> v`` set (callers intersect it with real rows)."""
    return -1 << (v + 1)


def _side_masks(G):
    if G.side is None:
        return None
    return {s: sum(1 << v for v in G.ranks_on(s)) for s in ("X", "Y")}


def _later_pattern(G, reason, pick_v, restrict=None):
    """Lex-first ``u < v < w`` with ``uw`` an edge and ``vw`` a non-edge.

    ``pick_v(u, v)`` filters the middle vertex; ``restrict(u)`` limits ``w``.
    Interval, interval bigraph, perfect elimination and cocomparability
    orderings all forbid a pattern of this shape.
    """
    n, adj = G.n, G.out_adj
    for u in range(1, n + 1):
        row = adj[u] if restrict is None else adj[u] & restrict(u)
        if not row & _above(u + 1):
            continue
        for v in range(u + 1, n + 1):
            if not pick_v(u, v):
                continue
            bad = row & _above(v) & ~adj[v]
            if bad:
                return fail((u, v, _low(bad)), reason)
    return PASS


def _interval(G):
    return _later_pattern(G, "interval", lambda u, v: True)


def _interval_bigraph(G):
    side, masks = G.side, _side_masks(G)
    other = {"X": masks["Y"], "Y": masks["X"]}
    return _later_pattern(G, "interval_bigraph",
                          lambda u, v: side[u - 1] == side[v - 1],
                          lambda u: other[side[u - 1]])


def _perfect_elimination(G):
    adj = G.out_adj
    return _later_pattern(G, "perfect_elimination", lambda u, v: adj[u] >> v & 1)


def _cocomparability(G):
    adj = G.out_adj
    return _later_pattern(G, "cocomparability", lambda u, v: not adj[u] >> v & 1)


def _comparability(G):
    n, adj = G.n, G.out_adj
    for u in range(1, n + 1):
        for v in _bits_above(adj[u], u):
            bad = adj[v] & _above(v) & ~adj[u]
            if bad:
                return fail((u, v, _low(bad)), "comparability")
    return PASS


def _bits_above(mask, v):
    mask &= _above(v)
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _weak(G):
    adj = G.out_adj
    X = G.ranks_on("X")
    ymask = _side_masks(G)["Y"]
    # union of Y-neighbourhoods of the X-vertices after each position in X
    suffix = [0] * (len(X) + 1)
    for i in range(len(X) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | adj[X[i]]
    for i, x1 in enumerate(X):
        row = adj[x1] & ymask
        if not row:
            continue
        top = row.bit_length() - 1
        cand = ymask & ~row & ((1 << top) - 1)
        if not cand & suffix[i + 1]:
            continue
        for x2 in X[i + 1:]:
            hit = adj[x2] & cand
            if hit:
                y1 = _low(hit)
                return fail((x1, x2, y1, _low(row & _above(y1))), "weak")
    return PASS


def _comparability_weak(G):
    report = _comparability(G)
    return report if not report.ok else _weak(G)


def _min(G):
    n, out = G.n, G.out_adj
    suffix = [0] * (n + 2)
    for i in range(n, 0, -1):
        suffix[i] = suffix[i + 1] | out[i]
    for i in range(1, n + 1):
        row = out[i]
        if not row:
            continue
        for j in _bits_above(row, 0):
            bad = ~row & ((1 << j) - 1) & ~1
            if not bad & suffix[i + 1]:
                continue
            for i2 in range(i + 1, n + 1):
                hit = out[i2] & bad
                if hit:
                    return fail((i, j, i2, _low(hit)), "min")
    return PASS


def _inclusion(G):
    side, adj = G.side, G.out_adj
    n = G.n
    for x in range(1, n + 1):
        if side[x - 1] != "X":
            continue
        for y in range(x + 1, n + 1):
            if side[y - 1] == "Y":
                return fail((x, y), "block_order")
    masks = _side_masks(G)
    for a in range(1, n + 1):
        s = side[a - 1]
        other = masks["X" if s == "Y" else "Y"]
        for b in range(a + 1, n + 1):
            if side[b - 1] != s:
                continue
            extra = adj[a] & other & ~adj[b]
            if extra:
                return fail((a, b, _low(extra)), "not_nested")
    return PASS


_VERIFIERS = {
    OrderingKind.INTERVAL: _interval,
    OrderingKind.INTERVAL_BIGRAPH: _interval_bigraph,
    OrderingKind.COMPARABILITY: _comparability,
    OrderingKind.WEAK: _weak,
    OrderingKind.COMPARABILITY_WEAK: _comparability_weak,
    OrderingKind.MIN: _min,
    OrderingKind.INCLUSION: _inclusion,
    OrderingKind.PERFECT_ELIMINATION: _perfect_elimination,
    OrderingKind.COCOMPARABILITY: _cocomparability,
}


def _block_type(G, ranks) -> set:
    """Which of {"clique", "independent"} the vertex set satisfies."""
    types = set()
    pairs = [(a, b) for i, a in enumerate(ranks) for b in ranks[i + 1:]]
    if all(G.has_edge(a, b) for a, b in pairs):
        types.add("clique")
    if not any(G.has_edge(a, b) for a, b in pairs):
        types.add("independent")
    return types


def inclusion_classes(G: OrderedGraph) -> list[str]:
    """Every class among threshold, chain, cochain that ``G`` fits.

    Blocks with at most one vertex are both cliques and independent sets, so
    a graph can fit several classes at once.
    """
    report = verify_ordering(OrderingKind.INCLUSION, G)
    if not report.ok:
        raise GraphError(f"not an inclusion ordering: {report.line()}")
    tx = _block_type(G, G.ranks_on("X"))
    ty = _block_type(G, G.ranks_on("Y"))
    out = []
    if "clique" in tx and "independent" in ty:
        out.append("threshold")
    if "independent" in tx and "independent" in ty:
        out.append("chain")
    if "clique" in tx and "clique" in ty:
        out.append("cochain")
    return out


def classify_inclusion(G: OrderedGraph) -> str:
    """threshold, chain, cochain (first match in that order) or none."""
    classes = inclusion_classes(G)
    return classes[0] if classes else "none"


def separation_profile(G: OrderedGraph) -> list[int]:
    """Entry ``i`` counts vertices ``u <= i`` with a neighbour ``> i``."""
    n = G.n
    diff = [0] * (n + 2)
    for u in range(1, n + 1):
        last = G.nbr_mask(u).bit_length() - 1
        if last > u:
            diff[u] += 1
            diff[last] -= 1
    profile, run = [0] * (n + 1), 0
    for i in range(1, n + 1):
        run += diff[i]
        profile[i] = run
    return profile


def ordering_pathwidth(G: OrderedGraph) -> int:
    """Vertex separation number of the identity ordering."""
    return max(separation_profile(G), default=0)


@dataclass(frozen=True)
class NicePathDecomposition:
    """Bags ``X_0..X_2n`` with step kinds ``("introduce" | "forget", v)``."""

    bags: tuple
    kinds: tuple
    width: int
    introduce_order: tuple

    def validate(self, G: OrderedGraph) -> None:
        """Raise :class:`InvalidDecomposition` unless this decomposes ``G``."""
        n = G.n
        bags, kinds = self.bags, self.kinds
        if len(bags) != 2 * n + 1 or len(kinds) != 2 * n:
            raise InvalidDecomposition("need 2n+1 bags and 2n steps")
        if bags[0] or bags[-1]:
            raise InvalidDecomposition("first and last bags must be empty")
        seen_in, seen_out = {}, {}
        for step, (kind, v) in enumerate(kinds, 1):
            prev, cur = bags[step - 1], bags[step]
            if kind == "introduce":
                if v in prev or cur != prev | {v} or v in seen_in:
                    raise InvalidDecomposition(f"bad introduce of {v} at step {step}")
                seen_in[v] = step
            elif kind == "forget":
                if v not in prev or cur != prev - {v} or v in seen_out:
                    raise InvalidDecomposition(f"bad forget of {v} at step {step}")
                seen_out[v] = step
            else:
                raise InvalidDecomposition(f"unknown step kind {kind!r}")
        if set(seen_in) != set(range(1, n + 1)) or set(seen_out) != set(seen_in):
            raise InvalidDecomposition("every vertex is introduced and forgotten once")
        for v in range(1, n + 1):
            if seen_in[v] >= seen_out[v]:
                raise InvalidDecomposition(f"{v} forgotten before introduced")
        for u, w in G.edges:
            lo = max(seen_in[u], seen_in[w])
            hi = min(seen_out[u], seen_out[w])
            if lo >= hi:
                raise InvalidDecomposition(f"edge ({u}, {w}) in no bag")
        order = tuple(sorted(range(1, n + 1), key=seen_in.__getitem__))
        if order != tuple(self.introduce_order):
            raise InvalidDecomposition("introduce_order disagrees with the steps")
        width = max((len(b) for b in bags), default=0) - 1
        if max(width, 0) != self.width:
            raise InvalidDecomposition("stated width is wrong")


class InvalidDecomposition(ValueError):
    pass


def nice_decomposition_from_ordering(G: OrderedGraph) -> NicePathDecomposition:
    """Sweep the ordering, forgetting each vertex once its last neighbour is in."""
    n = G.n
    last = [0] * (n + 1)
    for v in range(1, n + 1):
        mask = G.nbr_mask(v) & ~(1 << v)
        last[v] = mask.bit_length() - 1 if mask else 0
    bags = [frozenset()]
    kinds = []
    bag: set = set()
    for i in range(1, n + 1):
        bag.add(i)
        bags.append(frozenset(bag))
        kinds.append(("introduce", i))
        for u in sorted(bag):
            if last[u] <= i:
                bag.discard(u)
                bags.append(frozenset(bag))
                kinds.append(("forget", u))
    width = max(max((len(b) for b in bags), default=0) - 1, 0)
    return NicePathDecomposition(tuple(bags), tuple(kinds), width, tuple(range(1, n + 1)))

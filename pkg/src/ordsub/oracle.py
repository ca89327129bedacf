"""Exhaustive exact solvers used as ground truth.

Everything here is plain backtracking in lexicographic order, so the first
solution found (or the first optimum) is the lexicographically smallest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .core import (MCOIS, MCOS, BIPARTITE, CommonSolution, GraphError, GuardExceeded,
                   OrderPreservingMap, OrderedGraph, same_family)

OSI = "OSI"
OISI = "OISI"

DECISION_GUARD = 32
MCO_GUARD = 24


@dataclass(frozen=True)
class OpsInstance:
    """Pattern ``rho`` (over ``[k]``) to find inside text ``pi`` (over ``[n]``)."""

    pi: tuple
    rho: tuple

    def __post_init__(self):
        pi, rho = tuple(int(x) for x in self.pi), tuple(int(x) for x in self.rho)
        for name, p in (("pi", pi), ("rho", rho)):
            if sorted(p) != list(range(1, len(p) + 1)):
                raise GraphError(f"{name} is not a permutation: {p}")
        if len(rho) > len(pi):
            raise GraphError("rho is longer than pi")
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "rho", rho)

    @property
    def n(self) -> int:
        return len(self.pi)

    @property
    def k(self) -> int:
        return len(self.rho)


def _check_guard(n: int, limit: int, override: bool, what: str) -> None:
    if n > limit and not override:
        raise GuardExceeded(f"{what} refuses n_G={n} > {limit} without override")


def _constraints(H: OrderedGraph):
    """Per H-vertex i, its earlier neighbours split by arc direction."""
    back_out, back_in, loop = [], [], []
    for i in range(1, H.n + 1):
        back_out.append([j for j in range(1, i) if H.has_edge(i, j)])
        back_in.append([j for j in range(1, i) if H.has_edge(j, i)])
        loop.append(H.has_edge(i, i))
    return back_out, back_in, loop


def _forward(H: OrderedGraph):
    """Per H-vertex, its later out- and in-neighbours."""
    return [([j for j in range(i + 1, H.n + 1) if H.has_edge(i, j)],
             [j for j in range(i + 1, H.n + 1) if H.has_edge(j, i)])
            for i in range(1, H.n + 1)]


def _initial_domains(G: OrderedGraph, H: OrderedGraph, limit) -> list[int] | None:
    """Rank masks per H-vertex after ordered arc consistency; None if one empties.

    Rank c stays in D[j] only if every H-neighbour m of j keeps some rank on
    the correct side of c that is joined to c by an arc of the right
    direction, and D[j] lies strictly between the extremes of D[j-1] and
    D[j+1].  Every isomorphism survives this, so it only prunes.
    """
    k = H.n
    out_g, in_g = G.out_adj, G.in_adj
    D = [0] + [((1 << (limit[j - 1] + 1)) - 1) >> j << j for j in range(1, k + 1)]
    arcs = [[] for _ in range(k + 1)]
    for j in range(1, k + 1):
        for m in range(1, k + 1):
            if m != j and (H.has_edge(m, j) or H.has_edge(j, m)):
                arcs[j].append((m, H.has_edge(m, j), H.has_edge(j, m)))
    changed = True
    while changed:
        changed = False
        for j in range(1, k + 1):
            keep = D[j]
            if j > 1 and D[j - 1]:
                low = (D[j - 1] & -D[j - 1]).bit_length() - 1
                keep &= ~((1 << (low + 1)) - 1)
            if j < k and D[j + 1]:
                keep &= (1 << (D[j + 1].bit_length() - 1)) - 1
            rest = keep
            while rest:
                c = (rest & -rest).bit_length() - 1
                rest ^= 1 << c
                side = (1 << c) - 1
                for m, into, outof in arcs[j]:
                    near = D[m] & (side if m < j else ~side & ~(1 << c))
                    if into:
                        near &= in_g[c]
                    if outof:
                        near &= out_g[c]
                    if not near:
                        keep &= ~(1 << c)
                        break
            if keep != D[j]:
                D[j] = keep
                changed = True
                if not keep:
                    return None
    return D


def iter_ordered_isos(variant: str, G: OrderedGraph, H: OrderedGraph,
                      upper: dict | None = None) -> Iterator[tuple]:
    """Yield every image tuple of an ordered (induced) subgraph isomorphism.

    Tuples come in lexicographic order.  ``upper`` optionally caps the image
    of some H-vertices (``{u: max_rank}``).
    """
    same_family(G, H)
    induced = variant == OISI
    nG, k = G.n, H.n
    if k > nG:
        return
    back_out, back_in, loop = _constraints(H)
    out_g, in_g = G.out_adj, G.in_adj
    upper = upper or {}
    limit = [min(nG - (k - i), upper.get(i, nG)) for i in range(1, k + 1)]
    # a cap on u also caps every earlier vertex, one rank per step
    for i in range(k - 2, -1, -1):
        limit[i] = min(limit[i], limit[i + 1] - 1)
    img = [0] * (k + 1)

    def ok(i, c):
        row_out, row_in = out_g[c], in_g[c]
        if G.directed:
            if loop[i - 1] != bool(row_out >> c & 1) and (loop[i - 1] or induced):
                return False
        for j in back_out[i - 1]:
            if not row_out >> img[j] & 1:
                return False
        for j in back_in[i - 1]:
            if not row_in >> img[j] & 1:
                return False
        if induced:
            n_out = sum(1 for j in range(1, i) if row_out >> img[j] & 1)
            n_in = sum(1 for j in range(1, i) if row_in >> img[j] & 1)
            if n_out != len(back_out[i - 1]) or n_in != len(back_in[i - 1]):
                return False
        return True

    # For OSI only the last image and the images of vertices with a neighbour
    # still ahead decide whether a prefix can be completed, so prefixes that
    # failed are remembered under that key.  OISI checks non-edges against
    # every earlier image, so it gets no memo.
    active = [()] * (k + 2)
    if not induced:
        last_nb = [max(back_out_all + back_in_all, default=0)
                   for back_out_all, back_in_all in _forward(H)]
        for i in range(1, k + 2):
            active[i] = tuple(j for j in range(1, i) if last_nb[j - 1] >= i)
    dead = set()

    # Forward checking: dom[j] holds the ranks still allowed for H-vertex j by
    # the arcs to its placed neighbours.  Images increase, so walking the
    # domains left to right and taking the first usable rank each time gives
    # a lower bound for every later image; an empty step means no completion.
    fwd = _forward(H)

    def chain_ok(i, dom):
        pos = img[i]
        for j in range(i + 1, k + 1):
            free = dom[j] >> (pos + 1) << (pos + 1)
            if not free:
                return False
            pos = (free & -free).bit_length() - 1
            if pos > limit[j - 1]:
                return False
        return True

    def rec(i, dom):
        if i > k:
            yield tuple(img[1:])
            return
        key = None
        if not induced:
            key = (i, img[i - 1]) + tuple(img[j] for j in active[i])
            if key in dead:
                return
        found = False
        lo, hi = img[i - 1] + 1, limit[i - 1]
        cand = dom[i] >> lo << lo
        cand &= (1 << (hi + 1)) - 1 if hi >= lo else 0
        while cand:
            c = (cand & -cand).bit_length() - 1
            cand ^= 1 << c
            if not ok(i, c):
                continue
            img[i] = c
            nxt = dom
            outs, ins = fwd[i - 1]
            if outs or ins:
                nxt = list(dom)
                for j in outs:
                    nxt[j] &= out_g[c]
                for j in ins:
                    nxt[j] &= in_g[c]
            if chain_ok(i, nxt):
                for sol in rec(i + 1, nxt):
                    found = True
                    yield sol
        img[i] = 0
        if key is not None and not found:
            dead.add(key)

    start = _initial_domains(G, H, limit)
    if start is not None:
        yield from rec(1, start)


def brute_ordered_iso(variant: str, G: OrderedGraph, H: OrderedGraph,
                      override: bool = False, upper: dict | None = None):
    """Lexicographically smallest ordered (induced) subgraph isomorphism or None."""
    if variant not in (OSI, OISI):
        raise GraphError(f"unknown decision variant {variant!r}")
    _check_guard(G.n, DECISION_GUARD, override, "brute_ordered_iso")
    for images in iter_ordered_isos(variant, G, H, upper):
        return OrderPreservingMap(images)
    return None


def is_pointwise_minimal(G: OrderedGraph, H: OrderedGraph, images: Sequence[int],
                         variant: str = OSI) -> bool:
    """True iff no isomorphism puts any single vertex strictly earlier.

    Each coordinate is checked by a capped exhaustive search, which is the
    same as comparing against the coordinatewise minimum of all maps.
    """
    for u, c in enumerate(images, 1):
        if next(iter_ordered_isos(variant, G, H, {u: c - 1}), None) is not None:
            return False
    return True


def coordinatewise_min(variant: str, G: OrderedGraph, H: OrderedGraph) -> tuple | None:
    """Coordinatewise minimum over every isomorphism (full enumeration)."""
    best = None
    for images in iter_ordered_isos(variant, G, H):
        best = images if best is None else tuple(map(min, best, images))
    return best


def brute_mco(variant: str, G: OrderedGraph, H: OrderedGraph,
              override: bool = False) -> CommonSolution:
    """Maximum common ordered (induced) subgraph by exhaustive search.

    Pair sequences are visited in lexicographic order and only strict
    improvements are kept, so ties go to the smallest sequence.  The only
    pruning is the trivial bound "no completion can beat the incumbent".
    """
    if variant not in (MCOS, MCOIS):
        raise GraphError(f"unknown variant {variant!r}")
    same_family(G, H)
    _check_guard(max(G.n, H.n), MCO_GUARD, override, "brute_mco")
    nG, nH = G.n, H.n
    directed = G.directed
    # edges whose larger endpoint lies beyond position t bound the MCOS gain
    g_after = [sum(1 for e in G.edges if max(e) > t) for t in range(nG + 1)]
    h_after = [sum(1 for e in H.edges if max(e) > t) for t in range(nH + 1)]
    pairs: list = []
    best = [-1, ()]

    def gain(g, h):
        """Objective increase from appending (g, h); None if infeasible."""
        if directed:
            lg, lh = G.has_edge(g, g), H.has_edge(h, h)
            if variant == MCOIS and lg != lh:
                return None
            add = 1 if lg and lh else 0
        else:
            add = 0
        for g2, h2 in pairs:
            for a, b, c, d in ((g2, g, h2, h), (g, g2, h, h2)) if directed else ((g2, g, h2, h),):
                eg, eh = G.has_edge(a, b), H.has_edge(c, d)
                if variant == MCOIS and eg != eh:
                    return None
                add += eg and eh
        return 1 if variant == MCOIS else add

    def rec(lg, lh, value):
        if value > best[0]:
            best[0], best[1] = value, tuple(pairs)
        if variant == MCOIS:
            bound = min(nG - lg, nH - lh)
        else:
            bound = min(g_after[lg], h_after[lh])
        if value + bound <= best[0]:
            return
        for g in range(lg + 1, nG + 1):
            for h in range(lh + 1, nH + 1):
                add = gain(g, h)
                if add is None:
                    continue
                pairs.append((g, h))
                rec(g, h, value + add)
                pairs.pop()

    rec(0, 0, 0)
    return CommonSolution(variant, best[1], best[0])


def ops_matches(inst: OpsInstance, idx: Sequence[int]) -> bool:
    """Whether the values of ``pi`` at 1-based ``idx`` are order-isomorphic to ``rho``."""
    vals = [inst.pi[i - 1] for i in idx]
    return all((vals[a] < vals[b]) == (inst.rho[a] < inst.rho[b])
               for a, b in combinations(range(len(vals)), 2))


def brute_ops(inst: OpsInstance):
    """Lexicographically smallest index tuple realizing ``rho`` in ``pi``, or None."""
    for idx in combinations(range(1, inst.n + 1), inst.k):
        if ops_matches(inst, idx):
            return idx
    return None


def brute_balanced_biclique(G: OrderedGraph, k: int):
    """Lexicographically smallest ``(A, B)`` with ``K_{k,k}`` between them, or None."""
    if G.kind != BIPARTITE:
        raise GraphError("balanced biclique needs a bipartite graph")
    X, Y = G.ranks_on("X"), G.ranks_on("Y")
    ymask = sum(1 << y for y in Y)
    for A in combinations(X, k):
        common = ymask
        for a in A:
            common &= G.out_adj[a]
        B = [y for y in Y if common >> y & 1][:k]
        if len(B) == k:
            return tuple(A), tuple(B)
    return None

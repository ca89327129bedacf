"""MCOS / MCOIS parameterized by vertex cover number.

For a cover ``S'`` of G, every subset ``S`` of it is tried as "the cover
vertices that get matched" (the rest are deleted).  Each vertex of S is
assigned a twin class of H (``phi``).  Twins are indistinguishable to every
other vertex, so once phi is fixed the gain of matching a non-cover vertex
``u_i`` with ``v_h`` depends only on ``i``, ``h`` and phi.  A longest-path style
table over prefixes ``(i, j)`` then places everything in order.

For MCOIS, two matched non-cover vertices of G are never adjacent, so their
images must be pairwise non-adjacent in H as well.  That is enforced by also
guessing which vertices ``R`` of a cover of H may serve as such images; the
allowed set is ``R`` plus the non-cover vertices of H outside ``N(R)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from ..core import (MCOIS, MCOS, CommonSolution, GraphError, GuardExceeded, OrderedGraph,
                    same_family)

NEG = float("-inf")
VC_GUARD = 12


class ParameterGuardExceeded(GuardExceeded):
    """The vertex cover number is above the guard."""


@dataclass
class TwinPartition:
    classes: list                  # classes[c] = sorted ranks, c = 0..q-1
    class_of: dict = field(default_factory=dict)

    @property
    def q(self) -> int:
        return len(self.classes)


def _masks(G: OrderedGraph) -> list[int]:
    return [G.nbr_mask(v) & ~(1 << v) for v in range(G.n + 1)]


def _require_undirected(G: OrderedGraph):
    if G.directed:
        raise GraphError("vertex cover routines need undirected graphs")


def is_vertex_cover(G: OrderedGraph, cover) -> bool:
    cs = set(cover)
    return all(u in cs or v in cs for u, v in G.edges if u != v)


def minimum_vertex_cover(G: OrderedGraph) -> frozenset:
    """Minimum vertex cover by iterative deepening on "take u or take v"."""
    _require_undirected(G)
    adj = _masks(G)

    def branch(adj, k):
        for u in range(1, len(adj)):
            if adj[u]:
                v = (adj[u] & -adj[u]).bit_length() - 1
                break
        else:
            return []
        if k == 0:
            return None
        for x in (u, v):
            rest = list(adj)
            for y in range(1, len(rest)):
                rest[y] &= ~(1 << x)
            rest[x] = 0
            got = branch(rest, k - 1)
            if got is not None:
                return [x] + got
        return None

    k = 0
    while True:
        got = branch(adj, k)
        if got is not None:
            return frozenset(got)
        k += 1


def _shrink(G: OrderedGraph, cover) -> frozenset:
    """Validate a supplied cover and drop vertices it does not need."""
    if not is_vertex_cover(G, cover):
        raise GraphError("cover hint does not cover every edge")
    if any(not 1 <= v <= G.n for v in cover):
        raise GraphError("cover hint has out-of-range ranks")
    cs = set(cover)
    for v in sorted(cs):
        cs.discard(v)
        if not is_vertex_cover(G, cs):
            cs.add(v)
    return frozenset(cs)


def twin_classes(H: OrderedGraph) -> TwinPartition:
    """Classes of ``N(u) - {v} == N(v) - {u}``, numbered by smallest member."""
    _require_undirected(H)
    adj = _masks(H)
    classes, class_of = [], {}
    for v in range(1, H.n + 1):
        for c, members in enumerate(classes):
            u = members[0]
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                members.append(v)
                class_of[v] = c
                break
        else:
            class_of[v] = len(classes)
            classes.append([v])
    return TwinPartition(classes, class_of)


def _independent_subsets(H: OrderedGraph, cover):
    adj = _masks(H)
    cover = sorted(cover)
    for r in range(len(cover) + 1):
        for R in combinations(cover, r):
            if all(not adj[a] >> b & 1 for a, b in combinations(R, 2)):
                yield R


class _Solver:
    def __init__(self, variant, G, H, SG, SH, twins):
        self.variant, self.G, self.H = variant, G, H
        self.induced = variant == MCOIS
        self.gadj, self.hadj = _masks(G), _masks(H)
        self.SG, self.SH = sorted(SG), sorted(SH)
        self.twins = twins
        q = twins.q
        # adj_to[c] = mask of H-vertices adjacent to the (other) members of class c
        self.adj_to = []
        for members in twins.classes:
            mask = 0
            for v in range(1, H.n + 1):
                rep = members[0] if members[0] != v else (members[1] if len(members) > 1 else None)
                if rep is not None and self.hadj[v] >> rep & 1:
                    mask |= 1 << v
            self.adj_to.append(mask)
        self.class_mask = [sum(1 << v for v in m) for m in twins.classes]
        # pair_adj[c][d]: members of classes c and d (distinct vertices) are adjacent
        self.pair_adj = [[False] * q for _ in range(q)]
        for c, d in product(range(q), repeat=2):
            members = twins.classes[d]
            other = members[0] if c != d else (members[1] if len(members) > 1 else None)
            self.pair_adj[c][d] = other is not None and bool(self.adj_to[c] >> other & 1)
        self.phi_counts = {}
        self.best = None

    def greedy(self, S, phi):
        """First-fit images ``w_1 < ... < w_|S|`` of the guessed classes, or None."""
        ws, last = [], 0
        for s, c in zip(S, phi):
            cand = self.class_mask[c] >> (last + 1)
            if not cand:
                return None
            last += (cand & -cand).bit_length()
            ws.append(last)
        return ws

    def base(self, S, phi, ws):
        """Value of matching S alone, or None if phi is rejected."""
        g = self.gadj
        if self.induced:
            for a, b in combinations(range(len(S)), 2):
                if bool(g[S[a]] >> S[b] & 1) != bool(self.hadj[ws[a]] >> ws[b] & 1):
                    return None
            return len(S)
        return sum(1 for a, b in combinations(range(len(S)), 2)
                   if g[S[a]] >> S[b] & 1 and self.pair_adj[phi[a]][phi[b]])

    def gains(self, S, phi, allowed):
        """``mu[i][h]`` for non-cover ``u_i``; None where matching is illegal."""
        nH, g = self.H.n, self.gadj
        types = list(zip(S, phi))
        mu = {}
        for i in self.free:
            row = [None] * (nH + 1)
            for h in range(1, nH + 1):
                if not allowed >> h & 1:
                    continue
                if self.induced:
                    if all(bool(g[i] >> s & 1) == bool(self.adj_to[c] >> h & 1) for s, c in types):
                        row[h] = 1
                else:
                    row[h] = sum(1 for s, c in types if g[i] >> s & 1 and self.adj_to[c] >> h & 1)
            mu[i] = row
        return mu

    def table(self, S, phi, base, mu):
        nG, nH = self.G.n, self.H.n
        role = {s: c for s, c in zip(S, phi)}
        prev = [base] * (nH + 1)
        choices = [None]
        for i in range(1, nG + 1):
            cur = [NEG] * (nH + 1)
            choice = [None] * (nH + 1)
            if i in role:
                cm = self.class_mask[role[i]]
                run, arg = NEG, None
                for j in range(1, nH + 1):
                    if cm >> j & 1 and prev[j - 1] > run:
                        run, arg = prev[j - 1], j
                    cur[j], choice[j] = run, arg
            elif i in mu:
                row = mu[i]
                run, arg = NEG, None
                cur[0] = prev[0]
                for j in range(1, nH + 1):
                    if row[j] is not None and prev[j - 1] + row[j] > run:
                        run, arg = prev[j - 1] + row[j], j
                    if run > prev[j]:
                        cur[j], choice[j] = run, arg
                    else:
                        cur[j] = prev[j]
            else:
                cur = prev
            choices.append(choice)
            prev = cur
        return prev[nH], choices

    def walk(self, choices):
        pairs, j = [], self.H.n
        for i in range(self.G.n, 0, -1):
            h = choices[i][j] if choices[i] is not None else None
            if h is not None:
                pairs.append((i, h))
                j = h - 1
        pairs.reverse()
        return pairs

    def run(self):
        q = self.twins.q
        everything = ((1 << self.H.n) - 1) << 1
        if self.induced:
            allowed_sets = []
            for R in _independent_subsets(self.H, self.SH):
                nr = 0
                for r in R:
                    nr |= self.hadj[r]
                rest = everything & ~sum(1 << v for v in self.SH) & ~nr
                allowed_sets.append(sum(1 << r for r in R) | rest)
        else:
            allowed_sets = [everything]
        for r in range(len(self.SG) + 1):
            for S in combinations(self.SG, r):
                dropped = set(self.SG) - set(S)
                self.free = [i for i in range(1, self.G.n + 1) if i not in S and i not in dropped]
                count = 0
                for phi in product(range(q), repeat=len(S)):
                    count += 1
                    ws = self.greedy(S, phi)
                    if ws is None:
                        continue
                    base = self.base(S, phi, ws)
                    if base is None:
                        continue
                    for allowed in allowed_sets:
                        mu = self.gains(S, phi, allowed)
                        value, choices = self.table(S, phi, base, mu)
                        if value != NEG and (self.best is None or value > self.best[0]):
                            self.best = (value, self.walk(choices))
                self.phi_counts[S] = count
                if count != q ** len(S):
                    raise AssertionError("phi enumeration count mismatch")
        value, pairs = self.best
        return CommonSolution(self.variant, pairs, int(value))


def mco_vertex_cover(variant: str, G: OrderedGraph, H: OrderedGraph, cover_hint=None,
                     override: bool = False, stats: dict | None = None) -> CommonSolution:
    """Optimal common ordered (induced) subgraph of two undirected graphs.

    ``stats`` (if given) receives ``p``, ``q``, the covers used and
    ``phi_counts`` (number of phi tried per subset S).
    """
    if variant not in (MCOS, MCOIS):
        raise GraphError(f"unknown variant {variant!r}")
    same_family(G, H)
    _require_undirected(G)
    _require_undirected(H)
    SG = _shrink(G, cover_hint) if cover_hint is not None else minimum_vertex_cover(G)
    SH = minimum_vertex_cover(H)
    p = max(len(SG), len(SH))
    if p > VC_GUARD and not override:
        raise ParameterGuardExceeded(f"vertex cover number {p} exceeds guard {VC_GUARD}")
    twins = twin_classes(H)
    if twins.q > 2 ** len(SH) + len(SH):
        raise AssertionError("twin class count above 2^p + p")
    solver = _Solver(variant, G, H, SG, SH, twins)
    sol = solver.run()
    if stats is not None:
        stats.update(p=p, q=twins.q, cover_g=sorted(SG), cover_h=sorted(SH),
                     phi_counts=dict(solver.phi_counts))
    return sol

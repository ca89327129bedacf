"""MCOIS on threshold, chain and cochain graphs given inclusion orderings.

Both graphs list the Y-block first and then the X-block, and every X-vertex
sees a suffix of Y that grows along X.  A common ordered induced subgraph
therefore matches, in order,

* A: Y-vertices of G with Y-vertices of H,
* B: "cross" pairs, either all X_G with Y_H or all Y_G with X_H,
* C: X-vertices of G with X-vertices of H.

Once the C pairs are fixed, the A pairs must agree on which matched
X-vertices they see.  Nested neighbourhoods cut Y into consecutive regions
(one per C pair plus the part seen by none of them).  The best A is then the
sum over regions of the smaller region size.  The DP below runs over the
C pairs.

Cross pairs are where the classes differ.  In a threshold graph X is a
clique and Y independent, so two cross pairs would disagree on an edge and
there is at most one of them; it is guessed.  In a chain graph every block
is independent and any number of cross pairs can occur, so the cross part
is solved in closed form.  Cochain graphs become chain graphs after
complementing and reversing the order, which keeps induced solutions.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import (MCOIS, UNDIRECTED, CommonSolution, OrderedGraph, PreconditionFailed,
                    complement, reverse)
from ..orderings import OrderingKind, inclusion_classes, verify_ordering


@dataclass
class _Profile:
    """Y-positions ``1..a`` and X-indices ``1..b`` of a graph in inclusion order."""

    a: int
    b: int
    y_rank: list      # y_rank[t] for t = 1..a
    x_rank: list      # x_rank[i] for i = 1..b
    nb: list          # nb[i]: mask of Y-positions adjacent to x_i; nb[0] = 0

    @classmethod
    def of(cls, G: OrderedGraph) -> "_Profile":
        Y, X = G.ranks_on("Y"), G.ranks_on("X")
        pos = {y: t for t, y in enumerate(Y, 1)}
        nb = [0]
        for x in X:
            mask = 0
            for v in G.neighbors(x):
                if v in pos:
                    mask |= 1 << pos[v]
            nb.append(mask)
        return cls(len(Y), len(X), [0] + Y, [0] + X, nb)

    def full(self) -> int:
        return ((1 << self.a) - 1) << 1

    def theta(self, i: int) -> int:
        """First Y-position seen by ``x_i`` (``a + 1`` if none)."""
        m = self.nb[i]
        return (m & -m).bit_length() - 1 if m else self.a + 1


def _positions(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _match_regions(PG, PH, regions) -> list:
    """Pair the first ``min`` positions of each ``(G-mask, H-mask)`` region."""
    pairs = []
    for mg, mh in regions:
        for tg, th in zip(_positions(mg), _positions(mh)):
            pairs.append((PG.y_rank[tg], PH.y_rank[th]))
    return pairs


def _region_dp(PG, PH, IG, IH, UG, SG, UH, SH):
    """Best A + C for allowed X-indices ``IG``/``IH``.

    ``U`` restricts the usable Y-positions and ``S`` is the neighbourhood
    already claimed in front of the first C pair (empty in the plain case).
    Returns ``(value, pairs)``.
    """
    pc = int.bit_count
    NG, NH = PG.nb, PH.nb
    best_val = min(pc(UG & ~SG), pc(UH & ~SH))
    best_end = None
    dp, par = {}, {}
    cells = [(i, j) for i in IG for j in IH]
    for i, j in cells:
        val = 1 + min(pc(NG[i] & UG & ~SG), pc(NH[j] & UH & ~SH))
        arg = None
        for (i2, j2), v2 in dp.items():
            if i2 < i and j2 < j:
                cand = v2 + 1 + min(pc(NG[i] & ~NG[i2] & UG), pc(NH[j] & ~NH[j2] & UH))
                if cand > val:
                    val, arg = cand, (i2, j2)
        dp[i, j], par[i, j] = val, arg
        total = val + min(pc(UG & ~NG[i]), pc(UH & ~NH[j]))
        if total > best_val:
            best_val, best_end = total, (i, j)
    if best_end is None:
        return best_val, _match_regions(PG, PH, [(UG & ~SG, UH & ~SH)])
    chain = []
    cell = best_end
    while cell is not None:
        chain.append(cell)
        cell = par[cell]
    chain.reverse()
    regions = [(UG & ~NG[chain[-1][0]], UH & ~NH[chain[-1][1]])]
    prev_g, prev_h = SG, SH
    for i, j in chain:
        regions.append((NG[i] & ~prev_g & UG, NH[j] & ~prev_h & UH))
        prev_g, prev_h = NG[i], NH[j]
    pairs = _match_regions(PG, PH, regions)
    pairs += [(PG.x_rank[i], PH.x_rank[j]) for i, j in chain]
    return best_val, pairs


def _plain(PG, PH):
    return _region_dp(PG, PH, range(1, PG.b + 1), range(1, PH.b + 1),
                      PG.full(), 0, PH.full(), 0)


def _threshold_cross(PG, PH):
    """One guessed pair ``x^G_beta <-> y^H_delta``, then the region DP."""
    for beta in range(1, PG.b + 1):
        for delta in range(1, PH.a + 1):
            IG = range(beta + 1, PG.b + 1)
            IH = [j for j in range(1, PH.b + 1) if PH.nb[j] >> delta & 1]
            UH = ((1 << (delta - 1)) - 1) << 1
            val, pairs = _region_dp(PG, PH, IG, IH, PG.full(), PG.nb[beta], UH, 0)
            yield val + 1, pairs + [(PG.x_rank[beta], PH.y_rank[delta])]


def _chain_cross(PG, PH):
    """Cross pairs ``X_G <-> Y_H`` in a chain graph, for every last cross index.

    With ``beta`` the last cross X-index of G and ``(im, jm)`` bounding the C
    pairs, the A-vertices of H sit before the cross ones, which sit before
    ``theta_H(jm)``; so A and C never see each other and everything
    decouples into three counts.
    """
    pc = int.bit_count
    full = PG.full()
    for beta in range(1, PG.b + 1):
        options = [(None, None)] + [(im, jm) for im in range(beta + 1, PG.b + 1)
                                    for jm in range(1, PH.b + 1)]
        for im, jm in options:
            if im is None:
                free_g, lim, m = full & ~PG.nb[beta], PH.a, 0
            else:
                free_g, lim, m = full & ~PG.nb[im], PH.theta(jm) - 1, min(im - beta, jm)
            best = None
            for s in range(lim + 1):
                val = m + min(pc(free_g), s) + min(beta, lim - s)
                if best is None or val > best[0]:
                    best = (val, s)
            val, s = best
            n_a, n_b = min(pc(free_g), s), min(beta, lim - s)
            pairs = [(PG.y_rank[t], PH.y_rank[u]) for t, u in
                     zip(_positions(free_g)[:n_a], range(1, n_a + 1))]
            pairs += [(PG.x_rank[beta - n_b + 1 + r], PH.y_rank[s + 1 + r]) for r in range(n_b)]
            pairs += [(PG.x_rank[beta + r], PH.x_rank[r]) for r in range(1, m + 1)]
            yield val, pairs


def _swap(candidates):
    for val, pairs in candidates:
        yield val, [(g, h) for h, g in pairs]


def _candidates(G, H, cls):
    PG, PH = _Profile.of(G), _Profile.of(H)
    yield _plain(PG, PH)
    cross = _threshold_cross if cls == "threshold" else _chain_cross
    yield from cross(PG, PH)
    yield from _swap(cross(PH, PG))


def _flip(G: OrderedGraph) -> OrderedGraph:
    """Complement, reverse, and swap sides: cochain in, chain out."""
    plain = OrderedGraph(G.n, UNDIRECTED, G.edges, G.side)
    R = reverse(complement(plain))
    side = tuple("Y" if s == "X" else "X" for s in R.side)
    return OrderedGraph(R.n, UNDIRECTED, R.edges, side)


def common_inclusion_class(G, H) -> str:
    """Shared inclusion class of two graphs; raises PreconditionFailed."""
    for X in (G, H):
        if X.directed or X.side is None:
            raise PreconditionFailed("inclusion DP needs undirected graphs with side maps")
        report = verify_ordering(OrderingKind.INCLUSION, X)
        if not report.ok:
            raise PreconditionFailed("ordering is not an inclusion ordering", report)
    common = [c for c in inclusion_classes(G) if c in inclusion_classes(H)]
    if not common:
        raise PreconditionFailed("graphs are not in a common threshold/chain/cochain class")
    return common[0]


def inclusion_candidates(G: OrderedGraph, H: OrderedGraph):
    """Every per-guess solution that the outer maximum chooses from."""
    cls = common_inclusion_class(G, H)
    if cls == "cochain":
        nG, nH = G.n, H.n
        for val, pairs in _candidates(_flip(G), _flip(H), "chain"):
            back = sorted((nG + 1 - g, nH + 1 - h) for g, h in pairs)
            yield CommonSolution(MCOIS, back, val)
        return
    for val, pairs in _candidates(G, H, cls):
        yield CommonSolution(MCOIS, sorted(pairs), val)


def mcois_inclusion(G: OrderedGraph, H: OrderedGraph) -> CommonSolution:
    """Maximum common ordered induced subgraph of two inclusion-ordered graphs."""
    best = None
    for sol in inclusion_candidates(G, H):
        if best is None or sol.value > best.value:
            best = sol
    return best

"""MCOS / MCOIS by dynamic programming over two nice path decompositions.

Cell ``(i, j)`` is "G after step i, H after step j".  A state records which
bag vertices are matched: ``Xc``/``Yc`` hold vertices matched with each other
(aligned by rank, which is forced by order preservation), ``Xf``/``Yf`` hold
vertices whose partner was already forgotten.  Everything else in a bag is
unmatched.  The table is filled forwards along the lattice of cells:

* a G-step or an H-step applies one introduce/forget on its own side;
* a diagonal step applies two introduces and matches the two new vertices.

A match can only be made on the diagonal, so pairs appear in increasing rank
on both sides.  For MCOS the ``f`` sets carry no information (an edge to a
vertex whose partner is gone can never be common), so they are dropped and
the state space shrinks from three to two statuses per bag vertex.
"""

from __future__ import annotations

from ..core import MCOIS, MCOS, CommonSolution, GraphError, OrderedGraph, same_family
from ..orderings import InvalidDecomposition, NicePathDecomposition  # noqa: F401  (re-export)

class InconsistentOrdering(ValueError):
    """A decomposition's introduce ordering differs from the graph's ordering."""


def _nth_bit(mask: int, k: int) -> int:
    for _ in range(k):
        mask &= mask - 1
    return (mask & -mask).bit_length() - 1


def _partner(v: int, mine: int, theirs: int) -> int:
    """Vertex aligned with ``v`` when both ``c``-sets are read in rank order."""
    return _nth_bit(theirs, (mine & ((1 << v) - 1)).bit_count())


def _aligned(Xc: int, Yc: int):
    xs, ys = Xc, Yc
    while xs:
        x, y = xs & -xs, ys & -ys
        yield x.bit_length() - 1, y.bit_length() - 1
        xs ^= x
        ys ^= y


def _check(G, PG):
    PG.validate(G)
    if tuple(PG.introduce_order) != tuple(range(1, G.n + 1)):
        raise InconsistentOrdering("introduce ordering must equal the graph's ordering")


def mco_pathwidth(variant: str, G: OrderedGraph, PG: NicePathDecomposition,
                  H: OrderedGraph, PH: NicePathDecomposition, stats: dict | None = None) -> CommonSolution:
    """Optimal common ordered (induced) subgraph.

    ``stats`` (if given) receives ``states`` (entries created), ``bound``
    (the 3^w or 2^w table bound) and ``widths``.
    """
    if variant not in (MCOS, MCOIS):
        raise GraphError(f"unknown variant {variant!r}")
    same_family(G, H)
    _check(G, PG)
    _check(H, PH)
    induced = variant == MCOIS
    directed = G.directed
    sg, sh = PG.kinds, PH.kinds
    nG2, nH2 = len(sg), len(sh)
    gout, hout = G.out_adj, H.out_adj
    gnb = [G.nbr_mask(v) for v in range(G.n + 1)]
    hnb = [H.nbr_mask(v) for v in range(H.n + 1)]

    def gain(x, y, Xc, Xf, Yc, Yf):
        """Objective gain of matching new ``x`` with new ``y``; None if illegal."""
        if induced:
            if gnb[x] & Xf or hnb[y] & Yf:
                return None
            if (gout[x] >> x & 1) != (hout[y] >> y & 1):
                return None
            for a, b in _aligned(Xc, Yc):
                if (gout[x] >> a & 1) != (hout[y] >> b & 1):
                    return None
                if directed and (gout[a] >> x & 1) != (hout[b] >> y & 1):
                    return None
            return 1
        z = 1 if gout[x] >> x & 1 and hout[y] >> y & 1 else 0
        for a, b in _aligned(Xc, Yc):
            z += gout[x] >> a & 1 and hout[y] >> b & 1
            if directed:
                z += gout[a] >> x & 1 and hout[b] >> y & 1
        return z

    def g_step(state, step):
        kind, v = sg[step - 1]
        if kind == "introduce":
            return state
        Xc, Xf, Yc, Yf = state
        bit = 1 << v
        if Xc & bit:
            y = _partner(v, Xc, Yc)
            Yc &= ~(1 << y)
            if induced:
                Yf |= 1 << y
            return Xc & ~bit, Xf, Yc, Yf
        return Xc, Xf & ~bit, Yc, Yf

    def h_step(state, step):
        kind, v = sh[step - 1]
        if kind == "introduce":
            return state
        Xc, Xf, Yc, Yf = state
        bit = 1 << v
        if Yc & bit:
            x = _partner(v, Yc, Xc)
            Xc &= ~(1 << x)
            if induced:
                Xf |= 1 << x
            return Xc, Xf, Yc & ~bit, Yf
        return Xc, Xf, Yc, Yf & ~bit

    # table[i][j]: state -> (value, parent cell, parent state, matched pair)
    table = [[{} for _ in range(nH2 + 1)] for _ in range(nG2 + 1)]
    table[0][0][(0, 0, 0, 0)] = (0, None, None, None)
    count = 0

    def relax(i, j, state, value, parent, pstate, pair):
        cell = table[i][j]
        old = cell.get(state)
        if old is None or value > old[0]:
            cell[state] = (value, parent, pstate, pair)

    for i in range(nG2 + 1):
        for j in range(nH2 + 1):
            cell = table[i][j]
            count += len(cell)
            for state, (value, *_rest) in cell.items():
                if i < nG2:
                    relax(i + 1, j, g_step(state, i + 1), value, (i, j), state, None)
                if j < nH2:
                    relax(i, j + 1, h_step(state, j + 1), value, (i, j), state, None)
                if i < nG2 and j < nH2 and sg[i][0] == "introduce" and sh[j][0] == "introduce":
                    x, y = sg[i][1], sh[j][1]
                    Xc, Xf, Yc, Yf = state
                    z = gain(x, y, Xc, Xf, Yc, Yf)
                    if z is not None:
                        new = (Xc | 1 << x, Xf, Yc | 1 << y, Yf)
                        relax(i + 1, j + 1, new, value + z, (i, j), state, (x, y))

    base = 3 if induced else 2
    bound = (nG2 + 1) * (nH2 + 1) * base ** (PG.width + 1) * base ** (PH.width + 1)
    if count > bound:
        raise AssertionError(f"state count {count} exceeds bound {bound}")
    if stats is not None:
        stats.update(states=count, bound=bound, widths=(PG.width, PH.width))
    final = table[nG2][nH2].get((0, 0, 0, 0))
    if final is None:
        raise AssertionError("empty final state is always reachable")
    return CommonSolution(variant, _walk_back(table, nG2, nH2), final[0])


def _walk_back(table, i, j):
    pairs = []
    state = (0, 0, 0, 0)
    while True:
        _value, parent, pstate, pair = table[i][j][state]
        if pair is not None:
            pairs.append(pair)
        if parent is None:
            break
        (i, j), state = parent, pstate
    pairs.reverse()
    return pairs

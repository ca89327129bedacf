from hypothesis import strategies as st

from ordsub.core import BIPARTITE, DIRECTED, UNDIRECTED, OrderedGraph


@st.composite
def graphs(draw, kind=UNDIRECTED, min_n=0, max_n=7, sides=False):
    """Small random ordered graphs; ``sides`` attaches a random side map."""
    n = draw(st.integers(min_n, max_n))
    side = None
    if kind == BIPARTITE or sides:
        side = tuple(draw(st.lists(st.sampled_from("XY"), min_size=n, max_size=n)))
    if kind == DIRECTED:
        slots = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    else:
        slots = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if kind != BIPARTITE or side[i - 1] != side[j - 1]]
    bits = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    edges = frozenset(e for e, b in zip(slots, bits) if b)
    return OrderedGraph(n, kind, edges, side)

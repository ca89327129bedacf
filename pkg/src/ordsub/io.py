"""The ``.og`` text format.

::

    og 1
    kind undirected|directed|bipartite
    n <int>
    side <0/1 string>      # optional; 0 = X, 1 = Y
    m <int>
    e <i> <j>              # m lines, 1-based ranks

``#`` starts a comment.  Ranks are the ordering, so there is no order line.
"""

from __future__ import annotations

from pathlib import Path

from .core import BIPARTITE, DIRECTED, KINDS, OrderedGraph


class ParseError(ValueError):
    """A ``.og`` file is malformed."""


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_og(text: str) -> OrderedGraph:
    lines = list(_lines(text))
    pos = 0

    def expect(key, count=1):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of file, expected {key!r}")
        lineno, toks = lines[pos]
        if toks[0] != key or len(toks) != count + 1:
            raise ParseError(f"line {lineno}: expected '{key}' with {count} value(s)")
        pos += 1
        return lineno, toks[1:]

    lineno, (version,) = expect("og")
    if version != "1":
        raise ParseError(f"line {lineno}: unsupported version {version}")
    lineno, (kind,) = expect("kind")
    if kind not in KINDS:
        raise ParseError(f"line {lineno}: unknown kind {kind!r}")
    lineno, (n_tok,) = expect("n")
    n = _int(n_tok, lineno)
    if n < 0:
        raise ParseError(f"line {lineno}: negative n")
    side = None
    if pos < len(lines) and lines[pos][1][0] == "side":
        lineno, toks = lines[pos]
        pos += 1
        bits = toks[1] if len(toks) == 2 else None
        if bits is None or len(bits) != n or set(bits) - {"0", "1"}:
            raise ParseError(f"line {lineno}: side needs a 0/1 string of length {n}")
        side = tuple("X" if b == "0" else "Y" for b in bits)
    lineno, (m_tok,) = expect("m")
    m = _int(m_tok, lineno)
    edges = []
    for _ in range(m):
        lineno, (a, b) = expect("e", 2)
        i, j = _int(a, lineno), _int(b, lineno)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"line {lineno}: rank out of range 1..{n}")
        if kind != DIRECTED and i >= j:
            raise ParseError(f"line {lineno}: undirected edges need i < j")
        edges.append((i, j))
    if pos != len(lines):
        raise ParseError(f"line {lines[pos][0]}: trailing content")
    if side is None and kind == BIPARTITE and n == 0:
        side = ()
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge lines")
    try:
        return OrderedGraph(n, kind, frozenset(edges), side)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_og(G: OrderedGraph) -> str:
    """Canonical text: edges sorted, trailing newline."""
    out = ["og 1", f"kind {G.kind}", f"n {G.n}"]
    if G.side is not None and G.n:
        out.append("side " + "".join("0" if s == "X" else "1" for s in G.side))
    out.append(f"m {G.m}")
    out.extend(f"e {i} {j}" for i, j in sorted(G.edges))
    return "\n".join(out) + "\n"


def read_og(path) -> OrderedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_og(text)


def write_og(G: OrderedGraph, path) -> None:
    Path(path).write_text(format_og(G))


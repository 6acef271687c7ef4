"""graph6 and plain edge-list codecs."""

from __future__ import annotations

from mmwidth._exceptions import Graph6ParseError, GroundSetTooLargeError, InvalidInputError
from mmwidth.graph._graph import MAX_VERTICES, Graph

__all__ = [
    "edge_list_decode",
    "edge_list_encode",
    "graph6_decode",
    "graph6_encode",
]

_HEADER = ">>graph6<<"
_BIAS = 63


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + _BIAS)
    # 63 <= n < 2**18
    return "~" + "".join(chr(((n >> shift) & 0x3F) + _BIAS) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as graph6 text without header or trailing newline.

    The bit for pair ``i < j`` is taken column by column over the upper
    triangle, padded with zeros to a multiple of six.
    """
    out = [_size_prefix(g.n)]
    word = 0
    filled = 0
    for j in range(1, g.n):
        column = g.adj[j]
        for i in range(j):
            word = word << 1 | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(word + _BIAS))
                word = filled = 0
    if filled:
        out.append(chr((word << (6 - filled)) + _BIAS))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    """Decode a single graph6 line.

    An optional ``>>graph6<<`` header and surrounding whitespace are
    accepted.

    Raises
    ------
    Graph6ParseError
        On malformed input; ``offset`` points at the first bad byte.
    GroundSetTooLargeError
        If the encoded graph has more than 64 vertices.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6ParseError("non-ASCII byte", exc.start) from exc
    text = text.strip()
    start = len(_HEADER) if text.startswith(_HEADER) else 0
    if start == len(text):
        raise Graph6ParseError("empty input", start)

    def value(pos: int) -> int:
        code = ord(text[pos]) - _BIAS
        if not 0 <= code <= 63:
            raise Graph6ParseError(f"invalid character {text[pos]!r}", pos)
        return code

    pos = start
    first = value(pos)
    if first < 63:
        n = first
        pos += 1
    else:
        if pos + 1 < len(text) and text[pos + 1] == "~":
            raise GroundSetTooLargeError("graph6 decode", 258048, MAX_VERTICES)
        if pos + 4 > len(text):
            raise Graph6ParseError("truncated vertex count", len(text))
        n = 0
        for k in range(1, 4):
            n = n << 6 | value(pos + k)
        pos += 4
    if n > MAX_VERTICES:
        raise GroundSetTooLargeError("graph6 decode", n, MAX_VERTICES)

    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = text[pos:]
    if len(body) < need:
        raise Graph6ParseError(f"expected {need} adjacency bytes, got {len(body)}", len(text))
    if len(body) > need:
        raise Graph6ParseError("trailing data after adjacency", pos + need)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            chunk = value(pos + k // 6)
            if chunk >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # the padding characters still have to be legal
    for p in range(pos + k // 6, pos + need):
        value(p)
    return Graph(n, tuple(adj))


def edge_list_encode(g: Graph) -> str:
    """Encode as ``"n m"`` followed by one ``"u v"`` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str) -> Graph:
    """Parse the edge-list format; blank lines and ``#`` comments are skipped.

    Raises
    ------
    InvalidInputError
        If the header is missing, a line is malformed or the edge count
        disagrees with the header.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise InvalidInputError("edge list is empty")
    lineno, header = rows[0]
    try:
        n, m = (int(tok) for tok in header)
    except ValueError as exc:
        raise InvalidInputError(f"line {lineno}: expected 'n m' header") from exc
    edges = []
    for lineno, fields in rows[1:]:
        try:
            u, v = (int(tok) for tok in fields)
        except ValueError as exc:
            raise InvalidInputError(f"line {lineno}: expected 'u v'") from exc
        edges.append((u, v))
    if len(edges) != m:
        raise InvalidInputError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)

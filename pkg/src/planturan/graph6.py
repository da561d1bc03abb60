"""graph6 encoding restricted to the single-byte size prefix (n <= 62)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_GRAPH6_VERTICES = 62


class Graph6Error(GraphError):
    """Malformed graph6 text or a graph too large for the short format."""


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error(f"graph6 short form supports n <= {MAX_GRAPH6_VERTICES}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    filled = 0
    # column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    values = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        values.append(c - 63)
    n = values[0]
    if n == 63:
        raise Graph6Error("graph6 long size prefix (n > 62) is not supported")
    if n == 0:
        raise Graph6Error("graph6 with zero vertices is not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = values[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, payload)`` for non-blank lines, header stripped."""
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if s.startswith(HEADER):
            s = s[len(HEADER):]
        if s:
            yield lineno, s

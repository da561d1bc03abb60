"""Dense small-graph value type backed by one adjacency bitmask per vertex."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Python ints are unbounded, so rows are not tied to a 64-bit word; the cap only
# keeps construction sweeps bounded. graph6 output is limited separately.
MAX_VERTICES = 256


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, bad sizes)."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge. Mutators return copies.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> Graph:
        # Skips validation; only for rows derived from an already valid graph.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    # -- queries ------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1) << (u + 1)):
                yield u, v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            free = ~row & full
            for v in bits(free >> (u + 1) << (u + 1)):
                yield u, v

    def triangles_on_edge(self, x: int, y: int) -> int:
        """Number of triangles through edge ``xy`` (common neighbours)."""
        if not self.has_edge(x, y):
            raise GraphError(f"({x}, {y}) is not an edge")
        return (self.adj[x] & self.adj[y]).bit_count()

    def edges_to_set(self, v: int, vertex_set: Iterable[int]) -> tuple[int, int]:
        """Split the degree of ``v`` into (inner, outer) edges relative to ``vertex_set``."""
        mask = mask_of(vertex_set)
        self._check_vertex(v)
        if not mask >> v & 1:
            raise GraphError(f"vertex {v} is not in the given set")
        if mask >> self.n:
            raise GraphError("vertex set has members outside the graph")
        row = self.adj[v]
        return (row & mask).bit_count(), (row & ~mask).bit_count()

    def is_connected(self) -> bool:
        return component_masks(self.adj, self.n)[0] == (1 << self.n) - 1

    # -- derived graphs -----------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, rows)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph._trusted(self.n, rows)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            new = 0
            for u in bits(self.adj[v]):
                if u in index:
                    new |= 1 << index[u]
            rows.append(new)
        return Graph._trusted(len(vertices), rows)

    def with_isolated(self, extra: int = 1) -> Graph:
        return Graph(self.n + extra, self.adj + (0,) * extra)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def triangles_on_edge(g: Graph, x: int, y: int) -> int:
    return g.triangles_on_edge(x, y)


def edges_to_set(g: Graph, v: int, vertex_set: Iterable[int]) -> tuple[int, int]:
    return g.edges_to_set(v, vertex_set)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    if offset > MAX_VERTICES:
        raise GraphError(f"disjoint union has {offset} vertices, cap is {MAX_VERTICES}")
    return Graph._trusted(offset, rows)


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def component_masks(adj: Sequence[int], n: int) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member."""
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        remaining &= ~seen
    return comps

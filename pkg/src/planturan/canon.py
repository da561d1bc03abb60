"""Exact canonical labeling by individualization-refinement.

The search tree individualizes one vertex of the first smallest non-singleton
cell at each level and refines to an equitable partition. Leaves give
relabeled adjacency rows; the minimum over all leaves is the certificate.
Automorphisms are detected when two leaves produce the same rows and are
used to skip children lying in the same orbit of the prefix stabilizer.
"""

from __future__ import annotations

from .graph import Graph, bits

CanonicalForm = bytes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(c)
            else:
                new.extend(groups[k] for k in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_rows(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, rows)``: ``order[i]`` is the vertex placed at position ``i``."""
    n, adj = g.n, g.adj
    autos: list[list[int]] = []
    seen: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
    best: list = [None, None]
    no_jump = n + 1

    def visit(cells: list[list[int]], prefix: list[int]) -> int:
        # Returns the depth to resume at: after finding an automorphism that
        # maps an explored leaf here, everything below their common ancestor is
        # an image of explored territory.
        depth = len(prefix)
        target = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
        if target < 0:
            order = [c[0] for c in cells]
            rows = _leaf_rows(adj, order)
            hit = seen.get(rows)
            if hit is not None:
                other, other_prefix = hit
                perm = [0] * n
                for a, b in zip(order, other):
                    perm[a] = b
                autos.append(perm)
                k = 0
                while k < depth and k < len(other_prefix) and prefix[k] == other_prefix[k]:
                    k += 1
                return k
            seen[rows] = (order, prefix)
            if best[0] is None or rows < best[0]:
                best[0], best[1] = rows, order
            return no_jump
        cell = sorted(cells[target])
        explored: list[int] = []
        for v in cell:
            if explored:
                stab = [a for a in autos if all(a[p] == p for p in prefix)]
                if stab:
                    roots = _orbit_roots(n, stab)
                    if any(roots[v] == roots[w] for w in explored):
                        continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            back = visit(_refine(adj, child), prefix + [v])
            if back < depth:
                return back
        return no_jump

    visit(_refine(adj, [list(range(n))]), [])
    return best[1], best[0]


def _pack(n: int, rows: tuple[int, ...]) -> bytes:
    width = (n + 7) // 8
    return n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Byte string shared exactly by all graphs isomorphic to ``g``."""
    _, rows = canonical_labeling(g)
    return _pack(g.n, rows)


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class."""
    _, rows = canonical_labeling(g)
    return Graph._trusted(g.n, rows)


def form_to_graph(form: CanonicalForm) -> Graph:
    n = int.from_bytes(form[:2], "big")
    width = (n + 7) // 8
    rows = tuple(int.from_bytes(form[2 + i * width: 2 + (i + 1) * width], "big") for i in range(n))
    return Graph(n, rows)


def canonical_with_graph(g: Graph) -> tuple[CanonicalForm, Graph]:
    _, rows = canonical_labeling(g)
    return _pack(g.n, rows), Graph._trusted(g.n, rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)

"""Planarity testing.

``is_planar`` runs the left-right planarity criterion (DFS orientation with
lowpoints and nesting depths, then a second DFS maintaining a stack of
conflict pairs of return-edge intervals). ``is_planar_oracle`` is an
independent exhaustive check through Wagner's theorem: a connected graph is
nonplanar iff its vertex set splits into 5 connected blocks that are pairwise
adjacent (a K5 minor) or 6 connected blocks whose quotient contains K3,3.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from itertools import combinations

import numpy as np

from .graph import Graph, bits, component_masks

ORACLE_MAX_VERTICES = 9


class OracleRangeError(ValueError):
    pass


# --- left-right criterion ----------------------------------------------------


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: int = -1, high: int = -1) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low < 0 and self.high < 0

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)


class _Pair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None) -> None:
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRTester:
    # Edges are encoded as v * n + w for the orientation v -> w; -1 means none.

    def __init__(self, g: Graph) -> None:
        n = g.n
        self.n = n
        self.nbrs = [bits(row) for row in g.adj]
        self.height = [-1] * n
        self.parent_edge = [-1] * n
        size = n * n
        self.oriented = [False] * size
        self.lowpt = [0] * size
        self.lowpt2 = [0] * size
        self.nesting = [0] * size
        self.ref = [-1] * size
        self.lowpt_edge = [-1] * size
        self.stack_bottom: dict[int, _Pair | None] = {}
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.S: list[_Pair] = []

    def run(self) -> bool:
        roots = []
        for v in range(self.n):
            if self.height[v] < 0:
                self.height[v] = 0
                roots.append(v)
                self._orient(v)
        n = self.n
        for v in range(n):
            self.out[v].sort(key=lambda w, v=v: self.nesting[v * n + w])
        for r in roots:
            if not self._test(r):
                return False
        return True

    def _orient(self, v: int) -> None:
        n = self.n
        e = self.parent_edge[v]
        for w in self.nbrs[v]:
            if self.oriented[v * n + w] or self.oriented[w * n + v]:
                continue
            vw = v * n + w
            self.oriented[vw] = True
            self.out[v].append(w)
            self.lowpt[vw] = self.height[v]
            self.lowpt2[vw] = self.height[v]
            if self.height[w] < 0:
                self.parent_edge[w] = vw
                self.height[w] = self.height[v] + 1
                self._orient(w)
            else:
                self.lowpt[vw] = self.height[w]
            self.nesting[vw] = 2 * self.lowpt[vw]
            if self.lowpt2[vw] < self.height[v]:
                self.nesting[vw] += 1
            if e >= 0:
                if self.lowpt[vw] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                    self.lowpt[e] = self.lowpt[vw]
                elif self.lowpt[vw] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    def _top(self) -> _Pair | None:
        return self.S[-1] if self.S else None

    def _conflicting(self, iv: _Interval, b: int) -> bool:
        return not iv.empty() and self.lowpt[iv.high] > self.lowpt[b]

    def _lowest(self, p: _Pair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def _test(self, v: int) -> bool:
        n = self.n
        e = self.parent_edge[v]
        first = True
        for w in self.out[v]:
            ei = v * n + w
            self.stack_bottom[ei] = self._top()
            if ei == self.parent_edge[w]:
                if not self._test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self.S.append(_Pair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if first:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
            first = False
        if e >= 0:
            self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: int, e: int) -> bool:
        P = _Pair()
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if self.lowpt[Q.right.low] > self.lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while self.S and (
            self._conflicting(self.S[-1].left, ei) or self._conflicting(self.S[-1].right, ei)
        ):
            Q = self.S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            self.ref[P.right.low] = Q.right.high
            if Q.right.low >= 0:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _remove_back_edges(self, e: int) -> None:
        n = self.n
        u = e // n
        hu = self.height[u]
        while self.S and self._lowest(self.S[-1]) == hu:
            self.S.pop()
        if self.S:
            P = self.S.pop()
            while P.left.high >= 0 and P.left.high % n == u:
                P.left.high = self.ref[P.left.high]
            if P.left.high < 0 and P.left.low >= 0:
                self.ref[P.left.low] = P.right.low
                P.left.low = -1
            while P.right.high >= 0 and P.right.high % n == u:
                P.right.high = self.ref[P.right.high]
            if P.right.high < 0 and P.right.low >= 0:
                self.ref[P.right.low] = P.left.low
                P.right.low = -1
            self.S.append(P)
        if self.lowpt[e] < hu:
            top = self.S[-1]
            hl, hr = top.left.high, top.right.high
            if hl >= 0 and (hr < 0 or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr


def is_planar(g: Graph) -> bool:
    """Left-right planarity test; disconnected inputs are handled per DFS tree."""
    n = g.n
    if n >= 3 and g.edge_count > 3 * n - 6:
        return False
    if n <= 4:
        return True
    if n > 400:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n))
    return _LRTester(g).run()


# --- minor-search oracle -----------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(n: int, blocks: int) -> np.ndarray:
    """All set partitions of range(n) into exactly ``blocks`` parts, as block masks."""
    out: list[list[int]] = []
    label = [0] * n

    def rec(i: int, used: int) -> None:
        if n - i < blocks - used:
            return
        if i == n:
            masks = [0] * blocks
            for v, b in enumerate(label):
                masks[b] |= 1 << v
            out.append(masks)
            return
        for b in range(used):
            label[i] = b
            rec(i + 1, used)
        if used < blocks:
            label[i] = used
            rec(i + 1, used + 1)

    rec(0, 0)
    return np.array(out, dtype=np.int64).reshape(-1, blocks)


_K33_SPLITS = [
    (side, tuple(b for b in range(6) if b not in side))
    for side in combinations(range(6), 3)
    if 0 in side
]


def _component_nonplanar(adj: list[int], c: int) -> bool:
    size = 1 << c
    nbr = [0] * size
    conn = np.zeros(size, dtype=bool)
    for mask in range(1, size):
        low = mask & -mask
        nbr[mask] = nbr[mask ^ low] | adj[low.bit_length() - 1]
        seen = frontier = low
        while frontier:
            lb = frontier & -frontier
            frontier ^= lb
            new = adj[lb.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        conn[mask] = seen == mask
    nbr_arr = np.array(nbr, dtype=np.int64)

    for t in (5, 6):
        if c < t:
            continue
        parts = _partitions(c, t)
        parts = parts[conn[parts].all(axis=1)]
        if not len(parts):
            continue
        reach = nbr_arr[parts]
        touch = (reach[:, :, None] & parts[:, None, :]) != 0
        if t == 5:
            iu = np.triu_indices(5, 1)
            if touch[:, iu[0], iu[1]].all(axis=1).any():
                return True
        else:
            for xs, ys in _K33_SPLITS:
                ok = np.ones(len(parts), dtype=bool)
                for x in xs:
                    for y in ys:
                        ok &= touch[:, x, y]
                if ok.any():
                    return True
    return False


def is_planar_oracle(g: Graph) -> bool:
    """Exhaustive K5 / K3,3 minor search; independent of ``is_planar``."""
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleRangeError(f"oracle supports n <= {ORACLE_MAX_VERTICES}, got {g.n}")
    for comp in component_masks(g.adj, g.n):
        verts = bits(comp)
        if len(verts) < 5:
            continue
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            row = 0
            for u in bits(g.adj[v]):
                row |= 1 << index[u]
            adj.append(row)
        if _component_nonplanar(adj, len(verts)):
            return False
    return True

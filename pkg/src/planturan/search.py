"""Exact planar Turán numbers of double stars by isomorph-free edge addition.

Planarity and S_{m,k}-freeness are both closed under edge deletion, so every
feasible graph with e + 1 edges has a feasible parent with e edges. The search
therefore grows the family level by level from the edgeless graph, keeping
one canonical representative per isomorphism class; the last nonempty level
holds exactly the extremal graphs.
"""

from __future__ import annotations

import logging
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .canon import canonical_form, canonical_with_graph, form_to_graph
from .doublestar import DoubleStarPattern, contains_at, contains_oracle, is_free
from .graph import Graph, bits
from .planarity import is_planar, is_planar_oracle

log = logging.getLogger(__name__)

HARD_MAX_N = 62
NAIVE_MAX_N = 6


@dataclass(frozen=True)
class SearchConfig:
    worker_count: int = 1
    node_budget: int | None = None
    collect_extremal: bool = True
    extremal_cap: int = 100

    def __post_init__(self) -> None:
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node_budget must be nonnegative")

    @classmethod
    def default(cls) -> SearchConfig:
        return cls(worker_count=os.cpu_count() or 1)


@dataclass
class ExactResult:
    n: int
    pattern: DoubleStarPattern
    value: int
    exact: bool
    extremal: list[Graph]
    extremal_count: int
    nodes_explored: int
    elapsed: float
    level_sizes: list[int] = field(default_factory=list)

    @property
    def witness(self) -> Graph:
        return self.extremal[0]


# --- level generation --------------------------------------------------------


def _children(g: Graph, pattern: DoubleStarPattern | None, planar: bool = True) -> list[bytes]:
    n = g.n
    adj = g.adj
    out = []
    for u, v in g.non_edges():
        rows = list(adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        h = Graph._trusted(n, rows)
        if pattern is not None and contains_at(h, pattern, (u, v)):
            continue
        if planar and not is_planar(h):
            continue
        out.append(canonical_form(h))
    return out


def _expand_chunk(args: tuple[list[tuple[int, ...]], int, DoubleStarPattern | None, bool]) -> list[bytes]:
    rows_list, n, pattern, planar = args
    forms: set[bytes] = set()
    for rows in rows_list:
        forms.update(_children(Graph._trusted(n, rows), pattern, planar))
    return sorted(forms)


def _expand_level(
    level: list[Graph], pattern: DoubleStarPattern | None, workers: int, pool, planar: bool = True
) -> list[Graph]:
    n = level[0].n
    if pool is None or len(level) < 2 * workers:
        forms = set(_expand_chunk(([g.adj for g in level], n, pattern, planar)))
    else:
        nchunks = min(len(level), 4 * workers)
        chunks = [
            ([g.adj for g in level[i::nchunks]], n, pattern, planar) for i in range(nchunks)
        ]
        forms = set()
        for part in pool.map(_expand_chunk, chunks):
            forms.update(part)
    return [form_to_graph(f) for f in sorted(forms)]


def _levels(n: int, pattern: DoubleStarPattern | None, cfg: SearchConfig, planar: bool = True):
    """Yield successive nonempty levels; the generator owns the worker pool."""
    level = [Graph.empty(n)]
    pool = None
    if cfg.worker_count > 1:
        pool = multiprocessing.get_context("fork").Pool(cfg.worker_count)
    try:
        while level:
            yield level
            if planar and n >= 3 and level[0].edge_count >= 3 * n - 6:
                return
            level = _expand_level(level, pattern, cfg.worker_count, pool, planar)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()


def free_planar_classes(n: int, pattern: DoubleStarPattern | None) -> list[list[Graph]]:
    """All planar (and ``pattern``-free) graphs on ``n`` vertices up to isomorphism, by edge count."""
    return list(_levels(n, pattern, SearchConfig()))


def all_graph_classes(n: int) -> list[Graph]:
    """Every graph on ``n`` vertices up to isomorphism (no planarity filter)."""
    return [g for level in _levels(n, None, SearchConfig(), planar=False) for g in level]


def exact_planar_turan(
    n: int, pattern: DoubleStarPattern, cfg: SearchConfig | None = None
) -> ExactResult:
    """Exact ex_P(n, S_{m,k}); non-exact (lower bound) only if the node budget runs out."""
    if not 1 <= n <= HARD_MAX_N:
        raise ValueError(f"n must be in 1..{HARD_MAX_N}, got {n}")
    cfg = cfg or SearchConfig()
    start = time.perf_counter()
    nodes = 0
    exact = True
    sizes: list[int] = []
    best: list[Graph] = []
    gen = _levels(n, pattern, cfg)
    for level in gen:
        best = level
        sizes.append(len(level))
        if cfg.node_budget is not None and nodes + len(level) > cfg.node_budget:
            # The next level may be nonempty; report what we have as a lower bound.
            if not (n >= 3 and level[0].edge_count >= 3 * n - 6):
                exact = False
            gen.close()
            break
        nodes += len(level)
    value = best[0].edge_count
    for g in best:
        if g.edge_count != value or not is_planar(g) or not is_free(g, pattern):
            raise RuntimeError(f"extremal graph failed re-verification: {g!r}")
    extremal = best[: cfg.extremal_cap] if cfg.collect_extremal else best[:1]
    elapsed = time.perf_counter() - start
    log.info("ex_P(%d, S_%s) %s %d after %d nodes", n, pattern, "=" if exact else ">=", value, nodes)
    return ExactResult(n, pattern, value, exact, extremal, len(best), nodes, elapsed, sizes)


# --- ground-truth oracle -----------------------------------------------------


_oracle_planar_memo: dict[tuple[int, int], bool] = {}


def _oracle_planar(n: int, mask: int, g: Graph) -> bool:
    key = (n, mask)
    hit = _oracle_planar_memo.get(key)
    if hit is None:
        hit = _oracle_planar_memo[key] = is_planar_oracle(g)
    return hit


def naive_exact(n: int, pattern: DoubleStarPattern) -> int:
    """Maximum edges over every labeled graph on ``n`` vertices, via the two oracles."""
    if not 1 <= n <= NAIVE_MAX_N:
        raise ValueError(f"naive_exact supports 1 <= n <= {NAIVE_MAX_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for e in range(len(pairs), -1, -1):
        for chosen in combinations(range(len(pairs)), e):
            g = Graph.from_edges(n, [pairs[i] for i in chosen])
            if contains_oracle(g, pattern):
                continue
            mask = sum(1 << i for i in chosen)
            if _oracle_planar(n, mask, g):
                return e
    raise AssertionError("the edgeless graph is always feasible")


# --- triangulations ----------------------------------------------------------


def _rotation(g: Graph, w: int) -> list[int]:
    """Cyclic order of the neighbours of ``w`` in the (unique) embedding."""
    nbrs = g.adj[w]
    full = (1 << g.n) - 1
    link: dict[int, list[int]] = {a: [] for a in bits(nbrs)}
    for a in bits(nbrs):
        for b in bits(g.adj[a] & nbrs):
            if b <= a:
                continue
            rest = full & ~(1 << w | 1 << a | 1 << b)
            # a triangle of a 3-connected plane graph is a face iff it is non-separating
            if g.n == 4 or _connected_within(g, rest):
                link[a].append(b)
                link[b].append(a)
    start = min(link)
    order = [start]
    prev, cur = -1, start
    while True:
        a, b = link[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != len(link):
        raise AssertionError("neighbourhood link is not a single cycle")
    return order


def _connected_within(g: Graph, mask: int) -> bool:
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = g.adj[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _vertex_splits(g: Graph) -> list[Graph]:
    n = g.n
    out = []
    for w in range(n):
        ring = _rotation(g, w)
        d = len(ring)
        for i in range(d):
            for j in range(i + 1, d):
                keep = ring[i:j + 1]
                move = ring[j:] + ring[:i + 1]
                rows = list(g.adj) + [0]
                for u in ring:
                    rows[u] &= ~(1 << w)
                rows[w] = 0
                for u in keep:
                    rows[w] |= 1 << u
                    rows[u] |= 1 << w
                for u in move:
                    rows[n] |= 1 << u
                    rows[u] |= 1 << n
                rows[w] |= 1 << n
                rows[n] |= 1 << w
                out.append(Graph._trusted(n + 1, rows))
    return out


def enumerate_maximal_planar(n: int) -> list[Graph]:
    """All triangulations on ``n`` vertices up to isomorphism (3 <= n <= 10).

    Every triangulation on at least 5 vertices has a contractible edge, so all
    of them arise from smaller ones by splitting a vertex along two of its
    neighbours in the rotation.
    """
    if not 3 <= n <= 10:
        raise ValueError(f"enumerate_maximal_planar supports 3 <= n <= 10, got {n}")
    if n == 3:
        return [Graph.complete(3)]
    current = {canonical_form(Graph.complete(4)): Graph.complete(4)}
    for _ in range(4, n):
        nxt: dict[bytes, Graph] = {}
        for g in current.values():
            for h in _vertex_splits(g):
                form, cg = canonical_with_graph(h)
                if form not in nxt:
                    nxt[form] = cg
        current = nxt
    graphs = [current[f] for f in sorted(current)]
    for g in graphs:
        if g.edge_count != 3 * n - 6 or not is_planar(g):
            raise RuntimeError(f"vertex split produced a non-triangulation: {g!r}")
    return graphs


def extremal_forms(graphs: Sequence[Graph]) -> set[bytes]:
    return {canonical_form(g) for g in graphs}

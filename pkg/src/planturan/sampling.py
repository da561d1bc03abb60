"""Heuristic random planar graphs: stacked triangulations, edge flips, then pruning.

Not a uniform sampler. Triangulations come from repeated vertex stacking
into a random face followed by random Delaunay-style flips; pattern copies
are then destroyed by deleting a random edge of a found witness until none
remain.
"""

from __future__ import annotations

import random

from .doublestar import DoubleStarPattern, contains_double_star
from .graph import Graph


def _stacked_faces(n: int, rng: random.Random) -> list[tuple[int, int, int]]:
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.extend([(b, c, v), (c, a, v)])
    return faces


def _flip(faces: list[tuple[int, int, int]], adj: list[int], rng: random.Random) -> None:
    i = rng.randrange(len(faces))
    f = faces[i]
    x, y = rng.sample(f, 2)
    (p,) = [v for v in f if v not in (x, y)]
    others = [j for j, h in enumerate(faces) if j != i and x in h and y in h]
    if len(others) != 1:
        return
    j = others[0]
    (q,) = [v for v in faces[j] if v not in (x, y)]
    if p == q or adj[p] >> q & 1:
        return
    # keep every vertex at degree >= 3
    if adj[x].bit_count() <= 3 or adj[y].bit_count() <= 3:
        return
    adj[x] &= ~(1 << y)
    adj[y] &= ~(1 << x)
    adj[p] |= 1 << q
    adj[q] |= 1 << p
    faces[i] = (p, q, x)
    faces[j] = (p, q, y)


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> Graph:
    """Random maximal planar graph on ``n >= 3`` vertices."""
    if n < 3:
        raise ValueError("triangulations need at least 3 vertices")
    faces = _stacked_faces(n, rng)
    adj = [0] * n
    for a, b, c in faces:
        adj[a] |= 1 << b | 1 << c
        adj[b] |= 1 << a | 1 << c
        adj[c] |= 1 << a | 1 << b
    for _ in range(n if flips is None else flips):
        _flip(faces, adj, rng)
    return Graph(n, tuple(adj))


def prune_to_free(g: Graph, p: DoubleStarPattern, rng: random.Random) -> Graph:
    while True:
        w = contains_double_star(g, p)
        if w is None:
            return g
        x, y = w.backbone
        choices = [(x, y)] + [(x, v) for v in w.leaves_x] + [(y, v) for v in w.leaves_y]
        u, v = rng.choice(choices)
        g = g.remove_edge(u, v)


def random_free_planar(n: int, p: DoubleStarPattern, seed: int) -> Graph:
    rng = random.Random(seed)
    g = random_triangulation(n, rng, flips=rng.randrange(0, 3 * n))
    return prune_to_free(g, p, rng)


def sample_seed(base: int, index: int) -> int:
    """Per-sample seed so any sample can be regenerated on its own."""
    return base * 1_000_003 + index

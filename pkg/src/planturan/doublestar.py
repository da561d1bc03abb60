"""Double-star containment: fast feasibility test, witnesses, brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, bits


class PatternError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DoubleStarPattern:
    """S_{m,k}: a backbone edge with ``m`` and ``k`` pendant leaves, stored with m <= k."""

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.k < 1:
            raise PatternError(f"double star needs m, k >= 1, got ({self.m}, {self.k})")
        if self.m > self.k:
            lo, hi = self.k, self.m
            object.__setattr__(self, "m", lo)
            object.__setattr__(self, "k", hi)

    @property
    def order(self) -> int:
        return self.m + self.k + 2

    @classmethod
    def parse(cls, text: str) -> DoubleStarPattern:
        try:
            m, k = (int(part) for part in text.split(","))
        except ValueError:
            raise PatternError(f"pattern must look like 'M,K', got {text!r}") from None
        return cls(m, k)

    def __str__(self) -> str:
        return f"{self.m},{self.k}"


@dataclass(frozen=True)
class Witness:
    """An embedded S_{m,k}: ``x`` carries ``leaves_x`` (size m), ``y`` carries ``leaves_y``."""

    backbone: tuple[int, int]
    leaves_x: tuple[int, ...]
    leaves_y: tuple[int, ...]

    def validate(self, g: Graph, p: DoubleStarPattern) -> None:
        """Raise ``ValueError`` unless this is a genuine copy of ``p`` in ``g``."""
        x, y = self.backbone
        if not (0 <= x < g.n and 0 <= y < g.n) or not g.adj[x] >> y & 1:
            raise ValueError(f"backbone {self.backbone} is not an edge")
        if len(self.leaves_x) != p.m or len(self.leaves_y) != p.k:
            raise ValueError("leaf-set sizes do not match the pattern")
        for leaf in self.leaves_x:
            if not g.adj[x] >> leaf & 1:
                raise ValueError(f"leaf {leaf} not adjacent to {x}")
        for leaf in self.leaves_y:
            if not g.adj[y] >> leaf & 1:
                raise ValueError(f"leaf {leaf} not adjacent to {y}")
        used = [x, y, *self.leaves_x, *self.leaves_y]
        if len(set(used)) != len(used):
            raise ValueError("backbone and leaf-sets are not pairwise disjoint")

    def __str__(self) -> str:
        x, y = self.backbone
        lx = " ".join(map(str, self.leaves_x))
        ly = " ".join(map(str, self.leaves_y))
        return f"backbone={x}-{y} leaves_x=[{lx}] leaves_y=[{ly}]"


def _orientation_ok(a_mask: int, b_mask: int, a: int, b: int) -> bool:
    # Hall's condition for picking a leaves from A and b from B disjointly.
    return (
        a_mask.bit_count() >= a
        and b_mask.bit_count() >= b
        and (a_mask | b_mask).bit_count() >= a + b
    )


def backbone_feasible(g: Graph, x: int, y: int, p: DoubleStarPattern) -> bool:
    """Can ``xy`` serve as the backbone of ``p`` (either orientation)?"""
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    A = g.adj[x] & ~(1 << y)
    B = g.adj[y] & ~(1 << x)
    return _orientation_ok(A, B, p.m, p.k) or _orientation_ok(A, B, p.k, p.m)


def _pick(mask: int, count: int) -> list[int]:
    return bits(mask)[:count]


def _build(x: int, y: int, A: int, B: int, a: int, b: int) -> tuple[list[int], list[int]]:
    # Private neighbours first, then the shared pool, lowest index first.
    shared = A & B
    lx = _pick(A & ~B, a)
    ly = _pick(B & ~A, b)
    pool = bits(shared)
    need_x = a - len(lx)
    lx += pool[:need_x]
    ly += pool[need_x:need_x + b - len(ly)]
    return sorted(lx), sorted(ly)


def _witness_on(g: Graph, x: int, y: int, p: DoubleStarPattern) -> Witness | None:
    A = g.adj[x] & ~(1 << y)
    B = g.adj[y] & ~(1 << x)
    if _orientation_ok(A, B, p.m, p.k):
        lx, ly = _build(x, y, A, B, p.m, p.k)
        return Witness((x, y), tuple(lx), tuple(ly))
    if _orientation_ok(A, B, p.k, p.m):
        ly, lx = _build(x, y, A, B, p.k, p.m)
        # y carries the m leaves here; report it as the first backbone end
        return Witness((y, x), tuple(lx), tuple(ly))
    return None


def contains_double_star(g: Graph, p: DoubleStarPattern) -> Witness | None:
    """First witness over edges in lexicographic order, or ``None`` if ``g`` is free."""
    if g.n < p.order:
        return None
    adj = g.adj
    need = p.m + 1
    for x, y in g.edges():
        if adj[x].bit_count() < need or adj[y].bit_count() < need:
            continue
        w = _witness_on(g, x, y, p)
        if w is not None:
            return w
    return None


def is_free(g: Graph, p: DoubleStarPattern) -> bool:
    return contains_double_star(g, p) is None


def contains_at(g: Graph, p: DoubleStarPattern, vertices: Iterable[int]) -> bool:
    """Containment restricted to backbones with an endpoint in ``vertices``.

    Adding edge uv only changes the neighbourhoods of u and v, so for a free
    parent this decides the child.
    """
    if g.n < p.order:
        return False
    adj = g.adj
    lo, hi = p.m, p.k
    for x in vertices:
        row = adj[x]
        if row.bit_count() <= lo:
            continue
        for y in bits(row):
            A = row & ~(1 << y)
            B = adj[y] & ~(1 << x)
            if _orientation_ok(A, B, lo, hi) or _orientation_ok(A, B, hi, lo):
                return True
    return False


def contains_oracle(g: Graph, p: DoubleStarPattern) -> bool:
    """Exhaustive embedding search with no use of the feasibility criterion."""
    for x in range(g.n):
        for y in g.neighbors(x):
            # ordered backbone (x, y): x gets m leaves, y gets k
            xs = [v for v in g.neighbors(x) if v != y]
            for lx in combinations(xs, p.m):
                taken = set(lx) | {x, y}
                ys = [v for v in g.neighbors(y) if v not in taken]
                for _ in combinations(ys, p.k):
                    return True
    return False

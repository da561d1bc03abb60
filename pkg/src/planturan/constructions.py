"""Lower-bound constructions, each built explicitly and certified on creation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .doublestar import DoubleStarPattern, is_free
from .graph import MAX_VERTICES, Graph, GraphError, disjoint_union
from .planarity import is_planar


class ConstructionError(RuntimeError):
    """A construction failed its own certificate; always a bug."""


@dataclass(frozen=True)
class ConstructionReport:
    graph: Graph
    predicted_edges: int
    family: str
    verified_planar: bool
    verified_free_of: DoubleStarPattern
    degree_profile: dict[int, int] = field(default_factory=dict)

    def summary(self) -> str:
        p = self.verified_free_of
        return (
            f"family={self.family} n={self.graph.n} edges={self.graph.edge_count} "
            f"predicted={self.predicted_edges} planar={str(self.verified_planar).lower()} "
            f"free({p.m},{p.k})=true"
        )


def certify(g: Graph, predicted: int, family: str, pattern: DoubleStarPattern) -> ConstructionReport:
    """Run the real checks and raise on any failure."""
    if g.edge_count != predicted:
        raise ConstructionError(f"{family}: {g.edge_count} edges, predicted {predicted}")
    if not is_planar(g):
        raise ConstructionError(f"{family}: graph on {g.n} vertices is not planar")
    if not is_free(g, pattern):
        raise ConstructionError(f"{family}: graph on {g.n} vertices contains S_{{{pattern}}}")
    profile = dict(sorted(Counter(g.degrees()).items()))
    return ConstructionReport(g, predicted, family, True, pattern, profile)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def k2_star(n: int) -> ConstructionReport:
    """K_{2,n-2}: hubs 0 and 1, joined to every other vertex."""
    _require(n >= 4, f"k2_star needs n >= 4, got {n}")
    edges = [(h, v) for v in range(2, n) for h in (0, 1)]
    return certify(Graph.from_edges(n, edges), 2 * n - 4, "k2star", DoubleStarPattern(2, 2))


def matched_double_wheel_edges(n: int) -> int:
    return (5 * n - 10) // 2 if n % 2 == 0 else (5 * n - 11) // 2


def matched_double_wheel(n: int) -> ConstructionReport:
    """Nonadjacent hubs 0, 1 over a maximum matching (2,3), (4,5), ... on the rest."""
    _require(n >= 4, f"matched_double_wheel needs n >= 4, got {n}")
    edges = [(h, v) for v in range(2, n) for h in (0, 1)]
    edges += [(v, v + 1) for v in range(2, n - 1, 2)]
    return certify(
        Graph.from_edges(n, edges),
        matched_double_wheel_edges(n),
        "double-wheel",
        DoubleStarPattern(3, 3),
    )


def octahedron() -> Graph:
    # antipodal pairs (0,1), (2,3), (4,5) are the non-edges
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if v != (u ^ 1)]
    return Graph.from_edges(6, edges)


def seven_vertex_triangulation() -> ConstructionReport:
    """Octahedron with vertex 6 stacked inside the face (0, 2, 4)."""
    g = octahedron()
    edges = list(g.edges()) + [(0, 6), (2, 6), (4, 6)]
    return certify(Graph.from_edges(7, edges), 15, "tri7", DoubleStarPattern(2, 4))


def icosahedron_graph() -> Graph:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (up, lo), (up, lo_next), (lo, lo_next), (lo, 11)]
    return Graph.from_edges(12, edges)


def icosahedron() -> ConstructionReport:
    return certify(icosahedron_graph(), 30, "icosa", DoubleStarPattern(3, 4))


def disjoint_copies(base: Graph, copies: int) -> Graph:
    _require(copies >= 1, f"need at least one copy, got {copies}")
    if copies * base.n > MAX_VERTICES:
        raise GraphError(f"{copies} copies of an {base.n}-vertex graph exceed {MAX_VERTICES} vertices")
    return disjoint_union([base] * copies)


def copies_report(base: ConstructionReport, copies: int) -> ConstructionReport:
    g = disjoint_copies(base.graph, copies)
    return certify(
        g,
        copies * base.predicted_edges,
        f"{base.family}x{copies}",
        base.verified_free_of,
    )


def s35_edge_count(n: int) -> int:
    return 2 * n - 3 + 6 * (n // 9)


def s35_vertex(layer: int, role: str) -> int:
    """Vertex index of a_i / b_i / c_i for 1-based layer ``i``."""
    return 3 * (layer - 1) + "abc".index(role)


def s35_construction(n: int) -> ConstructionReport:
    """Nested triangles joined along three paths, plus diagonal blocks at layers 3|j.

    Layer ``i`` holds triangle a_i b_i c_i; consecutive layers are joined
    a_i a_{i+1}, b_i b_{i+1}, c_i c_{i+1}. For each j divisible by 3 the block
    adds a_j b_{j-1}, a_{j-1} b_{j-2}, b_j c_{j-1}, b_{j-1} c_{j-2},
    c_j a_{j-1}, c_{j-1} a_{j-2}.
    """
    _require(n >= 9 and n % 3 == 0, f"s35_construction needs n >= 9 with 3 | n, got {n}")
    layers = n // 3
    V = s35_vertex
    edges = []
    for i in range(1, layers + 1):
        edges += [(V(i, "a"), V(i, "b")), (V(i, "b"), V(i, "c")), (V(i, "c"), V(i, "a"))]
        if i < layers:
            edges += [(V(i, r), V(i + 1, r)) for r in "abc"]
    for j in range(3, layers + 1, 3):
        edges += [
            (V(j, "a"), V(j - 1, "b")),
            (V(j - 1, "a"), V(j - 2, "b")),
            (V(j, "b"), V(j - 1, "c")),
            (V(j - 1, "b"), V(j - 2, "c")),
            (V(j, "c"), V(j - 1, "a")),
            (V(j - 1, "c"), V(j - 2, "a")),
        ]
    return certify(Graph.from_edges(n, edges), s35_edge_count(n), "s35", DoubleStarPattern(3, 5))


FAMILIES = ("k2star", "double-wheel", "tri7", "icosa", "s35")


def build_family(family: str, n: int | None = None, copies: int = 1) -> ConstructionReport:
    """Dispatch used by the command line."""
    if family == "k2star":
        _require(n is not None, "k2star needs --n")
        report = k2_star(n)
    elif family == "double-wheel":
        _require(n is not None, "double-wheel needs --n")
        report = matched_double_wheel(n)
    elif family == "tri7":
        report = seven_vertex_triangulation()
    elif family == "icosa":
        report = icosahedron()
    elif family == "s35":
        _require(n is not None, "s35 needs --n")
        report = s35_construction(n)
    else:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if copies != 1:
        report = copies_report(report, copies)
    return report

"""Structural predicate suites checked against exhaustive and random samples."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from . import graph6
from .constructions import (
    copies_report,
    icosahedron,
    matched_double_wheel,
    seven_vertex_triangulation,
)
from .doublestar import DoubleStarPattern, contains_double_star
from .graph import Graph
from .sampling import random_free_planar, sample_seed
from .search import enumerate_maximal_planar, exact_planar_turan, free_planar_classes

S22 = DoubleStarPattern(2, 2)
S33 = DoubleStarPattern(3, 3)
S34 = DoubleStarPattern(3, 4)

DEFAULT_SAMPLES = 1000
EXHAUSTIVE_MAX_N = 7
RANDOM_N_RANGE = (8, 20)
S22_CEILING_NS = (3, 4, 6, 7, 8)


@dataclass(frozen=True)
class PredicateResult:
    name: str
    passed: bool
    counterexample: str | None
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" counterexample={self.counterexample}" if self.counterexample else ""
        return f"{self.name} {status} checked={self.checked}{tail}"


EdgeCheck = Callable[[Graph, int, int, int, int], bool]


def _degree_pair_check(big: int, small: int) -> EdgeCheck:
    def ok(g: Graph, x: int, y: int, dx: int, dy: int) -> bool:
        return not ((dx >= big and dy >= small) or (dy >= big and dx >= small))

    return ok


def _common_check(dx_: int, dy_: int, test: Callable[[int], bool]) -> EdgeCheck:
    def ok(g: Graph, x: int, y: int, dx: int, dy: int) -> bool:
        if {dx, dy} != {dx_, dy_} or (dx_ == dy_ and dx != dy):
            return True
        return test((g.adj[x] & g.adj[y]).bit_count())

    return ok


EDGE_PREDICATES: dict[str, tuple[DoubleStarPattern, EdgeCheck]] = {
    "s33-deg7": (S33, _degree_pair_check(7, 4)),
    "s33-66edge": (S33, _common_check(6, 6, lambda t: t == 5)),
    "s33-55edge": (S33, _common_check(5, 5, lambda t: t >= 3)),
    "s34-deg8": (S34, _degree_pair_check(8, 4)),
    "s34-77edge": (S34, _common_check(7, 7, lambda t: t == 6)),
}

SUITES = ("s22-lemma21", "s22-fig2", *EDGE_PREDICATES)


def edge_predicate_holds(name: str, g: Graph) -> bool:
    _, check = EDGE_PREDICATES[name]
    deg = g.degrees()
    return all(check(g, x, y, deg[x], deg[y]) for x, y in g.edges())


def _construction_samples(p: DoubleStarPattern) -> list[Graph]:
    if p == S33:
        return [matched_double_wheel(n).graph for n in range(4, 21)]
    if p == S34:
        ico = icosahedron()
        out = [ico.graph, copies_report(ico, 2).graph, copies_report(ico, 5).graph]
        return out + [matched_double_wheel(n).graph for n in range(4, 21)]
    return [seven_vertex_triangulation().graph]


@lru_cache(maxsize=None)
def free_samples(p: DoubleStarPattern, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> tuple[Graph, ...]:
    """Exhaustive classes for n <= 7, the known extremal constructions, then random samples."""
    out: list[Graph] = []
    for n in range(1, EXHAUSTIVE_MAX_N + 1):
        for level in free_planar_classes(n, p):
            out.extend(level)
    out.extend(_construction_samples(p))
    lo, hi = RANDOM_N_RANGE
    for i in range(samples):
        s = sample_seed(seed, i)
        n = lo + s % (hi - lo + 1)
        out.append(random_free_planar(n, p, s))
    return tuple(out)


def _run_edge_predicate(name: str, graphs: Iterable[Graph]) -> PredicateResult:
    checked = 0
    for g in graphs:
        checked += 1
        if not edge_predicate_holds(name, g):
            return PredicateResult(name, False, graph6.encode(g), checked)
    return PredicateResult(name, True, None, checked)


def _s22_ceiling() -> PredicateResult:
    checked = 0
    values = []
    for n in S22_CEILING_NS:
        res = exact_planar_turan(n, S22)
        checked += 1
        values.append(f"{n}:{res.value}")
        if not res.exact or res.value > 2 * n - 2:
            return PredicateResult("s22-lemma21", False, graph6.encode(res.witness), checked)
    return PredicateResult("s22-lemma21", True, None, checked, " ".join(values))


def _fig2() -> PredicateResult:
    classes = enumerate_maximal_planar(6)
    if len(classes) != 2:
        return PredicateResult("s22-fig2", False, None, 0, f"{len(classes)} classes")
    checked = 0
    for g in classes:
        for x, y in g.edges():
            h = g.remove_edge(x, y)
            checked += 1
            if contains_double_star(h, S22) is None:
                return PredicateResult("s22-fig2", False, graph6.encode(h), checked)
    return PredicateResult("s22-fig2", True, None, checked, "2 classes")


def lemma_suite(suite: str, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> list[PredicateResult]:
    """Run one named suite (or ``"all"``); every result carries a graph6 counterexample on failure."""
    if suite == "all":
        return [r for s in SUITES for r in lemma_suite(s, samples, seed)]
    if suite == "s22-lemma21":
        return [_s22_ceiling()]
    if suite == "s22-fig2":
        return [_fig2()]
    if suite in EDGE_PREDICATES:
        p, _ = EDGE_PREDICATES[suite]
        return [_run_edge_predicate(suite, free_samples(p, samples, seed))]
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")

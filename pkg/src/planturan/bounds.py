"""Proven bounds, conjectured values and consistency reports.

All formulas are evaluated with integers and ``Fraction``; nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .constructions import matched_double_wheel_edges, s35_edge_count
from .doublestar import DoubleStarPattern


class UnsupportedPattern(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    lower: int | None
    upper: int | None
    source: str
    valid: bool
    lower_exact: Fraction | None = None
    upper_exact: Fraction | None = None
    clamped: bool = False

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"{self.source}: lower {self.lower} exceeds upper {self.upper}")

    def contains(self, value: int) -> bool:
        if self.lower is not None and value < self.lower:
            return False
        if self.upper is not None and value > self.upper:
            return False
        return True


THEOREM_PATTERNS = {key: f"bound-s{key[0]}{key[1]}" for key in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)]}


def _clamp(value: int) -> tuple[int, bool]:
    return (0, True) if value < 0 else (value, False)


def theorem_bounds(p: DoubleStarPattern, n: int) -> Bounds:
    key = (p.m, p.k)
    if key not in THEOREM_PATTERNS:
        raise UnsupportedPattern(f"no theorem bound for S_{{{p}}}")
    src = THEOREM_PATTERNS[key]
    if key == (2, 2):
        v = 2 * n - 4
        lo, c = _clamp(v)
        return Bounds(lo, lo, src, n >= 16, Fraction(v), Fraction(v), c)
    if key == (2, 3):
        lo, c = _clamp(2 * n - 4)
        return Bounds(lo, 2 * n, src, n >= 1, Fraction(2 * n - 4), Fraction(2 * n), c)
    if key == (2, 4):
        up = Fraction(17 * n, 7) - 2
        return Bounds(None, floor(up), src, n >= 12, upper_exact=up)
    if key in ((2, 5), (3, 4)):
        up = Fraction(20 * n, 7)
        return Bounds(None, floor(up), src, n >= 1, upper_exact=up)
    # (3, 3): the construction's parity-exact count is the lower bound
    low_exact = Fraction(5 * n - 10, 2) if n % 2 == 0 else Fraction(5 * n - 11, 2)
    lo, c = _clamp(int(low_exact))
    up = Fraction(5 * n, 2) - 2
    return Bounds(lo, floor(up), src, n >= 3, low_exact, up, c)


@dataclass(frozen=True)
class Conjecture:
    value: int
    exact: Fraction
    source: str
    asymptotic: bool = False


def conjecture(p: DoubleStarPattern, n: int) -> Conjecture | None:
    key = (p.m, p.k)
    if key == (2, 4):
        q = Fraction(15 * n, 7)
        return Conjecture(floor(q), q, "conj-s24")
    if key == (3, 3):
        if n < 3:
            return None
        if n <= 7:
            v = 3 * n - 6
        elif n == 8:
            v = 16
        elif n == 9:
            v = 18
        else:
            v = 5 * n // 2 - 5
        return Conjecture(v, Fraction(v), "conj-s33")
    if key == (3, 4):
        q = Fraction(5 * n, 2)
        return Conjecture(floor(q), q, "conj-s34")
    if key == (3, 5):
        q = Fraction(8 * n, 3)
        return Conjecture(floor(q), q, "conj-s35", asymptotic=True)
    return None


def conjectured_value(p: DoubleStarPattern, n: int) -> int | None:
    c = conjecture(p, n)
    return None if c is None else c.value


def _max_planar(r: int) -> int:
    return 3 * r - 6 if r >= 3 else (1 if r == 2 else 0)


def construction_value(p: DoubleStarPattern, n: int) -> tuple[int, str] | None:
    """Edge count of the known pattern-free planar construction at ``n``, if any."""
    key = (p.m, p.k)
    if key in ((2, 2), (2, 3)) and n >= 4:
        return 2 * n - 4, "k2star"
    if key == (3, 3) and n >= 4:
        return matched_double_wheel_edges(n), "double-wheel"
    if key == (2, 4) and n >= 7:
        # components on at most 7 vertices cannot hold the 8-vertex pattern
        return 15 * (n // 7) + _max_planar(n % 7), "tri7-copies"
    if key == (3, 4) and n >= 12:
        r = n % 12
        rest = _max_planar(r) if r <= 8 else matched_double_wheel_edges(r)
        return 30 * (n // 12) + rest, "icosa-copies"
    if key == (3, 5) and n >= 9 and n % 3 == 0:
        return s35_edge_count(n), "s35"
    return None


def s22_ceiling(p: DoubleStarPattern, n: int) -> int | None:
    if (p.m, p.k) == (2, 2) and n != 5:
        return 2 * n - 2
    return None


@dataclass
class BoundReport:
    n: int
    pattern: DoubleStarPattern
    exact: int | None
    theorem: Bounds | None
    conjecture: Conjecture | None
    construction: tuple[int, str] | None
    ceiling: int | None
    consistent: bool
    problems: list[str] = field(default_factory=list)

    def record(self) -> str:
        def fmt(x: object) -> str:
            return "-" if x is None else str(x)

        th = self.theorem
        return "\t".join(
            [
                str(self.n),
                str(self.pattern),
                fmt(self.exact),
                fmt(th.lower if th else None),
                fmt(th.upper if th else None),
                fmt(self.conjecture.value if self.conjecture else None),
                "true" if self.consistent else "false",
            ]
        )


RECORD_FIELDS = ("n", "pattern", "exact", "lower", "upper", "conjecture", "consistent")


def check_consistency(p: DoubleStarPattern, n: int, exact: int | None) -> BoundReport:
    try:
        th: Bounds | None = theorem_bounds(p, n)
    except UnsupportedPattern:
        th = None
    conj = conjecture(p, n)
    cons = construction_value(p, n)
    ceiling = s22_ceiling(p, n)
    problems = []
    if exact is not None:
        if th is not None and th.valid and not th.contains(exact):
            problems.append(f"exact {exact} outside {th.source} [{th.lower}, {th.upper}]")
        if ceiling is not None and exact > ceiling:
            problems.append(f"exact {exact} above S22 ceiling {ceiling}")
        if n >= 3 and exact > 3 * n - 6:
            problems.append(f"exact {exact} above planar maximum {3 * n - 6}")
        if cons is not None and cons[0] > exact:
            problems.append(f"construction {cons[1]} has {cons[0]} edges, above exact {exact}")
    return BoundReport(n, p, exact, th, conj, cons, ceiling, not problems, problems)


def format_table(reports: list[BoundReport]) -> str:
    header = ["n", "pattern", "exact", "lower", "upper", "valid", "conj", "constr", "ok"]
    rows = [header]
    for r in reports:
        th = r.theorem
        rows.append(
            [
                str(r.n),
                str(r.pattern),
                "-" if r.exact is None else str(r.exact),
                "-" if th is None or th.lower is None else str(th.lower),
                "-" if th is None or th.upper is None else str(th.upper),
                "-" if th is None else ("yes" if th.valid else "no"),
                "-" if r.conjecture is None else str(r.conjecture.value) + ("~" if r.conjecture.asymptotic else ""),
                "-" if r.construction is None else str(r.construction[0]),
                "yes" if r.consistent else "NO",
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows)

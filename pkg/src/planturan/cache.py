"""Append-only cache of exact results, one tab-separated record per line.

Columns: n, m, k, value, exact flag, witness graph6, engine version. A record
is trusted only if its version matches and its witness re-verifies.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from . import graph6
from .doublestar import DoubleStarPattern, is_free
from .planarity import is_planar

ENGINE_VERSION = "1"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CacheRecord:
    n: int
    pattern: DoubleStarPattern
    value: int
    exact: bool
    witness: str
    version: str

    def line(self) -> str:
        return "\t".join(
            [
                str(self.n),
                str(self.pattern.m),
                str(self.pattern.k),
                str(self.value),
                "true" if self.exact else "false",
                self.witness,
                self.version,
            ]
        )

    @classmethod
    def parse(cls, line: str) -> CacheRecord:
        n, m, k, value, exact, witness, version = line.rstrip("\n").split("\t")
        if exact not in ("true", "false"):
            raise ValueError(f"bad exact flag {exact!r}")
        return cls(int(n), DoubleStarPattern(int(m), int(k)), int(value), exact == "true", witness, version)

    def verifies(self) -> bool:
        try:
            g = graph6.decode(self.witness)
        except ValueError:
            return False
        return (
            g.n == self.n
            and g.edge_count == self.value
            and is_planar(g)
            and is_free(g, self.pattern)
        )


class ResultCache:
    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)

    def records(self) -> list[CacheRecord]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open(encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip() or line.startswith("#"):
                    continue
                try:
                    out.append(CacheRecord.parse(line))
                except ValueError as exc:
                    log.warning("%s:%d: skipping bad cache record (%s)", self.path, lineno, exc)
        return out

    def lookup(self, n: int, pattern: DoubleStarPattern) -> CacheRecord | None:
        """Latest exact record for ``(n, pattern)`` from this engine version whose witness checks out."""
        for rec in reversed(self.records()):
            if rec.n != n or rec.pattern != pattern or not rec.exact:
                continue
            if rec.version != ENGINE_VERSION:
                continue
            if rec.verifies():
                return rec
            log.warning("cache witness for n=%d S_%s failed verification", n, pattern)
        return None

    def append(self, rec: CacheRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="ascii") as fh:
            fh.write(rec.line() + "\n")

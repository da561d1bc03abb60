"""Command-line front end.

Exit codes: 0 success, 1 a violation was found (containment, nonplanarity,
failed lemma or inconsistent bound), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Sequence, TextIO

from . import graph6
from .bounds import RECORD_FIELDS, check_consistency, format_table
from .cache import ENGINE_VERSION, CacheRecord, ResultCache
from .constructions import FAMILIES, ConstructionError, build_family
from .doublestar import DoubleStarPattern, PatternError, contains_double_star
from .graph import GraphError
from .lemmas import SUITES, lemma_suite
from .planarity import is_planar
from .search import SearchConfig, exact_planar_turan

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _pattern(text: str, out: TextIO) -> DoubleStarPattern:
    p = DoubleStarPattern.parse(text)
    raw = text.replace(" ", "")
    if raw != str(p):
        out.write(f"note: pattern {raw} canonicalized to {p}\n")
    return p


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise UsageError(f"empty or invalid range {text!r}")
    return a, b


def _exact_value(n, p, threads, budget, cache, out=None):
    """Return (value, exact, result-or-None); consults and feeds the cache."""
    if cache is not None:
        rec = cache.lookup(n, p)
        if rec is not None:
            return rec.value, True, None
    res = exact_planar_turan(n, p, SearchConfig(worker_count=threads, node_budget=budget))
    if cache is not None and res.n <= graph6.MAX_GRAPH6_VERTICES:
        cache.append(
            CacheRecord(n, p, res.value, res.exact, graph6.encode(res.witness), ENGINE_VERSION)
        )
    return res.value, res.exact, res


def cmd_exact(args, out: TextIO) -> int:
    p = _pattern(args.pattern, out)
    cache = ResultCache(args.cache) if args.cache else None
    value, exact, res = _exact_value(args.n, p, args.threads, args.budget, cache)
    out.write(f"pattern={p} n={args.n}\n")
    out.write(f"value={value} exact={'true' if exact else 'false'}\n")
    if res is None:
        rec = cache.lookup(args.n, p)
        out.write("source=cache\n")
        out.write(f"witness {rec.witness}\n")
        return EXIT_OK
    out.write(f"extremal_classes={res.extremal_count}\n")
    out.write(f"nodes={res.nodes_explored}\n")
    for g in res.extremal:
        out.write(f"witness {graph6.encode(g)}\n")
    print(f"elapsed={res.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_construct(args, out: TextIO) -> int:
    try:
        report = build_family(args.family, args.n, args.copies)
    except ConstructionError as exc:
        out.write(f"FAILED {exc}\n")
        return EXIT_VIOLATION
    g = report.graph
    if g.n <= graph6.MAX_GRAPH6_VERTICES:
        out.write(graph6.encode(g) + "\n")
    else:
        out.write(f"# graph6 unavailable for n={g.n} > {graph6.MAX_GRAPH6_VERTICES}\n")
    out.write(report.summary() + "\n")
    profile = " ".join(f"{d}:{c}" for d, c in report.degree_profile.items())
    out.write(f"degrees {profile}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO, inp: TextIO) -> int:
    p = _pattern(args.pattern, out)
    violation = bad_input = False
    for lineno, text in graph6.read_lines(inp):
        try:
            g = graph6.decode(text)
        except GraphError as exc:
            out.write(f"line {lineno}: ERROR {exc}\n")
            bad_input = True
            continue
        if args.require_planar and not is_planar(g):
            out.write(f"line {lineno}: NONPLANAR\n")
            violation = True
            continue
        w = contains_double_star(g, p)
        if w is None:
            out.write(f"line {lineno}: FREE\n")
        else:
            out.write(f"line {lineno}: CONTAINS {w}\n")
            violation = True
    if bad_input:
        return EXIT_USAGE
    return EXIT_VIOLATION if violation else EXIT_OK


def cmd_bounds(args, out: TextIO) -> int:
    p = _pattern(args.pattern, out)
    a, b = _range(args.range)
    cache = ResultCache(args.cache) if args.cache else None
    reports = []
    for n in range(a, b + 1):
        exact = None
        if args.exact_upto is not None and n <= args.exact_upto:
            value, is_exact, _ = _exact_value(n, p, args.threads, None, cache)
            exact = value if is_exact else None
        reports.append(check_consistency(p, n, exact))
    if args.records:
        out.write("# " + "\t".join(RECORD_FIELDS) + "\n")
        for r in reports:
            out.write(r.record() + "\n")
    else:
        out.write(format_table(reports) + "\n")
        for r in reports:
            for problem in r.problems:
                out.write(f"n={r.n}: {problem}\n")
    return EXIT_OK if all(r.consistent for r in reports) else EXIT_VIOLATION


def cmd_lemmas(args, out: TextIO) -> int:
    results = lemma_suite(args.suite, samples=args.samples, seed=args.seed)
    for r in results:
        out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planturan", description="Planar Turán numbers of double stars."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    threads = os.cpu_count() or 1

    ex = sub.add_parser("exact", help="compute ex_P(n, S_{m,k}) exactly")
    ex.add_argument("--n", type=int, required=True)
    ex.add_argument("--pattern", required=True, help="M,K")
    ex.add_argument("--threads", type=int, default=threads)
    ex.add_argument("--budget", type=int, default=None, help="node budget")
    ex.add_argument("--cache", default=None, help="append-only result cache file")

    co = sub.add_parser("construct", help="build and certify a construction")
    co.add_argument("--family", required=True, choices=FAMILIES)
    co.add_argument("--n", type=int, default=None)
    co.add_argument("--copies", type=int, default=1)

    ve = sub.add_parser("verify", help="check graph6 lines from stdin for freeness")
    ve.add_argument("--pattern", required=True, help="M,K")
    ve.add_argument("--require-planar", action="store_true")

    bo = sub.add_parser("bounds", help="tabulate theorem bounds against exact values")
    bo.add_argument("--pattern", required=True, help="M,K")
    bo.add_argument("--range", required=True, help="A..B")
    bo.add_argument("--exact-upto", type=int, default=None)
    bo.add_argument("--threads", type=int, default=threads)
    bo.add_argument("--cache", default=None)
    bo.add_argument("--records", action="store_true", help="tab-separated records instead of a table")

    le = sub.add_parser("lemmas", help="run a structural lemma suite")
    le.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    le.add_argument("--samples", type=int, default=1000)
    le.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "exact":
            return cmd_exact(args, out)
        if args.command == "construct":
            return cmd_construct(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, inp)
        if args.command == "bounds":
            return cmd_bounds(args, out)
        return cmd_lemmas(args, out)
    except (UsageError, PatternError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

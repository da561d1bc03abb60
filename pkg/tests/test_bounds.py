from fractions import Fraction

import pytest

from planturan.bounds import (
    Bounds,
    UnsupportedPattern,
    check_consistency,
    conjecture,
    conjectured_value,
    construction_value,
    format_table,
    theorem_bounds,
)
from planturan.doublestar import DoubleStarPattern as P
from planturan.search import exact_planar_turan


def test_theorem_examples():
    b = theorem_bounds(P(2, 2), 20)
    assert (b.lower, b.upper, b.valid) == (36, 36, True)
    b = theorem_bounds(P(3, 3), 10)
    assert (b.lower, b.upper) == (20, 23)
    assert theorem_bounds(P(2, 4), 14).upper == 32


def test_validity_ranges():
    assert not theorem_bounds(P(2, 2), 15).valid
    assert not theorem_bounds(P(2, 4), 11).valid
    assert theorem_bounds(P(2, 4), 12).valid
    assert not theorem_bounds(P(3, 3), 2).valid


def test_s33_lower_is_parity_exact():
    assert theorem_bounds(P(3, 3), 11).lower == 22
    assert theorem_bounds(P(3, 3), 11).lower_exact == Fraction(22)


def test_clamped_lower():
    b = theorem_bounds(P(2, 3), 1)
    assert b.lower == 0 and b.clamped and b.lower_exact == -2
    assert not theorem_bounds(P(2, 3), 5).clamped


def test_unsupported_pattern():
    with pytest.raises(UnsupportedPattern):
        theorem_bounds(P(1, 1), 5)


def test_no_floats():
    for key in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)]:
        for n in range(1, 40):
            b = theorem_bounds(P(*key), n)
            for x in (b.lower, b.upper, b.lower_exact, b.upper_exact):
                assert not isinstance(x, float)
    for key in [(2, 4), (3, 3), (3, 4), (3, 5)]:
        for n in range(3, 40):
            assert not isinstance(conjecture(P(*key), n).exact, float)


def test_bounds_invariant():
    with pytest.raises(ValueError):
        Bounds(5, 4, "x", True)


def test_conjecture_examples():
    assert conjectured_value(P(3, 3), 8) == 16
    assert conjectured_value(P(3, 3), 5) == 9
    assert conjectured_value(P(3, 4), 12) == 30
    assert conjectured_value(P(3, 3), 9) == 18
    assert conjectured_value(P(3, 3), 10) == 20
    assert conjectured_value(P(2, 4), 21) == 45
    assert conjecture(P(3, 5), 27).asymptotic
    assert conjectured_value(P(2, 2), 10) is None


def test_consistency_examples():
    r = check_consistency(P(2, 2), 5, 9)
    assert r.consistent and r.ceiling is None
    r = check_consistency(P(2, 2), 4, 6)
    assert r.consistent and r.ceiling == 6
    r = check_consistency(P(3, 3), 7, 15)
    assert r.consistent and r.theorem.upper == 15 and r.conjecture.value == 15


def test_inconsistency_is_reported():
    r = check_consistency(P(2, 3), 6, 13)
    assert not r.consistent and r.problems
    r = check_consistency(P(2, 2), 6, 11)
    assert not r.consistent


def test_construction_never_beats_exact():
    for key, top in [((2, 2), 8), ((2, 3), 8), ((3, 3), 7), ((2, 4), 7)]:
        for n in range(1, top + 1):
            c = construction_value(P(*key), n)
            if c is not None:
                assert c[0] <= exact_planar_turan(n, P(*key)).value


def test_s33_conjecture_matches_exact_small_n():
    for n in range(3, 8):
        assert conjectured_value(P(3, 3), n) == exact_planar_turan(n, P(3, 3)).value == 3 * n - 6


def test_records_and_table():
    reports = [check_consistency(P(2, 2), n, None) for n in (4, 20)]
    assert reports[1].record() == "20\t2,2\t-\t36\t36\t-\ttrue"
    table = format_table(reports)
    assert table.splitlines()[0].split()[0] == "n"
    assert len(table.splitlines()) == 3

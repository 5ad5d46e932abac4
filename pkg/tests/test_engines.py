import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings

from hesscat.boundaries import custom_boundary, fuss_boundary, rational_boundary
from hesscat.closed_forms import fuss_catalan
from hesscat.engines import (
    Engine,
    NotHessenbergError,
    ZeroPivot,
    det_all,
    det_elimination,
    det_fraction_free,
    det_recurrence,
    determinant,
)
from hesscat.hessenberg import build_path_matrix
from oracles import leibniz_det
from strategies import boundary_pairs

NINE = custom_boundary([0, 0, 0, 1, 1, 2, 2, 2, 3], [0] * 9)


def build(bp):
    return build_path_matrix(bp)


def test_recurrence_catalan():
    assert det_recurrence(build(fuss_boundary(1, 3))).value == 5
    assert det_recurrence(build(fuss_boundary(1, 4))).value == 14
    assert det_recurrence(build(fuss_boundary(1, 0))).value == 1


def test_elimination_four_by_four():
    report = det_elimination(build(rational_boundary(2, 1, 2)))
    assert report.value == 3
    assert report.diagonal == (1, 1, 2, Fraction(3, 2))


def test_elimination_nine_by_nine():
    report = det_elimination(build(NINE))
    assert report.value == 43
    displayed = ["1", "1", "1", "2", "3/2", "7/3", "12/7", "18/12", "43/18"]
    assert report.diagonal == tuple(Fraction(x) for x in displayed)


def test_elimination_one_by_one():
    report = det_elimination([[1]])
    assert report.value == 1
    assert report.diagonal == (1,)


def test_fraction_free_examples():
    assert det_fraction_free(build(fuss_boundary(2, 2))).value == 3
    assert det_fraction_free(build(fuss_boundary(3, 3))).value == 22
    assert det_fraction_free([[1]]).value == 1
    assert det_fraction_free([]).value == 1


def test_fraction_free_general_matrices():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert det_fraction_free(rows).value == leibniz_det(rows)


def test_fraction_free_needs_row_swap():
    assert det_fraction_free([[0, 1], [1, 0]]).value == -1
    assert det_fraction_free([[0, 0, 1], [0, 1, 0], [1, 0, 0]]).value == -1
    assert det_fraction_free([[0, 2], [0, 3]]).value == 0


def test_zero_pivot():
    M = [[0, 1], [1, 0]]
    with pytest.raises(ZeroPivot) as info:
        det_elimination(M)
    assert info.value.index == 1
    report = determinant(M, "elimination")
    assert report.value == -1
    assert report.fallback
    result = det_all(M)
    assert result.agree
    assert result.reports[Engine.ELIMINATION].fallback


def test_zero_last_pivot_is_fine():
    assert det_elimination([[1, 1], [1, 1]]).value == 0


def test_rejects_non_hessenberg():
    bad = [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    with pytest.raises(NotHessenbergError):
        det_recurrence(bad)
    with pytest.raises(NotHessenbergError):
        det_elimination(bad)
    assert det_fraction_free(bad).value == 1


def test_det_all_examples():
    for bp, value in [(rational_boundary(7, 16, 1), 10659), (fuss_boundary(1, 2), 2), (fuss_boundary(1, 0), 1)]:
        result = det_all(build(bp))
        assert result.agree
        assert {r.value for r in result.reports.values()} == {value}
        assert result.value == value


def test_engine_names():
    assert Engine.parse("fraction-free") is Engine.FRACTION_FREE
    assert Engine.FRACTION_FREE.cli_name == "fraction-free"
    with pytest.raises(ValueError):
        Engine.parse("lu")


@settings(max_examples=300, deadline=None)
@given(boundary_pairs(min_n=0, max_n=12, max_height=12))
def test_engines_agree(bp):
    M = build(bp)
    rec = det_recurrence(M).value
    assert det_fraction_free(M).value == rec
    try:
        report = det_elimination(M)
    except ZeroPivot:
        return
    assert report.value == rec
    assert prod(report.diagonal, start=Fraction(1)) == rec


@settings(max_examples=60, deadline=None)
@given(boundary_pairs(min_n=1, max_n=6, max_height=8))
def test_recurrence_matches_leibniz(bp):
    M = build(bp)
    assert det_recurrence(M).value == leibniz_det(M.entries)


@pytest.mark.parametrize("k", range(1, 6))
def test_recurrence_reproduces_fuss(k):
    for n in range(11):
        assert det_recurrence(build(fuss_boundary(k, n))).value == fuss_catalan(k, n)


def test_pivots_positive_on_families():
    # observed, not guaranteed
    for m, r in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (7, 16)]:
        for n in range(1, 4):
            report = det_elimination(build(rational_boundary(m, r, n)))
            assert all(p > 0 for p in report.diagonal)

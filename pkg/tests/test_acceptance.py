"""Exit criteria, one test each, with wall-clock budgets.

Each test prints a single PASS/FAIL line, collected into the pytest
terminal summary under "acceptance criteria".
"""
import io
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import gcd, prod

import pytest

from conftest import ACCEPTANCE_LINES
from hesscat import (
    Engine,
    ZeroPivot,
    bizley_count,
    build_path_matrix,
    catalan,
    count_below_line,
    count_boundary_paths,
    custom_boundary,
    det_all,
    det_elimination,
    det_fraction_free,
    det_recurrence,
    fuss_boundary,
    fuss_catalan,
    rational_boundary,
)
from hesscat.cli import main
from oracles import random_boundary

ENGINES = (det_recurrence, det_elimination, det_fraction_free)


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL  AC{number} {title}: {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget
    ACCEPTANCE_LINES.append(
        f"{'PASS' if ok else 'FAIL'}  AC{number} {title} ({elapsed:.2f}s, budget {budget}s)"
    )
    print(ACCEPTANCE_LINES[-1])
    assert ok, f"took {elapsed:.2f}s, budget {budget}s"


def test_ac1_catalan_regression():
    with criterion(1, "Catalan determinants and closed form", 1):
        dets = [det_recurrence(build_path_matrix(fuss_boundary(1, n))).value for n in range(1, 5)]
        assert dets == [1, 2, 5, 14]
        assert [catalan(n) for n in range(11)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


@pytest.mark.parametrize(
    "number, k, expected, budget",
    [
        (2, 3, [1, 4, 22, 140, 969, 7084, 53820, 420732, 3362260, 27343888], 5),
        (3, 2, [1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715], 5),
    ],
)
def test_ac2_ac3_fuss_regression(number, k, expected, budget):
    with criterion(number, f"k={k} Fuss-Catalan via every route", budget):
        for engine in ENGINES:
            got = [engine(build_path_matrix(fuss_boundary(k, n))).value for n in range(1, 11)]
            assert got == expected, engine.__name__
        assert [fuss_catalan(k, n) for n in range(1, 11)] == expected


def test_ac4_rational_flagship():
    with criterion(4, "W_1(7, 16) = 10659 on all routes", 2):
        M = build_path_matrix(rational_boundary(7, 16, 1))
        assert [engine(M).value for engine in ENGINES] == [10659] * 3
        assert bizley_count(7, 16, 1) == 10659
        assert count_below_line(7, 16, 1).value == 10659


def test_ac5_elimination_fidelity():
    with criterion(5, "elimination diagonals of the 4x4 and 9x9 instances", 1):
        small = det_elimination(build_path_matrix(rational_boundary(2, 1, 2)))
        assert small.diagonal == (1, 1, 2, Fraction(3, 2))
        assert small.value == 3
        big = det_elimination(build_path_matrix(custom_boundary([0, 0, 0, 1, 1, 2, 2, 2, 3], [0] * 9)))
        assert big.value == 43
        assert big.diagonal == tuple(
            Fraction(x) for x in ["1", "1", "1", "2", "3/2", "7/3", "12/7", "3/2", "43/18"]
        )
        assert big.diagonal[7] == Fraction(18, 12)


def test_ac6_path_determinant_identity():
    with criterion(6, "paths = determinants on 500 random boundaries", 60):
        rng = random.Random(20261018)
        failures = []
        eliminated = 0
        for _ in range(500):
            a, b = random_boundary(rng, max_n=8, max_height=10)
            bp = custom_boundary(a, b)
            M = build_path_matrix(bp)
            paths = count_boundary_paths(bp).value
            rec = det_recurrence(M).value
            ff = det_fraction_free(M).value
            ok = paths == rec == ff
            try:
                report = det_elimination(M)
            except ZeroPivot:
                pass
            else:
                eliminated += 1
                ok &= report.value == rec and prod(report.diagonal, start=Fraction(1)) == rec
            if not ok:
                failures.append((a, b))
        assert not failures, failures[:5]
        assert eliminated > 0


def test_ac7_bizley_consistency():
    with criterion(7, "Bizley sum vs determinant and Fuss-Catalan", 60):
        checked = 0
        for m in range(1, 6):
            for r in range(1, 6):
                if gcd(m, r) != 1:
                    continue
                for n in range(0, 18 // m + 1):
                    det = det_recurrence(build_path_matrix(rational_boundary(m, r, n))).value
                    assert bizley_count(m, r, n) == det, (m, r, n)
                    checked += 1
        assert checked > 0
        for k in range(1, 5):
            for n in range(9):
                assert bizley_count(1, k, n) == fuss_catalan(k, n)


def test_ac8_large_instance():
    with criterion(8, "fuss(2, 200) by recurrence and bench agreement", 30):
        M = build_path_matrix(fuss_boundary(2, 200))
        expected = fuss_catalan(2, 200)
        assert det_recurrence(M).value == expected
        result = det_all(M)
        assert result.agree
        assert result.reports[Engine.FRACTION_FREE].value == expected

        out = io.StringIO()
        code = main(["bench", "--kind", "fuss", "--k", "2", "--n", "200",
                     "--engines", "recurrence,elimination,fraction-free",
                     "--repetitions", "1", "--format", "csv"], out=out)
        assert code == 0
        rows = [line.split(",") for line in out.getvalue().splitlines()[1:]]
        assert len(rows) == 3
        assert {int(row[4]) for row in rows} == {expected}

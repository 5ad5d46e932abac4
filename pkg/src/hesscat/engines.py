"""Exact determinant engines for normalized upper Hessenberg integer matrices.

Three independent routes:

* ``det_recurrence``: division-free expansion along the last column,
  O(n^2) integer operations, exploits the unit subdiagonal.
* ``det_elimination``: forward elimination over rationals that subtracts
  ``1/p_i`` times row ``i`` from row ``i + 1``; keeps the resulting diagonal.
* ``det_fraction_free``: one-step fraction-free (Bareiss) elimination with
  row pivoting; needs no Hessenberg structure and serves as referee.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .hessenberg import MatrixLike, is_normalized_hessenberg, rows_of


class Engine(str, enum.Enum):
    RECURRENCE = "recurrence"
    ELIMINATION = "elimination"
    FRACTION_FREE = "fraction_free"

    @classmethod
    def parse(cls, name: "str | Engine") -> "Engine":
        if isinstance(name, Engine):
            return name
        try:
            return cls(name.strip().lower().replace("-", "_"))
        except ValueError:
            choices = ", ".join(e.cli_name for e in cls)
            raise ValueError(f"unknown engine {name!r} (choose from {choices})") from None

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")


class NotHessenbergError(ValueError):
    pass


class ZeroPivot(ArithmeticError):
    """Elimination met a vanishing pivot before the last row.

    ``index`` is 1-based. A zero pivot does not imply a zero determinant
    here, so the caller has to fall back to another engine.
    """

    def __init__(self, index: int):
        super().__init__(f"zero pivot at row {index}")
        self.index = index


@dataclass(frozen=True)
class DetReport:
    value: int
    engine: Engine
    diagonal: tuple[Fraction, ...] | None = None
    elapsed: float = 0.0
    # set when elimination hit a ZeroPivot and value came from the recurrence
    fallback: str | None = None


@dataclass(frozen=True)
class DetAll:
    reports: dict[Engine, DetReport] = field(default_factory=dict)
    agree: bool = True

    @property
    def value(self) -> int:
        return self.reports[Engine.RECURRENCE].value


def _require_hessenberg(M: MatrixLike) -> tuple[tuple[int, ...], ...]:
    rows = rows_of(M)
    if not is_normalized_hessenberg(rows):
        raise NotHessenbergError("matrix is not normalized upper Hessenberg")
    return rows


def det_recurrence(M: MatrixLike) -> DetReport:
    """Determinant via ``d_t = sum_k (-1)**(t-k) * h[k][t] * d[k-1]``, ``d_0 = 1``."""
    start = time.perf_counter()
    rows = _require_hessenberg(M)
    n = len(rows)
    d = [1]
    for t in range(n):
        acc = 0
        sign = 1
        # k runs t, t-1, ..., 0 so the sign alternates starting from +
        for k in range(t, -1, -1):
            h = rows[k][t]
            if h:
                acc += sign * h * d[k]
            sign = -sign
        d.append(acc)
    return DetReport(d[n], Engine.RECURRENCE, elapsed=time.perf_counter() - start)


def det_elimination(M: MatrixLike) -> DetReport:
    """Reduce to upper triangular form row by row and multiply the diagonal.

    Only the row directly below each pivot has a nonzero entry in the pivot
    column, so each step touches a single row.
    """
    start = time.perf_counter()
    rows = _require_hessenberg(M)
    n = len(rows)
    work = [[Fraction(x) for x in row] for row in rows]
    for i in range(n - 1):
        pivot = work[i][i]
        if pivot == 0:
            raise ZeroPivot(i + 1)
        below = work[i + 1]
        factor = below[i] / pivot
        upper = work[i]
        for j in range(i, n):
            if upper[j]:
                below[j] -= factor * upper[j]
    diagonal = tuple(work[i][i] for i in range(n))
    value = prod(diagonal, start=Fraction(1))
    # the product of a rational triangularization of an integer matrix is integral
    assert value.denominator == 1, value
    return DetReport(
        int(value), Engine.ELIMINATION, diagonal=diagonal, elapsed=time.perf_counter() - start
    )


def det_fraction_free(M: MatrixLike) -> DetReport:
    """Bareiss elimination on any square integer matrix, with row swaps."""
    start = time.perf_counter()
    work = [list(row) for row in rows_of(M)]
    n = len(work)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for p in range(k + 1, n):
                if work[p][k] != 0:
                    work[k], work[p] = work[p], work[k]
                    sign = -sign
                    break
            else:
                return DetReport(0, Engine.FRACTION_FREE, elapsed=time.perf_counter() - start)
        pivot_row = work[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = work[i]
            lead = row[k]
            if lead:
                for j in range(k + 1, n):
                    row[j] = (pivot * row[j] - lead * pivot_row[j]) // prev
            else:
                for j in range(k + 1, n):
                    if row[j]:
                        row[j] = pivot * row[j] // prev
            row[k] = 0
        prev = pivot
    value = sign * work[n - 1][n - 1] if n else 1
    return DetReport(value, Engine.FRACTION_FREE, elapsed=time.perf_counter() - start)


_RUNNERS = {
    Engine.RECURRENCE: det_recurrence,
    Engine.ELIMINATION: det_elimination,
    Engine.FRACTION_FREE: det_fraction_free,
}


def determinant(M: MatrixLike, engine: "str | Engine" = Engine.RECURRENCE) -> DetReport:
    """Run one engine; elimination falls back to the recurrence on a zero pivot."""
    engine = Engine.parse(engine)
    if engine is Engine.ELIMINATION:
        try:
            return det_elimination(M)
        except ZeroPivot as exc:
            rec = det_recurrence(M)
            return DetReport(
                rec.value, Engine.ELIMINATION, elapsed=rec.elapsed, fallback=f"{exc}; used recurrence"
            )
    return _RUNNERS[engine](M)


def det_all(M: MatrixLike) -> DetAll:
    _require_hessenberg(M)
    reports = {engine: determinant(M, engine) for engine in Engine}
    values = {r.value for r in reports.values()}
    return DetAll(reports, agree=len(values) == 1)

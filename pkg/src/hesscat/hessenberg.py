"""Binomial-coefficient matrices of normalized upper Hessenberg form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .boundaries import BoundaryPair
from .exact import binomial


@dataclass(frozen=True)
class BinomialHessenberg:
    """Immutable square integer matrix built from a :class:`BoundaryPair`.

    ``entries`` is stored dense and row-major as a tuple of tuples, so one
    instance can be handed to several determinant engines without copying.
    """

    entries: tuple[tuple[int, ...], ...]
    source: BoundaryPair | None = None

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


MatrixLike = Union[BinomialHessenberg, Sequence[Sequence[int]]]


def rows_of(M: MatrixLike) -> tuple[tuple[int, ...], ...]:
    if isinstance(M, BinomialHessenberg):
        return M.entries
    rows = tuple(tuple(row) for row in M)
    for row in rows:
        if len(row) != len(rows):
            raise ValueError(f"matrix is not square: {len(rows)} rows, a row of length {len(row)}")
    return rows


def build_path_matrix(bp: BoundaryPair) -> BinomialHessenberg:
    """Entry (i, j) is ``binomial(a_i - b_j + 1, j - i + 1)``."""
    n = bp.n
    entries = tuple(
        tuple(binomial(bp.a[i] - bp.b[j] + 1, j - i + 1) for j in range(n)) for i in range(n)
    )
    return BinomialHessenberg(entries, bp)


def is_normalized_hessenberg(M: MatrixLike) -> bool:
    """True iff zeros lie below the subdiagonal and the subdiagonal is all ones."""
    try:
        rows = rows_of(M)
    except ValueError:
        return False
    n = len(rows)
    for i in range(1, n):
        if rows[i][i - 1] != 1:
            return False
        for j in range(i - 1):
            if rows[i][j] != 0:
                return False
    return True

"""Brute-force lattice-path counters.

Both counters are plain dynamic programs over exact integers and share no
code with the determinant machinery, which is what makes them useful as
ground truth.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Any

from .boundaries import BoundaryPair


class PathModel(str, enum.Enum):
    BOUNDARY_STEPS = "boundary_steps"
    BELOW_LINE = "below_line"


@dataclass(frozen=True)
class PathCount:
    value: int
    model: PathModel
    parameters: dict[str, Any] = field(default_factory=dict)

    def __int__(self) -> int:
        return self.value


def count_boundary_paths(bp: BoundaryPair) -> PathCount:
    """Count E/N paths from ``(0, b_1)`` to ``(n, a_n)`` with the i-th E step
    at a height in ``[b_i, a_i]``.

    After the last E step the path climbs straight to ``a_n``. A path is
    therefore a nondecreasing height sequence ``h_1 <= ... <= h_n`` with
    ``b_i <= h_i <= a_i``.
    """
    n = bp.n
    if n == 0:
        raise ValueError("empty boundary has no path endpoint")
    a, b = bp.a, bp.b
    # ways[h - lo] = number of admissible prefixes whose latest E step is at height h
    lo = b[0]
    ways = [1] * (a[0] - lo + 1)
    for i in range(1, n):
        cumulative = list(accumulate(ways))
        new_lo = b[i]
        new = []
        for h in range(new_lo, a[i] + 1):
            top = min(h, lo + len(ways) - 1) - lo
            new.append(cumulative[top] if top >= 0 else 0)
        lo, ways = new_lo, new
    return PathCount(sum(ways), PathModel.BOUNDARY_STEPS, {"a": bp.a, "b": bp.b})


def count_below_line(m: int, r: int, n: int) -> PathCount:
    """Count monotone paths (0, 0) -> (mn, rn) whose every point has ``m*y <= r*x``."""
    if m < 1 or r < 1:
        raise ValueError(f"m and r must be positive, got m={m}, r={r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    width, height = m * n, r * n
    params = {"m": m, "r": r, "n": n}
    # column[y] = paths reaching (x, y). Entering column x, it still holds
    # column x-1, which is exactly the E-step contribution.
    column = [0] * (height + 1)
    column[0] = 1
    for x in range(width + 1):
        for y in range(height + 1):
            if m * y > r * x:
                column[y] = 0
            elif y > 0:
                column[y] += column[y - 1]
    return PathCount(column[height], PathModel.BELOW_LINE, params)

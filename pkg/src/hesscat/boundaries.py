"""Boundary sequences bounding the height of each horizontal path step."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class BoundaryError(ValueError):
    """Raised for boundary sequences that violate the ordering invariants."""


@dataclass(frozen=True)
class BoundaryPair:
    """Upper heights ``a`` and lower heights ``b``, one pair per horizontal step.

    Both sequences are nondecreasing, equally long, and ``a[i] >= b[i]``.
    Validated on construction.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise BoundaryError(f"length mismatch: len(a)={len(self.a)}, len(b)={len(self.b)}")
        for name, seq in (("a", self.a), ("b", self.b)):
            for i in range(1, len(seq)):
                if seq[i] < seq[i - 1]:
                    raise BoundaryError(
                        f"{name} is not nondecreasing at index {i + 1}: {seq[i - 1]} > {seq[i]}"
                    )
        for i, (hi, lo) in enumerate(zip(self.a, self.b), start=1):
            if hi < lo:
                raise BoundaryError(f"a_{i} = {hi} < b_{i} = {lo}")

    def __len__(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.a)


def custom_boundary(a: Sequence[int], b: Sequence[int]) -> BoundaryPair:
    return BoundaryPair(tuple(a), tuple(b))


def fuss_boundary(k: int, n: int) -> BoundaryPair:
    """Heights ``a_i = k(i-1)`` over a zero floor, for paths below ``y = kx``."""
    if k <= 0:
        raise BoundaryError(f"k must be a positive integer, got {k}")
    if n < 0:
        raise BoundaryError(f"n must be nonnegative, got {n}")
    return BoundaryPair(tuple(k * i for i in range(n)), (0,) * n)


def rational_boundary(m: int, r: int, n: int) -> BoundaryPair:
    """Boundary of length ``m*n`` for paths weakly below ``y = (r/m) x``.

    ``a_i = r*floor((i-1)/m) + floor(r*(i - m*floor((i-1)/m) - 1)/m)``,
    which equals ``floor(r*(i-1)/m)``: the highest lattice point on or
    under the line at ``x = i - 1``.
    """
    if m <= 0 or r <= 0:
        raise BoundaryError(f"m and r must be positive, got m={m}, r={r}")
    if n < 0:
        raise BoundaryError(f"n must be nonnegative, got {n}")
    if math.gcd(m, r) != 1:
        raise BoundaryError(f"m={m} and r={r} are not coprime")
    a = []
    for i in range(1, m * n + 1):
        block = (i - 1) // m
        a.append(r * block + (r * (i - m * block - 1)) // m)
    return BoundaryPair(tuple(a), (0,) * (m * n))
